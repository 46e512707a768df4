"""The ten-case analysis of three-map sets.

A finite-orbit point of S = {f1, f2, f3} enters, for each map, a fixed
point, a 2-cycle or a 3-cycle (longer periods are excluded by the named
axiom), so the triple reduces to two simultaneous pair classifications.
The subcases pair up the options of the two relevant pair lemmas, equate
the shared data, and dispose of what is left: a symbolic coefficient
collision, an equation with no rational roots, a delegated elliptic-curve
argument, or a concrete tuple decided by complete basepoint enumeration.
Every exclusion carries a re-verifiable witness (a composition word and a
point failing the iterate criterion, or a collision deduction).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..dynamics import MapSet, finite_orbit_points, word_str
from ..elliptic import MAZUR_CERTIFICATE, RANK_ZERO_CERTIFICATE, \
    c_rational_points, preimage_check, verify_curve_map
from ..families import FamilyDef, family_by_id
from ..polynomials import BiPoly, UniPoly
from ..ratfunc import RatFunc
from ..rationals import rat, rat_str
from ..roots import rational_roots
from .reports import CaseReport, fmt_pair
from .symbolic import ParamTuple, find_exclusion_relation
from .lemmas import _dispose_tuple

__all__ = ["verify_theorem_case", "CASE_DESCRIPTIONS"]

CASE_DESCRIPTIONS = {
    1: "the orbit enters a fixed point for every map",
    2: "fixed points for two maps, a 2-cycle for the third",
    3: "fixed points for two maps, a 3-cycle for the third",
    4: "a fixed point for one map, 2-cycles for the other two",
    5: "a fixed point for one map, 3-cycles for the other two",
    6: "a fixed point, a 2-cycle and a 3-cycle",
    7: "the orbit enters a 2-cycle for every map",
    8: "3-cycles for every map",
    9: "2-cycles for two maps, a 3-cycle for the third",
    10: "a 2-cycle for one map, 3-cycles for the other two",
}


# ---------------------------------------------------------------------------
# options of the pair lemmas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Option:
    kind: str  # "family" | "pair"
    label: str
    family: FamilyDef | None = None
    pair: tuple[Fraction, Fraction] | None = None


def _fam(fid: str) -> Option:
    return Option("family", fid, family=family_by_id(fid))


def _pr(a: str, b: str) -> Option:
    return Option("pair", f"({a}, {b})", pair=(rat(a), rat(b)))


def _options_11() -> tuple[Option, Option, list[Option]]:
    return (_fam("F-11a"), _fam("F-11b"),
            [_pr("-21/16", "-5/16"), _pr("3/16", "-5/16")])


def _options_12() -> tuple[Option, Option, list[Option]]:
    return (_fam("F-12a"), _fam("F-12b"),
            [_pr("-5/16", "-13/16"), _pr("-21/16", "-13/16")])


def _options_22() -> tuple[Option, list[Option]]:
    return (_fam("F-22a"),
            [_pr("-3/4", "-7/4"), _pr("-7/4", "-3/4"),
             _pr("-13/16", "-21/16"), _pr("-21/16", "-13/16"),
             _pr("-37/16", "-21/16")])


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _p_equation(PA: RatFunc, PB: RatFunc) -> BiPoly:
    """Numerator of PA(a) - PB(b) as an integer-primitive BiPoly in (a, b)."""
    vars = ("a", "b")

    def embed(p: UniPoly, which: int) -> BiPoly:
        terms = {}
        for i, c in enumerate(p.coeffs):
            if c:
                terms[(i, 0) if which == 0 else (0, i)] = c
        return BiPoly(terms, vars)

    N = embed(PA.num, 0) * embed(PB.den, 1) - embed(PB.num, 1) * embed(PA.den, 0)
    return N.content_primitive()[1] if not N.is_zero() else N


def _verify_factorization(N: BiPoly, pieces: list[BiPoly]) -> bool:
    q = N
    try:
        for p in pieces:
            q = q.exact_divide(p)
    except Exception:
        return False
    return (not q.is_zero()) and q.total_degree() == 0


def _solve_linear_piece(piece: BiPoly) -> tuple[int, RatFunc]:
    """For a piece linear in one variable, (which, g) with vars[which] =
    g(other variable)."""
    for which in (0, 1):
        if piece.degree(which) == 1:
            num_terms: dict[int, Fraction] = {}
            den_terms: dict[int, Fraction] = {}
            for (i, j), c in piece.terms.items():
                d, other = (i, j) if which == 0 else (j, i)
                (den_terms if d == 1 else num_terms)[other] = c
            var = piece.vars[1 - which]
            n = UniPoly([num_terms.get(k, Fraction(0))
                         for k in range(max(num_terms, default=-1) + 1)], var)
            d = UniPoly([den_terms.get(k, Fraction(0))
                         for k in range(max(den_terms, default=-1) + 1)], var)
            return which, RatFunc(-n, d)
    raise ValueError(f"piece {piece} is not linear in either variable")


def _report(case: int, sub: str, desc: str, deductions, witnesses, survivors,
            flags) -> CaseReport:
    return CaseReport(
        case=case, subcase=sub, description=desc,
        deductions=deductions, exclusion_witnesses=witnesses,
        surviving_tuples=survivors,
        verdict="pass" if not flags else "flagged", flags=flags)


def _survivor_entry(cs: tuple[Fraction, ...]) -> dict:
    pts = finite_orbit_points(MapSet(cs))
    return {
        "c": [rat_str(c) for c in cs],
        "basepoints": [rat_str(r.basepoint) for r in pts],
        "orbit_union": sorted({rat_str(q) for r in pts for q in r.orbit}),
    }


def _dispose_and_collect(subject: str, cs: list[Fraction], P0,
                         deductions, witnesses, survivors) -> None:
    d = _dispose_tuple(subject, cs, P0, [])
    if d.kind == "collision":
        deductions.append(f"{subject}: coefficient collision, contradiction")
    elif d.kind == "sporadic":
        entry = _survivor_entry(tuple(cs))
        if entry not in survivors:
            survivors.append(entry)
        deductions.append(
            f"{subject}: tuple {fmt_pair(cs)} has finite-orbit points "
            f"{entry['basepoints']}")
    else:
        w = dict(d.data.get("witness", {}))
        w["tuple"] = [rat_str(c) for c in cs]
        if P0 is not None:
            w["basepoint"] = rat_str(P0)
        witnesses.append(w)
        deductions.append(
            f"{subject}: tuple {fmt_pair(cs)} excluded (no finite-orbit "
            "points; witness recorded)")


def _family_tuple_rf(opt: Option, var: str) -> tuple[RatFunc, RatFunc, RatFunc]:
    fam = opt.family
    assert fam is not None
    relabel = RatFunc.t(var)
    return (fam.c_list[0].compose(relabel), fam.c_list[1].compose(relabel),
            fam.basepoint.compose(relabel))


def _run_exclusion(tup: ParamTuple, subject: str, deductions, witnesses,
                   survivors) -> None:
    word, target, relation, roots = find_exclusion_relation(tup)
    deductions.append(
        f"{subject}: relation from word '{word_str(word) or 'id'}' under map "
        f"{target + 1} has degree {relation.degree}; rational roots "
        f"{[rat_str(r) for r in roots]}")
    for s0 in roots:
        reason = tup.pole_or_collision(s0)
        rsubject = f"{subject}, parameter {rat_str(s0)}"
        if reason is not None:
            deductions.append(f"{rsubject}: {reason}, contradiction")
            continue
        cs, P0 = tup.specialize(s0)
        _dispose_and_collect(rsubject, list(cs), P0, deductions, witnesses,
                             survivors)


# ---------------------------------------------------------------------------
# subcase drivers
# ---------------------------------------------------------------------------

def _sub_family_family(case: int, sub: str, optA: Option, optB: Option,
                       claimed_pieces: list[str], mirrored: bool = False
                       ) -> CaseReport:
    """Both options parametrized: equate the shared basepoint and follow
    every branch of the resulting curve."""
    desc = (f"(c1, c2, P) from {optA.label}, (c1, c3, P) from {optB.label}"
            + (" (mirrored roles)" if mirrored else ""))
    deductions: list[str] = []
    witnesses: list[dict] = []
    survivors: list[dict] = []
    flags: list[str] = []

    cA1, cA2, PA = _family_tuple_rf(optA, "a")
    cB1, cB2, PB = _family_tuple_rf(optB, "b")
    N = _p_equation(PA, PB)
    pieces = [BiPoly.parse(s, ("a", "b")) for s in claimed_pieces]
    if not _verify_factorization(N, pieces):
        flags.append(f"claimed factorization of the basepoint equation "
                     f"failed: got {N}")
        return _report(case, sub, desc, deductions, witnesses, survivors,
                       flags)
    deductions.append("basepoint equation factors exactly as "
                      + " * ".join(f"({p})" for p in pieces))

    for piece in pieces:
        if piece.degree(0) > 1 and piece.degree(1) > 1:
            _elliptic_piece(case, sub, piece, optA, optB, deductions,
                            witnesses, survivors, flags)
            continue
        which, val = _solve_linear_piece(piece)
        if which == 1:  # b = g(a)
            consistent = (cB1.compose(val) - cA1).is_zero()
            tup = ParamTuple((cA1, cA2, cB2.compose(val)), PA)
            label = f"branch {piece} (b = {val})"
        else:  # a = g(b)
            consistent = (cA1.compose(val) - cB1).is_zero()
            tup = ParamTuple((cB1, cA2.compose(val), cB2), PB)
            label = f"branch {piece} (a = {val})"
        if not consistent:
            flags.append(f"{label}: the two expressions for c1 disagree")
            continue
        if (tup.cs[1] - tup.cs[2]).is_zero():
            deductions.append(f"{label}: c2 = c3 identically, contradiction")
            continue
        _run_exclusion(tup, label, deductions, witnesses, survivors)
    return _report(case, sub, desc, deductions, witnesses, survivors, flags)


def _elliptic_piece(case: int, sub: str, piece: BiPoly, optA: Option,
                    optB: Option, deductions, witnesses, survivors, flags
                    ) -> None:
    """The quartic basepoint curve of the conic-family pairing; its
    rational points come from the rank-zero elliptic curve."""
    expected = BiPoly.parse("a^2*b^2 + a*b^2 - a - b^2", ("a", "b"))
    if piece.terms != expected.terms:
        flags.append(f"unexpected nonlinear curve piece {piece}")
        return
    if not verify_curve_map():
        flags.append("the degree-one map onto y^2 = x^3 - 2x^2 + 1 failed "
                     "its identity check")
        return
    if not preimage_check():
        flags.append("unexpected preimages of (1, 0) on the basepoint curve")
        return
    deductions.append(
        "basepoint curve maps with degree one onto y^2 = x^3 - 2x^2 + 1; "
        + RANK_ZERO_CERTIFICATE + "; " + MAZUR_CERTIFICATE)
    pts = c_rational_points()
    deductions.append(
        "rational points of the basepoint curve: "
        + ", ".join(f"({rat_str(t)}, {rat_str(u)})" for t, u in sorted(pts)))
    cA1, cA2, PA = _family_tuple_rf(optA, "a")
    cB1, cB2, PB = _family_tuple_rf(optB, "b")
    for (t0, u0) in sorted(pts):
        subject = f"curve point ({rat_str(t0)}, {rat_str(u0)})"
        if cA1.den(t0) == 0 or cB1.den(u0) == 0:
            deductions.append(
                f"{subject}: a coefficient becomes infinite, contradiction")
            continue
        if cA1.specialize(t0) != cB1.specialize(u0):
            flags.append(f"{subject}: inconsistent c1")
            continue
        cs = [cA1.specialize(t0), cA2.specialize(t0), cB2.specialize(u0)]
        P0 = PA.specialize(t0) if PA.den(t0) != 0 else None
        _dispose_and_collect(subject, cs, P0, deductions, witnesses,
                             survivors)


def _sub_family_pairs(case: int, sub: str, fam_opt: Option,
                      pair_opts: list[Option], fam_first: bool,
                      mirrored: bool = False) -> CaseReport:
    """A parametrized option against sporadic pairs: pin the shared c1,
    then dispose of the finitely many concrete triples.

    fam_first: the family supplies (c1, c2, P) and each pair (c1, c3);
    otherwise each pair supplies (c1, c2) and the family (c1, c3, P).
    """
    labels = ", ".join(p.label for p in pair_opts)
    desc = (f"(c1, c2, P) from {fam_opt.label}, (c1, c3) in {{{labels}}}"
            if fam_first else
            f"(c1, c2) in {{{labels}}}, (c1, c3, P) from {fam_opt.label}")
    if mirrored:
        desc += " (mirrored roles)"
    deductions: list[str] = []
    witnesses: list[dict] = []
    survivors: list[dict] = []
    flags: list[str] = []
    c1f, c2f, Pf = _family_tuple_rf(fam_opt, "s")
    for popt in pair_opts:
        q1, q2 = popt.pair
        eq = c1f - q1
        roots = sorted(rational_roots(eq.num).root_set()) \
            if eq.num.degree > 0 else []
        if not roots:
            deductions.append(
                f"{fam_opt.label} with {popt.label}: c1 = {rat_str(q1)} has "
                "no rational solutions, contradiction")
            continue
        deductions.append(
            f"{fam_opt.label} with {popt.label}: c1 = {rat_str(q1)} at "
            f"parameters {[rat_str(r) for r in roots]}")
        for s0 in roots:
            subject = f"{popt.label}, parameter {rat_str(s0)}"
            if c2f.den(s0) == 0 or Pf.den(s0) == 0:
                deductions.append(
                    f"{subject}: parametrization pole, contradiction")
                continue
            other = c2f.specialize(s0)
            cs = [q1, other, q2] if fam_first else [q1, q2, other]
            P0 = Pf.specialize(s0)
            _dispose_and_collect(subject, cs, P0, deductions, witnesses,
                                 survivors)
    return _report(case, sub, desc, deductions, witnesses, survivors, flags)


def _sub_pairs_pairs(case: int, sub: str, optsA: list[Option],
                     optsB: list[Option]) -> CaseReport:
    desc = (f"(c1, c2) in {{{', '.join(p.label for p in optsA)}}}, "
            f"(c1, c3) in {{{', '.join(p.label for p in optsB)}}}")
    deductions: list[str] = []
    witnesses: list[dict] = []
    survivors: list[dict] = []
    for pa in optsA:
        for pb in optsB:
            q1, q2 = pa.pair
            r1, r2 = pb.pair
            tag = f"{pa.label} with {pb.label}"
            if q1 != r1:
                deductions.append(f"{tag}: the demanded values of c1 differ, "
                                  "impossible")
                continue
            if q2 == r2:
                deductions.append(f"{tag}: c2 = c3, contradiction")
                continue
            _dispose_and_collect(tag, [q1, q2, r2], None, deductions,
                                 witnesses, survivors)
    return _report(case, sub, desc, deductions, witnesses, survivors, [])


def _lemma_conclusion_case(case: int, desc: str, deductions: list[str]
                           ) -> list[CaseReport]:
    return [_report(case, str(case), desc, deductions, [], [], [])]


# ---------------------------------------------------------------------------
# the ten cases
# ---------------------------------------------------------------------------

def verify_theorem_case(case: int) -> list[CaseReport]:
    """Subcase reports for one of the ten period-type distributions."""
    if case == 1:
        return _case1()
    if case == 2:
        return _case2()
    if case == 3:
        return _lemma_conclusion_case(
            3, CASE_DESCRIPTIONS[3],
            ["the fixed+3-cycle classification applied to {f1, f3} forces "
             "c1 = -21/16 and c3 = -29/16",
             "applied to {f2, f3} it forces c2 = -21/16",
             "hence c1 = c2, a contradiction"])
    if case == 4:
        return _case4()
    if case == 5:
        return _lemma_conclusion_case(
            5, CASE_DESCRIPTIONS[5],
            ["{f2, f3} is a pair of maps with rational 3-cycles and a "
             "common finite-orbit point, which the 3-cycle+3-cycle "
             "classification rules out"])
    if case == 6:
        return _lemma_conclusion_case(
            6, CASE_DESCRIPTIONS[6],
            ["the fixed+3-cycle classification on {f1, f3} forces "
             "c1 = -21/16 and c3 = -29/16",
             "the 2-cycle+3-cycle classification on {f2, f3} forces "
             "c2 = -21/16",
             "hence c1 = c2, a contradiction"])
    if case == 7:
        return _case7()
    if case == 8:
        return _lemma_conclusion_case(
            8, CASE_DESCRIPTIONS[8],
            ["{f1, f2} is a pair of maps with rational 3-cycles and a "
             "common finite-orbit point, which the 3-cycle+3-cycle "
             "classification rules out"])
    if case == 9:
        return _lemma_conclusion_case(
            9, CASE_DESCRIPTIONS[9],
            ["the 2-cycle+3-cycle classification on {f1, f3} forces "
             "c1 = -21/16 and c3 = -29/16",
             "applied to {f2, f3} it forces c2 = -21/16",
             "hence c1 = c2, a contradiction"])
    if case == 10:
        return _lemma_conclusion_case(
            10, CASE_DESCRIPTIONS[10],
            ["{f2, f3} is a pair of maps with rational 3-cycles and a "
             "common finite-orbit point, which the 3-cycle+3-cycle "
             "classification rules out"])
    raise ValueError(f"case must be 1..10, got {case}")


def _case1() -> list[CaseReport]:
    a, b, pairs = _options_11()
    return [
        _sub_family_family(1, "1.1", a, a, ["a - b"]),
        _sub_family_family(1, "1.2", a, b, ["a*b^2 - a - 4*b"]),
        _sub_family_pairs(1, "1.3", a, pairs, fam_first=True),
        _sub_family_family(1, "1.4", b, a, ["a^2*b - 4*a - b"],
                           mirrored=True),
        _sub_family_family(1, "1.5", b, b, ["a - b", "a*b + 1"]),
        _sub_family_pairs(1, "1.6", b, pairs, fam_first=True),
        _sub_family_pairs(1, "1.7", a, pairs, fam_first=False, mirrored=True),
        _sub_family_pairs(1, "1.8", b, pairs, fam_first=False, mirrored=True),
        _sub_pairs_pairs(1, "1.9", pairs, pairs),
    ]


def _case2() -> list[CaseReport]:
    a11, b11, pairs11 = _options_11()
    a12, b12, pairs12 = _options_12()
    return [
        _sub_family_family(2, "2.1", a11, a12, ["a - b"]),
        _sub_family_family(2, "2.2", a11, b12, ["a*b^2 - a + 4*b^2"]),
        _sub_family_pairs(2, "2.3", a11, [pairs12[0]], fam_first=True),
        _sub_family_pairs(2, "2.4", a11, [pairs12[1]], fam_first=True),
        _sub_family_family(2, "2.5", b11, a12, ["a^2*b - 4*a - b"]),
        _sub_family_family(2, "2.6", b11, b12,
                           ["a^2*b^2 + a*b^2 - a - b^2"]),
        _sub_family_pairs(2, "2.7", b11, [pairs12[0]], fam_first=True),
        _sub_family_pairs(2, "2.8", b11, [pairs12[1]], fam_first=True),
        _sub_family_pairs(2, "2.9", a12, pairs11, fam_first=False),
        _sub_family_pairs(2, "2.10", b12, pairs11, fam_first=False),
        _sub_pairs_pairs(2, "2.11", pairs11, pairs12),
    ]


def _case4() -> list[CaseReport]:
    a, b, pairs = _options_12()
    p1, p2 = pairs
    return [
        _sub_family_family(4, "4.1", a, a, ["a - b"]),
        _sub_family_family(4, "4.2", a, b, ["a*b^2 - a + 4*b^2"]),
        _sub_family_pairs(4, "4.3", a, [p1], fam_first=True),
        _sub_family_pairs(4, "4.4", a, [p2], fam_first=True),
        _sub_family_family(4, "4.5", b, a, ["a^2*b - b + 4*a^2"],
                           mirrored=True),
        _sub_family_family(4, "4.6", b, b, ["a - b", "a + b"]),
        _sub_family_pairs(4, "4.7", b, [p1], fam_first=True),
        _sub_family_pairs(4, "4.8", b, [p2], fam_first=True),
        _sub_family_pairs(4, "4.9", a, [p1], fam_first=False, mirrored=True),
        _sub_family_pairs(4, "4.10", b, [p1], fam_first=False, mirrored=True),
        _sub_pairs_pairs(4, "4.11", [p1], [p1]),
        _sub_pairs_pairs(4, "4.12", [p1], [p2]),
        _sub_family_pairs(4, "4.13", a, [p2], fam_first=False, mirrored=True),
        _sub_family_pairs(4, "4.14", b, [p2], fam_first=False, mirrored=True),
        _sub_pairs_pairs(4, "4.15", [p2], [p1]),
        _sub_pairs_pairs(4, "4.16", [p2], [p2]),
    ]


def _case7() -> list[CaseReport]:
    fam, pairs = _options_22()
    return [
        _sub_family_family(7, "7.1", fam, fam, ["a - b", "a + b"]),
        _sub_family_pairs(7, "7.2", fam, pairs, fam_first=True),
        _sub_family_pairs(7, "7.3", fam, pairs, fam_first=False,
                          mirrored=True),
        _sub_pairs_pairs(7, "7.4", pairs, pairs),
    ]
