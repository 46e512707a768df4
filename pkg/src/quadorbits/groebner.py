"""Buchberger's algorithm over Q[y, z] with lex order.

This is the faithful route to the ideal computations behind the pair
classifications; the resultant machinery in ``polynomials`` is the fast
route.  Computation carries an explicit resource budget (processed-pair and
coefficient-bit ceilings): exceeding it raises ``BudgetExhausted``, which is
a reported outcome, never a wrong answer.

Reductions strip integer content aggressively (the instances here have fast
coefficient growth) and pair selection follows the normal strategy with the
coprime-leading-term and chain criteria.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import BiPoly

__all__ = [
    "MonomialOrder",
    "LEX",
    "IdealBasis",
    "Budget",
    "BudgetExhausted",
    "leading_term",
    "s_polynomial",
    "normal_form",
    "buchberger",
    "ideal_membership",
]

Exponent = tuple[int, int]


@dataclass(frozen=True)
class MonomialOrder:
    """Lex order; precedence (0, 1) means vars[0] > vars[1]."""

    kind: str = "lex"
    precedence: tuple[int, int] = (0, 1)

    def key(self, e: Exponent):
        if self.kind != "lex":
            raise ValueError(f"unsupported order {self.kind!r}")
        a, b = self.precedence
        return (e[a], e[b])


LEX = MonomialOrder()


@dataclass(frozen=True)
class Budget:
    max_pairs: int = 20_000
    max_coeff_bits: int = 1_000_000


class BudgetExhausted(Exception):
    """Raised when Buchberger exceeds its resource budget."""

    def __init__(self, message: str, pairs_done: int, max_bits: int,
                 basis_size: int):
        super().__init__(message)
        self.pairs_done = pairs_done
        self.max_bits = max_bits
        self.basis_size = basis_size


@dataclass(frozen=True)
class IdealBasis:
    generators: tuple[BiPoly, ...]
    order: MonomialOrder = LEX
    is_groebner: bool = False


def leading_term(f: BiPoly, order: MonomialOrder = LEX) -> tuple[Exponent, Fraction]:
    if f.is_zero():
        raise ValueError("zero polynomial has no leading term")
    e = max(f.terms, key=order.key)
    return e, f.terms[e]


def _divides(e1: Exponent, e2: Exponent) -> bool:
    return e1[0] <= e2[0] and e1[1] <= e2[1]


def _lcm(e1: Exponent, e2: Exponent) -> Exponent:
    return (max(e1[0], e2[0]), max(e1[1], e2[1]))


def _mono_mul(f: BiPoly, e: Exponent, c: Fraction) -> BiPoly:
    return BiPoly({(i + e[0], j + e[1]): cc * c for (i, j), cc in f.terms.items()},
                  f.vars)


def s_polynomial(f: BiPoly, g: BiPoly, order: MonomialOrder = LEX) -> BiPoly:
    """lcm-cancellation combination of f and g: the leading terms cancel."""
    ef, cf = leading_term(f, order)
    eg, cg = leading_term(g, order)
    l = _lcm(ef, eg)
    return (
        _mono_mul(f, (l[0] - ef[0], l[1] - ef[1]), 1 / cf)
        - _mono_mul(g, (l[0] - eg[0], l[1] - eg[1]), 1 / cg)
    )


def normal_form(f: BiPoly, basis, order: MonomialOrder = LEX) -> BiPoly:
    """Remainder of multivariate division of f by the basis.

    No term of the remainder is divisible by any leading term of the basis;
    f - normal_form(f, basis) lies in the ideal the basis generates.
    """
    gens = list(basis.generators if isinstance(basis, IdealBasis) else basis)
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("empty basis")
    lts = [leading_term(g, order) for g in gens]
    rem_terms: dict[Exponent, Fraction] = {}
    work = dict(f.terms)
    while work:
        e = max(work, key=order.key)
        c = work[e]
        for g, (eg, cg) in zip(gens, lts):
            if _divides(eg, e):
                q = (e[0] - eg[0], e[1] - eg[1])
                factor = c / cg
                for ge, gc in g.terms.items():
                    te = (ge[0] + q[0], ge[1] + q[1])
                    s = work.get(te, Fraction(0)) - factor * gc
                    if s:
                        work[te] = s
                    else:
                        work.pop(te, None)
                break
        else:
            rem_terms[e] = c
            del work[e]
    return BiPoly(rem_terms, f.vars)


def _strip(f: BiPoly) -> BiPoly:
    return f.content_primitive()[1] if not f.is_zero() else f


def _max_bits(f: BiPoly) -> int:
    m = 0
    for c in f.terms.values():
        m = max(m, c.numerator.bit_length(), c.denominator.bit_length())
    return m


def buchberger(gens, order: MonomialOrder = LEX,
               budget: Budget = Budget()) -> IdealBasis:
    """Reduced lex Groebner basis of the ideal generated by ``gens``.

    Raises BudgetExhausted when the pair count or coefficient size exceeds
    the budget; the exception carries the run statistics.
    """
    G: list[BiPoly] = [_strip(g) for g in gens if not g.is_zero()]
    if not G:
        raise ValueError("no nonzero generators")
    lt = [leading_term(g, order)[0] for g in G]
    pairs: set[tuple[int, int]] = {(i, j) for j in range(len(G)) for i in range(j)}
    done: set[tuple[int, int]] = set()
    pairs_done = 0
    max_bits = max(_max_bits(g) for g in G)

    def chain_skippable(i: int, j: int) -> bool:
        l = _lcm(lt[i], lt[j])
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _divides(lt[k], l):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    return True
        return False

    while pairs:
        i, j = min(pairs, key=lambda p: order.key(_lcm(lt[p[0]], lt[p[1]])))
        pairs.remove((i, j))
        done.add((i, j))
        pairs_done += 1
        if pairs_done > budget.max_pairs:
            raise BudgetExhausted(
                f"pair budget {budget.max_pairs} exhausted",
                pairs_done, max_bits, len(G),
            )
        # Buchberger's first criterion: coprime leading terms reduce to zero
        if lt[i][0] + lt[j][0] == _lcm(lt[i], lt[j])[0] and \
           lt[i][1] + lt[j][1] == _lcm(lt[i], lt[j])[1]:
            continue
        if chain_skippable(i, j):
            continue
        s = s_polynomial(G[i], G[j], order)
        h = normal_form(s, G, order)
        if h.is_zero():
            continue
        h = _strip(h)
        bits = _max_bits(h)
        max_bits = max(max_bits, bits)
        if bits > budget.max_coeff_bits:
            raise BudgetExhausted(
                f"coefficient budget {budget.max_coeff_bits} bits exhausted",
                pairs_done, max_bits, len(G),
            )
        G.append(h)
        lt.append(leading_term(h, order)[0])
        t = len(G) - 1
        pairs |= {(k, t) for k in range(t)}

    return IdealBasis(tuple(_interreduce(G, order)), order, is_groebner=True)


def _interreduce(G: list[BiPoly], order: MonomialOrder) -> list[BiPoly]:
    """Reduce each element against the others; drop zeros; monic output in
    increasing lex order of leading terms."""
    G = [g for g in G if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(G)):
            others = [g for k, g in enumerate(G) if k != i and not g.is_zero()]
            if not others:
                continue
            r = normal_form(G[i], others, order)
            if r.terms != G[i].terms:
                changed = True
            G[i] = r
        G = [g for g in G if not g.is_zero()]
    out = []
    for g in G:
        _, c = leading_term(g, order)
        out.append(g * (1 / c))
    out.sort(key=lambda g: order.key(leading_term(g, order)[0]))
    return out


def ideal_membership(f: BiPoly, gens, order: MonomialOrder = LEX,
                     budget: Budget = Budget()) -> bool:
    """Whether f lies in the ideal generated by gens (normal form w.r.t. a
    Groebner basis vanishes).  Propagates BudgetExhausted."""
    if f.is_zero():
        return True
    basis = gens if isinstance(gens, IdealBasis) and gens.is_groebner \
        else buchberger(gens if not isinstance(gens, IdealBasis) else gens.generators,
                        order, budget)
    return normal_form(f, basis, order).is_zero()
