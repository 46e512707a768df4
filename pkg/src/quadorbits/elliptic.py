"""Elliptic-curve toolkit for the curve subcase of the three-map analysis.

Affine chord-tangent group law on y^2 = x^3 + a2 x^2 + a4 x + a6 over Q,
point orders up to the Mazur bound, Lutz-Nagell integral-torsion
enumeration, and the two checks that tie the curve

    C : t^2 u^2 + t u^2 - t - u^2 = 0

to E : y^2 = x^3 - 2 x^2 + 1 via the degree-one map

    r : (t, u) -> ((-t u^2 + 1)/u^2, (t u^2 + u^2 - 1)/u^3).

Two facts are consumed as external certificates rather than re-proved:
the rank of E(Q) is zero, and rational torsion order is at most 12
(Mazur).  Everything downstream of them is verified here exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import BiPoly, UniPoly, resultant
from .ratfunc import RatFunc
from .rationals import rat_str
from .roots import integer_roots, rational_roots

__all__ = [
    "Curve",
    "ECPoint",
    "INFINITY",
    "point",
    "ec_add",
    "ec_neg",
    "ec_mul",
    "ec_order",
    "lutz_nagell_candidates",
    "SUBCASE_CURVE_E",
    "curve_c_poly",
    "curve_map_numerator",
    "verify_curve_map",
    "preimage_check",
    "preimages_on_c",
    "c_rational_points",
    "RANK_ZERO_CERTIFICATE",
    "MAZUR_CERTIFICATE",
]

RANK_ZERO_CERTIFICATE = (
    "external certificate: E(Q) has rank zero for E: y^2 = x^3 - 2x^2 + 1"
)
MAZUR_CERTIFICATE = (
    "external certificate (Mazur): rational torsion points have order <= 12"
)


@dataclass(frozen=True)
class ECPoint:
    x: Fraction | None
    y: Fraction | None

    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        if self.is_infinity():
            return "inf"
        return f"({rat_str(self.x)}, {rat_str(self.y)})"


INFINITY = ECPoint(None, None)


def point(x, y) -> ECPoint:
    return ECPoint(Fraction(x), Fraction(y))


@dataclass(frozen=True)
class Curve:
    """y^2 = x^3 + a2 x^2 + a4 x + a6, nonsingular."""

    a2: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a2", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.cubic_disc() == 0:
            raise ValueError("singular curve: zero discriminant")

    def cubic(self, var: str = "x") -> UniPoly:
        return UniPoly((self.a6, self.a4, self.a2, 1), var)

    def cubic_disc(self) -> Fraction:
        a, b, c = self.a2, self.a4, self.a6
        return (18 * a * b * c - 4 * a**3 * c + a**2 * b**2
                - 4 * b**3 - 27 * c**2)

    def contains(self, P: ECPoint) -> bool:
        if P.is_infinity():
            return True
        return P.y * P.y == self.cubic()(P.x)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in (self.a2, self.a4, self.a6))

    def __str__(self) -> str:
        return f"y^2 = {self.cubic()}"


SUBCASE_CURVE_E = Curve(Fraction(-2), Fraction(0), Fraction(1))


def _require_on_curve(E: Curve, P: ECPoint) -> None:
    if not E.contains(P):
        raise ValueError(f"point {P} is not on {E}")


def ec_neg(E: Curve, P: ECPoint) -> ECPoint:
    _require_on_curve(E, P)
    if P.is_infinity():
        return P
    return ECPoint(P.x, -P.y)


def ec_add(E: Curve, P: ECPoint, Q: ECPoint) -> ECPoint:
    """Chord-tangent sum with the point at infinity as identity."""
    _require_on_curve(E, P)
    _require_on_curve(E, Q)
    if P.is_infinity():
        return Q
    if Q.is_infinity():
        return P
    if P.x == Q.x:
        if P.y == -Q.y:
            return INFINITY
        # tangent line (P == Q with y != 0)
        slope = (3 * P.x**2 + 2 * E.a2 * P.x + E.a4) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x3 = slope * slope - E.a2 - P.x - Q.x
    y3 = slope * (P.x - x3) - P.y
    return ECPoint(x3, y3)


def ec_mul(E: Curve, n: int, P: ECPoint) -> ECPoint:
    if n < 0:
        return ec_mul(E, -n, ec_neg(E, P))
    acc = INFINITY
    for _ in range(n):
        acc = ec_add(E, acc, P)
    return acc


def ec_order(E: Curve, P: ECPoint) -> int | None:
    """Least n <= 12 with n*P = infinity, or None ("exceeds 12"); by Mazur's
    bound the latter certifies infinite order."""
    _require_on_curve(E, P)
    acc = P
    for n in range(1, 13):
        if acc.is_infinity():
            return n
        acc = ec_add(E, acc, P)
    return None


def lutz_nagell_candidates(E: Curve) -> set[ECPoint]:
    """All rational torsion points of an integral curve, by Lutz-Nagell:
    torsion points are integral with y = 0 or y^2 dividing the cubic
    discriminant.  Divisors come from trial division; candidates of infinite
    order (order exceeding the Mazur bound) are filtered out."""
    if not E.is_integral():
        raise ValueError("Lutz-Nagell needs integer coefficients")
    disc = abs(int(E.cubic_disc()))
    ys = {0}
    d = 1
    while d * d <= disc:
        if disc % (d * d) == 0:
            ys.add(d)
        d += 1
    out: set[ECPoint] = set()
    cubic = E.cubic()
    for y in sorted(ys):
        shifted = cubic - Fraction(y * y)
        for x in integer_roots(shifted.primitive()).roots:
            if cubic(x) == y * y:
                for yy in ({0} if y == 0 else {y, -y}):
                    cand = ECPoint(Fraction(x), Fraction(yy))
                    if ec_order(E, cand) is not None:
                        out.add(cand)
    return out


# ---------------------------------------------------------------------------
# the affine curve C and the map r onto E
# ---------------------------------------------------------------------------

_TU = ("t", "u")


def curve_c_poly() -> BiPoly:
    """Defining polynomial of C: t^2 u^2 + t u^2 - t - u^2."""
    return BiPoly.parse("t^2*u^2 + t*u^2 - t - u^2", vars=_TU)


def curve_map_numerator(x_shift: int = 0, y_sign: int = 1) -> BiPoly:
    """Numerator over u^6 of y_r^2 - (x_r^3 - 2 x_r^2 + 1) after substituting
    the components of r; the optional arguments perturb r for the negative
    controls (shift the x-component, flip the y-component sign)."""
    t = BiPoly.variable("t", _TU)
    u = BiPoly.variable("u", _TU)
    u2 = u * u
    xnum = -t * u2 + 1 + x_shift * u2   # x_r = xnum / u^2
    ynum = (t * u2 + u2 - 1) * y_sign   # y_r = ynum / u^3
    return (ynum * ynum
            - (xnum ** 3 - 2 * (xnum ** 2) * u2 + u2 ** 3))


def verify_curve_map(x_shift: int = 0, y_sign: int = 1) -> bool:
    """True iff the (possibly perturbed) map r lands on E wherever C
    vanishes, i.e. C divides the numerator of y_r^2 - (x_r^3 - 2x_r^2 + 1)."""
    return curve_c_poly().divides(curve_map_numerator(x_shift, y_sign))


def preimage_check() -> bool:
    """True iff no rational point of C with u != 0 maps to (1, 0) under r.

    Following the system {C = 0, numerator(y_r) = 0, u != 0}: eliminate t by
    a resultant, extract the rational roots in u, and back-substitute.  On C
    the vanishing of y_r's numerator t u^2 + u^2 - 1 is equivalent to
    x_r = 1, so this system captures all preimages of (1, 0).
    """
    C = curve_c_poly()
    ynum = BiPoly.parse("t*u^2 + u^2 - 1", vars=_TU)
    elim = resultant(C, ynum, eliminate=0)  # eliminate t, result in u
    if elim.is_zero():
        return False
    for u0 in rational_roots(elim.squarefree_part()).roots:
        if u0 == 0:
            continue
        cu = C.specialize(1, u0)      # polynomial in t
        yu = ynum.specialize(1, u0)
        g = cu.gcd(yu) if cu and yu else (cu if yu.is_zero() else yu)
        if g.degree > 0 and rational_roots(g).roots:
            return False
        if g.is_zero():
            return False
    return True


def preimages_on_c(target: ECPoint) -> set[tuple[Fraction, Fraction]]:
    """All rational (t, u) on C with u != 0 and r(t, u) = target (an affine
    point).  The x-equation is linear in t, so substitute
    t = (1 - x0 u^2)/u^2 into C and read off the rational u."""
    if target.is_infinity():
        return set()
    x0, y0 = target.x, target.y
    u = RatFunc.t("u")
    one = RatFunc.constant(1, "u")
    t_of_u = (one - x0 * u * u) / (u * u)
    # C(t(u), u) as a rational function of u
    c_expr = (t_of_u ** 2) * u * u + t_of_u * u * u - t_of_u - u * u
    out: set[tuple[Fraction, Fraction]] = set()
    if c_expr.is_zero():
        raise ArithmeticError("x-fiber lies inside C; elimination degenerates")
    for u0 in rational_roots(c_expr.num).roots:
        if u0 == 0:
            continue
        t0 = t_of_u.specialize(u0)
        # verify both defining conditions exactly
        if curve_c_poly().eval2(t0, u0) != 0:
            continue
        if (t0 * u0**2 + u0**2 - 1) / u0**3 == y0 and (1 - t0 * u0**2) / u0**2 == x0:
            out.add((t0, u0))
    return out


def c_rational_points() -> set[tuple[Fraction, Fraction]]:
    """C(Q), assembled from the torsion points of E.

    r is a degree-one map C -> E (verify_curve_map), E(Q) is torsion by the
    rank-zero certificate, and the torsion list comes from Lutz-Nagell.  A
    point of C with u = 0 forces t = 0, giving (0, 0); every other rational
    point maps to an affine point of E(Q) and is recovered as a preimage.
    """
    pts: set[tuple[Fraction, Fraction]] = {(Fraction(0), Fraction(0))}
    for q in lutz_nagell_candidates(SUBCASE_CURVE_E):
        pts |= preimages_on_c(q)
    return pts
