import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import sylvester_resultant
from quadorbits.polynomials import BiPoly, ExactDivisionError, UniPoly, \
    bivariate_gcd, resultant, resultant_y


def P(s, var=None):
    return UniPoly.parse(s, var)


def B(s, vars=("y", "z")):
    return BiPoly.parse(s, vars)


class TestArithmetic:
    def test_ring_examples(self):
        assert P("x + 1") * P("x - 1") == P("x^2 - 1")
        assert B("y - z") * B("y + z") == B("y^2 - z^2")
        p = P("3*x^2 - 1/2")
        assert p + UniPoly.zero("x") == p

    def test_variable_mismatch(self):
        with pytest.raises(ValueError):
            P("x + 1") * P("t + 1")
        with pytest.raises(ValueError):
            B("y + 1") * B("u + 1", vars=("u", "v"))

    def test_eval(self):
        assert P("x^2 - 13/16")(Fraction(1, 4)) == Fraction(-3, 4)
        assert B("y^2 - z^2 + 4").eval2(0, 2) == 0
        p = P("7*x^3 - 2*x + 5/3")
        assert p(0) == p.coeffs[0]

    def test_compose(self):
        assert P("x^2 + 1").compose(P("x^2 + 1")) == P("x^4 + 2*x^2 + 2")
        p = P("5*x^3 - x + 2")
        assert p.compose(P("x")) == p
        assert P("x^2").compose(P("x^3")) == P("x^6")

    def test_exact_divide(self):
        assert P("x^2 - 1").exact_divide(P("x - 1")) == P("x + 1")
        assert B("y^2 - z^2").exact_divide(B("y + z")) == B("y - z")
        with pytest.raises(ExactDivisionError) as e:
            P("x^2 + 1").exact_divide(P("x - 1"))
        assert e.value.remainder == P("2", var="x")

    def test_content_primitive(self):
        p = P("4*x^4 - 5*x^2 - 9")
        c, prim = p.content_primitive()
        assert c == 1 and prim == p
        c, prim = P("1/2*x + 1/4").content_primitive()
        assert c == Fraction(1, 4) and prim == P("2*x + 1")
        c, prim = P("-2*x^2 + 4").content_primitive()
        assert c == -2 and prim == P("x^2 - 2")

    def test_squarefree_part(self):
        assert P("x - 1").__pow__(2).__mul__(P("x + 2")).squarefree_part() \
            == P("x^2 + x - 2")
        assert P("x^3").squarefree_part() == P("x")
        p = P("x^2 + x + 3")
        assert p.squarefree_part() == p


class TestResultants:
    def test_spec_examples(self):
        r = resultant(B("x - 1", ("x", "w")), B("x - 2", ("x", "w")), 0)
        assert r == UniPoly.constant(1, "w")
        r = resultant(B("x^2 - 1", ("x", "w")), B("x^2 - 4", ("x", "w")), 0)
        assert r == UniPoly.constant(9, "w")
        assert resultant_y(B("y - z"), B("y + z")) == P("-2*z")

    def test_against_sylvester_oracle(self):
        rng = random.Random(31)
        done = 0
        while done < 30:
            terms_p = {(i, j): Fraction(rng.randint(-6, 6))
                       for i in range(3) for j in range(3)
                       if rng.random() < 0.7}
            terms_q = {(i, j): Fraction(rng.randint(-6, 6))
                       for i in range(4) for j in range(2)
                       if rng.random() < 0.7}
            p, q = BiPoly(terms_p), BiPoly(terms_q)
            if p.degree(0) < 1 or q.degree(0) < 1:
                continue
            assert resultant(p, q, 0) == sylvester_resultant(p, q, 0)
            done += 1

    def test_vanishes_at_common_roots(self):
        rng = random.Random(5)
        for _ in range(20):
            z0 = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            y0 = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            # plant the common root (y0, z0)
            lin = B("y") - BiPoly.constant(y0) \
                - (B("z") - BiPoly.constant(z0)) * rng.randint(0, 2)
            p = lin * B("y + z + 1")
            q = lin * B("y^2 + z^2 + 1") + lin * rng.randint(0, 3)
            if p.degree(0) < 1 or q.degree(0) < 1:
                continue
            r = resultant(p, q, 0)
            assert r.is_zero() or r(z0) == 0

    def test_degree_zero_in_eliminated_variable(self):
        with pytest.raises(ValueError):
            resultant(B("z + 1"), B("y + z"), 0)


class TestBivariateGcd:
    def test_plant_and_recover(self):
        g = B("y^2 - 4*y - z^2")
        a = g * B("y + 3")
        b = g * B("z - 5")
        assert bivariate_gcd(a, b) == g

    def test_coprime(self):
        assert bivariate_gcd(B("y - z"), B("y + z")).total_degree() == 0


class TestParsingPrinting:
    def test_unipoly_round_trip(self):
        for s in ["4*x^4 - 5*x^2 - 9", "x", "-x^2 + 1/2", "0", "7"]:
            p = P(s, var="x")
            assert UniPoly.parse(str(p), var="x") == p

    def test_bipoly_round_trip(self):
        for s in ["y^2*z - 1/2*z + 1", "y - z", "3"]:
            b = B(s)
            assert BiPoly.parse(str(b)) == b

    def test_dump_terms(self):
        d = B("2*y*z - 1/2").dump_terms()
        assert d == {"(1,1)": "2", "(0,0)": "-1/2"}


coef = st.integers(min_value=-20, max_value=20)


@settings(max_examples=60, deadline=None)
@given(st.lists(coef, min_size=1, max_size=5),
       st.lists(coef, min_size=1, max_size=5),
       st.fractions(min_value=-30, max_value=30, max_denominator=10))
def test_compose_eval_property(f, g, x):
    fp, gp = UniPoly(f, "x"), UniPoly(g, "x")
    assert fp.compose(gp)(x) == fp(gp(x))


@settings(max_examples=60, deadline=None)
@given(st.lists(coef, min_size=1, max_size=5),
       st.lists(coef, min_size=2, max_size=4))
def test_exact_divide_round_trip(p, d):
    pp, dd = UniPoly(p, "x"), UniPoly(d, "x")
    if dd.is_zero():
        return
    assert (pp * dd).exact_divide(dd) == pp


@settings(max_examples=40, deadline=None)
@given(st.lists(coef, min_size=1, max_size=5))
def test_content_primitive_round_trip(p):
    pp = UniPoly(p, "x")
    if pp.is_zero():
        return
    c, prim = pp.content_primitive()
    assert prim * c == pp
