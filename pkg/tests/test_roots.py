import random
from fractions import Fraction

import pytest

import quadorbits.roots as roots_mod
from quadorbits.polynomials import UniPoly
from quadorbits.roots import integer_roots, rational_roots


def P(s):
    return UniPoly.parse(s, var="x")


class TestIntegerRoots:
    def test_examples(self):
        assert integer_roots(P("x^3 - x")).root_set() == {0, 1, -1}
        assert integer_roots(P("x^2 + 1")).roots == {}
        p = P("x - 3") * P("x + 5") * P("x^2 + x + 1")
        rep = integer_roots(p)
        assert rep.root_set() == {3, -5}
        for r in rep.roots:
            assert p(r) == 0

    def test_multiplicities(self):
        p = P("x - 2") ** 3 * P("x + 1")
        rep = integer_roots(p)
        assert rep.roots == {Fraction(2): 3, Fraction(-1): 1}

    def test_requires_integer_primitive(self):
        with pytest.raises(ValueError):
            integer_roots(P("x/1 + 1/2"))
        with pytest.raises(ValueError):
            integer_roots(P("2*x + 2"))


class TestRationalRoots:
    def test_examples(self):
        assert rational_roots(P("4*x^4 - 5*x^2 - 9")).root_set() == \
            {Fraction(3, 2), Fraction(-3, 2)}
        assert rational_roots(P("2*x - 3")).root_set() == {Fraction(3, 2)}
        assert rational_roots(P("x^2 - x - 5/16")).root_set() == \
            {Fraction(5, 4), Fraction(-1, 4)}

    def test_soundness(self):
        p = P("12*x^5 - 4*x^4 + x - 7")
        for r, m in rational_roots(p).roots.items():
            assert p(r) == 0 and m >= 1

    def test_planted_completeness(self):
        rng = random.Random(99)
        for _ in range(60):
            planted = {Fraction(rng.randint(-40, 40), rng.randint(1, 40))
                       for _ in range(rng.randint(1, 4))}
            poly = P("x^4 + x + 7")  # no rational roots (checked below)
            for r in planted:
                poly = poly * UniPoly([-r.numerator, r.denominator], "x") \
                    ** rng.randint(1, 2)
            assert rational_roots(poly).root_set() == planted

    def test_rootless_quartic_is_rootless(self):
        assert rational_roots(P("x^4 + x + 7")).roots == {}

    def test_agreement_with_trial_division(self):
        # small-height polynomials: compare with exhaustive p/q trial
        rng = random.Random(123)
        for _ in range(25):
            coeffs = [rng.randint(-20, 20) for _ in range(rng.randint(3, 9))]
            if not any(coeffs):
                continue
            p = UniPoly(coeffs, "x")
            if p.degree < 1:
                continue
            found = rational_roots(p).root_set()
            _, ints = p.to_int()
            while ints and ints[0] == 0:
                ints = ints[1:]
            brute = set()
            if not ints:
                continue
            a0, an = abs(ints[0]), abs(ints[-1])
            for num in range(-a0, a0 + 1):
                for den in range(1, an + 1):
                    if a0 % max(abs(num), 1) == 0 and an % den == 0:
                        x = Fraction(num, den)
                        if p(x) == 0:
                            brute.add(x)
            if any(c != 0 for c in p.coeffs[:1]):
                assert found == brute

    def test_reconstruction_path(self, monkeypatch):
        monkeypatch.setattr(roots_mod, "_TRANSFORM_BIT_LIMIT", 1)
        big = 2**40 + 1
        p = P("x^4 + x + 7") * UniPoly([-3, big], "x") * UniPoly([-5, 7], "x")
        rep = rational_roots(p)
        assert rep.method == "reconstruction"
        assert rep.root_set() == {Fraction(3, big), Fraction(5, 7)}

    def test_report_trace_serializes(self):
        rep = rational_roots(P("x^3 - x"))
        d = rep.to_dict()
        assert "roots" in d and "method" in d
