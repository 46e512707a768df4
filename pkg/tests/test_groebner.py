import pytest

from quadorbits.groebner import Budget, BudgetExhausted, IdealBasis, LEX, \
    buchberger, ideal_membership, leading_term, normal_form, s_polynomial
from quadorbits.polynomials import BiPoly

XY = ("x", "y")


def B(s):
    return BiPoly.parse(s, vars=XY)


class TestSPolynomial:
    def test_examples(self):
        assert s_polynomial(B("x*y - 1"), B("y^2 - 1")) == B("x - y")
        assert s_polynomial(B("x - y"), B("x - 2*y")) == B("y")
        f = B("x^2*y - x")
        assert s_polynomial(f, f).is_zero()


class TestNormalForm:
    def test_examples(self):
        basis = [B("x - y"), B("y^2 - 1")]
        assert normal_form(B("x^2 - 1"), basis).is_zero()
        assert normal_form(BiPoly.zero(XY), basis).is_zero()
        g = B("x^2*y + y^2")
        assert normal_form(g, [g]).is_zero()

    def test_no_leading_term_divides_remainder(self):
        basis = [B("x*y - 1"), B("y^2 - 1")]
        r = normal_form(B("x^3*y^2 + x"), basis)
        lts = [leading_term(g)[0] for g in basis]
        for e in r.terms:
            assert not any(l[0] <= e[0] and l[1] <= e[1] for l in lts)


class TestBuchberger:
    def test_example(self):
        basis = buchberger([B("x*y - 1"), B("y^2 - 1")])
        assert {str(g) for g in basis.generators} == {"x - y", "y^2 - 1"}
        assert basis.is_groebner

    def test_single_generator(self):
        basis = buchberger([B("2*x*y - 4")])
        assert [str(g) for g in basis.generators] == ["x*y - 2"]

    def test_unit_ideal(self):
        basis = buchberger([B("y - 1"), B("y + 1")])
        assert [str(g) for g in basis.generators] == ["1"]

    def test_buchberger_criterion_post_hoc(self):
        basis = buchberger([B("x^2 + y"), B("x*y - 1"), B("y^3 - x")])
        gens = list(basis.generators)
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                s = s_polynomial(gens[i], gens[j])
                if not s.is_zero():
                    assert normal_form(s, gens).is_zero()

    def test_normal_form_congruence(self):
        gens = [B("x^2 + y"), B("x*y - 1")]
        basis = buchberger(gens)
        f = B("x^3*y - x + y^2")
        r = normal_form(f, basis)
        assert normal_form(f - r, basis).is_zero()

    def test_budget_exhaustion(self):
        with pytest.raises(BudgetExhausted) as e:
            buchberger([B("x*y - 1"), B("y^2 - 1")],
                       budget=Budget(max_pairs=0))
        assert e.value.pairs_done > 0 or e.value.basis_size >= 2


class TestMembership:
    def test_examples(self):
        f, g = B("x*y - 1"), B("y^2 - 1")
        assert ideal_membership(f, [f, g])
        assert not ideal_membership(B("x"), [B("y")])
        assert ideal_membership(B("x - y"), [f, g])

    def test_propagates_budget(self):
        with pytest.raises(BudgetExhausted):
            ideal_membership(B("x"), [B("x*y - 1"), B("y^2 - 1")],
                             budget=Budget(max_pairs=0))


class TestEliminationConsistency:
    def test_reduced_lemma_factors_agree_with_resultant(self):
        """Lex basis of a zero-dimensional pair of reduced generator
        factors contains a survivor-variable-only element whose rational
        roots are resultant roots (cross-validation of the two routes)."""
        from quadorbits.polynomials import resultant_y
        from quadorbits.roots import rational_roots
        from quadorbits.verifier.elimination import eliminate_candidates
        from quadorbits.verifier.lemmas import lemma_setup

        setup = lemma_setup("2.1")
        out = eliminate_candidates(setup.gens, setup.structural, eliminate=0)
        a = out.reduced[0].factors[0]
        b = out.reduced[1].factors[0]
        basis = buchberger([a, b], budget=Budget(max_pairs=4000))
        res_roots = set(
            rational_roots(resultant_y(a, b).squarefree_part()).root_set())
        found_z_only = False
        for g in basis.generators:
            u = g.as_unipoly()
            if u is not None and u.var == "z" and u.degree > 0:
                found_z_only = True
                z_roots = set(
                    rational_roots(u.squarefree_part()).root_set())
                assert z_roots <= res_roots
        assert found_z_only
