import dataclasses
import random
from fractions import Fraction

import pytest

from quadorbits.dynamics import monoid_orbit
from quadorbits.families import ExcludedParameter, catalog, family_by_id, \
    family_instance, family_verify_symbolic, sporadic_pairs, sporadic_triples
from quadorbits.rationals import rat


class TestCatalog:
    def test_family_ids(self):
        fams, _ = catalog()
        assert [f.id for f in fams] == \
            ["F-11a", "F-11b", "F-12a", "F-12b", "F-22a"]

    def test_sporadic_pairs_golden(self):
        entries = sorted((s.lemma, tuple(map(str, s.cs)))
                         for s in sporadic_pairs())
        assert entries == sorted([
            ("2.1", ("-21/16", "-5/16")),
            ("2.1", ("3/16", "-5/16")),
            ("2.2", ("-5/16", "-13/16")),
            ("2.2", ("-21/16", "-13/16")),
            ("2.3", ("-3/4", "-7/4")),
            ("2.3", ("-7/4", "-3/4")),
            ("2.3", ("-13/16", "-21/16")),
            ("2.3", ("-21/16", "-13/16")),
            ("2.3", ("-37/16", "-21/16")),
            ("2.5", ("-21/16", "-29/16")),
        ])
        ids = [s.id for s in sporadic_pairs()]
        assert len(ids) == 10 and len(set(ids)) == 10

    def test_sporadic_triples_golden(self):
        triples = [tuple(map(str, s.cs)) for s in sporadic_triples()]
        assert triples == [("-5/16", "-13/16", "-21/16"),
                           ("3/16", "-5/16", "-13/16")]

    def test_every_sporadic_basepoint_confirms(self):
        _, sporadics = catalog()
        for s in sporadics:
            S = s.map_set()
            for P in s.basepoints:
                assert monoid_orbit(S, P).is_finite(), (s.id, P)


class TestSymbolicVerification:
    @pytest.mark.parametrize("fid", ["F-11a", "F-11b", "F-12a", "F-12b",
                                     "F-22a"])
    def test_families_verify(self, fid):
        assert family_verify_symbolic(family_by_id(fid))

    def test_mutated_family_fails(self):
        fam = family_by_id("F-11a")
        bad = dataclasses.replace(
            fam, stable=tuple(list(fam.stable[:-1]) + [fam.stable[-1] + 1]))
        assert not family_verify_symbolic(bad)


class TestInstances:
    def test_f12a_at_3(self):
        S, P = family_instance(family_by_id("F-12a"), 3)
        assert [f.c for f in S] == [rat("-2"), rat("-3")]
        assert P == 2
        res = monoid_orbit(S, P)
        assert res.is_finite()
        assert set(res.orbit) == {Fraction(2), Fraction(1), Fraction(-2),
                                  Fraction(-1)}

    def test_f11b_at_2(self):
        S, P = family_instance(family_by_id("F-11b"), 2)
        assert [f.c for f in S] == [rat("-55/36"), rat("-91/36")]
        assert P == rat("11/6")
        assert monoid_orbit(S, P).is_finite()

    def test_f22a_at_0(self):
        S, P = family_instance(family_by_id("F-22a"), 0)
        assert [f.c for f in S] == [rat("-7/4"), rat("-3/4")]
        # the basepoint is the exact-period-two point of the first map
        assert P == rat("1/2")
        f1 = S[0]
        assert f1(f1(P)) == P and f1(P) != P

    def test_excluded_collision(self):
        with pytest.raises(ExcludedParameter, match="collision"):
            family_instance(family_by_id("F-11a"), -1)

    def test_excluded_pole(self):
        with pytest.raises(ExcludedParameter, match="pole"):
            family_instance(family_by_id("F-11b"), 1)

    def test_excluded_values_computed(self):
        assert family_by_id("F-11a").excluded_values() == {Fraction(-1)}
        assert family_by_id("F-11b").excluded_values() == \
            {Fraction(1), Fraction(-1)}
        assert family_by_id("F-12a").excluded_values() == set()


class TestRandomSpecializations:
    def test_orbits_stay_inside_stable_sets(self):
        rng = random.Random(17)
        fams, _ = catalog()
        for fam in fams:
            excluded = fam.excluded_values()
            done = 0
            while done < 6:
                t0 = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
                if t0 in excluded:
                    continue
                S, P = family_instance(fam, t0)
                res = monoid_orbit(S, P)
                assert res.is_finite(), (fam.id, t0)
                allowed = {u.specialize(t0) for u in fam.stable} | {P}
                assert set(res.orbit) <= allowed, (fam.id, t0)
                done += 1
