from fractions import Fraction

from quadorbits.dynamics import MapSet, monoid_orbit
from quadorbits.rationals import rat
from quadorbits.search import FoundTuple, SearchSpec, search


class TestSmallGrids:
    def test_integer_pairs(self):
        res = search(SearchSpec(2, 1, 5))
        as_dicts = [t.to_dict() for t in res]
        assert {"c": ["-3", "-2"], "basepoints": ["-2", "-1", "1", "2"]} \
            in as_dicts

    def test_every_result_reverifies(self):
        for t in search(SearchSpec(2, 1, 5)):
            S = MapSet(t.cs)
            for P in t.basepoints:
                assert monoid_orbit(S, P).is_finite()

    def test_triples_small_grid(self):
        res = search(SearchSpec(3, 16, 22))
        keys = [tuple(map(str, t.cs)) for t in res]
        assert keys == [("-21/16", "-13/16", "-5/16"),
                        ("-13/16", "-5/16", "3/16")]

    def test_worker_independence(self):
        spec = SearchSpec(2, 4, 8)
        assert search(spec, workers=1) == search(spec, workers=3)

    def test_quadruples_small_grid_empty(self):
        assert search(SearchSpec(4, 16, 22)) == []

    def test_spec_json_round_trip(self):
        spec = SearchSpec(3, 16, 40)
        import json

        again = SearchSpec.from_json(json.dumps(spec.to_dict()))
        assert again == spec

    def test_catalog_instances_in_grid_are_found(self):
        # the two-map families specialize into small grids; every instance
        # with coefficients inside the grid must be discovered
        from quadorbits.families import family_by_id, family_instance

        spec = SearchSpec(2, 4, 12)
        found = {frozenset(t.cs) for t in search(spec)}
        fam = family_by_id("F-12a")
        for t0 in (Fraction(0), Fraction(1), Fraction(2), Fraction(-2)):
            S, P = family_instance(fam, t0)
            cs = frozenset(f.c for f in S)
            if all(abs(c) <= 3 and c.denominator in (1, 2, 4) for c in cs):
                assert cs in found, t0
