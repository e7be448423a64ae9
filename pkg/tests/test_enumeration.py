import math
from fractions import Fraction

import pytest

from monmap.enumeration import (GuardExceeded, all_maps, all_pairs,
                                conservative_maps, conservative_one_face,
                                group_by, involutions, liberal_one_face,
                                polygon_pairings, single_polygon_pairs,
                                transitive_pairs)
from monmap.maps import Pairing, canonical_form, faces, graph_class, structure
from monmap.mon import mon_top
from monmap.oriented import graph_class_oriented


class TestInvolutions:
    def test_counts(self):
        for n, expected in ((1, 1), (2, 3), (4, 105)):
            items = list(involutions(range(1, 2 * n + 1)))
            assert len(items) == expected
            assert len(set(items)) == expected

    def test_odd_rejected(self):
        with pytest.raises(ValueError):
            list(involutions([1, 2, 3]))

    def test_arbitrary_labels(self):
        items = list(involutions([4, 7, 9, 12]))
        assert len(items) == 3
        assert all(p.support == frozenset({4, 7, 9, 12}) for p in items)


class TestConservative:
    def test_polygon_shape(self):
        beta, omega = polygon_pairings((3,))
        assert beta == Pairing([(1, 2), (3, 4), (5, 6)])
        assert omega == Pairing([(2, 3), (4, 5), (6, 1)])

    def test_one_face_counts_and_type(self):
        for n in (1, 2, 3):
            ms = list(conservative_one_face(n))
            assert len(ms) == math.prod(range(1, 2 * n, 2))
            for m in ms:
                _, face_type = faces(m)
                assert face_type == (n,)
                assert m.root == 1

    def test_klein_appears_at_n3(self, klein):
        target = canonical_form(klein)
        hits = [m for m in conservative_one_face(3)
                if canonical_form(m) == target]
        assert len(hits) >= 1
        assert any(m.eps == klein.eps for m in hits)

    def test_multi_polygon_face_type(self):
        ms = list(conservative_maps((2, 1)))
        assert len(ms) == 15  # pairings of 6 labels
        for m in ms:
            _, face_type = faces(m)
            assert face_type == (2, 1)


class TestLiberal:
    def test_n1_single_map(self):
        ms = list(liberal_one_face(1))
        assert len(ms) == 1
        assert structure(ms[0]).vertices == 2

    def test_single_polygon_pair_count_n2(self):
        assert len(list(single_polygon_pairs(2))) == 6

    def test_liberal_equals_scaled_conservative_n2(self):
        lib = group_by(liberal_one_face(2), "canonical")
        con = group_by(conservative_one_face(2), "canonical")
        assert lib == {k: math.factorial(3) * v for k, v in con.items()}

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            next(liberal_one_face(5))


class TestPairsAndAllMaps:
    def test_all_maps_n1(self):
        ms = list(all_maps(1))
        assert len(ms) == 1

    def test_all_maps_guard(self):
        with pytest.raises(GuardExceeded):
            next(all_maps(4))

    def test_transitive_pairs_n2(self):
        assert sum(1 for _ in transitive_pairs(2)) == 3

    def test_all_pairs_count(self):
        assert sum(1 for _ in all_pairs(3)) == 36

    def test_pairs_guard(self):
        with pytest.raises(GuardExceeded):
            next(all_pairs(6))


class TestGroupBy:
    def test_unknown_key(self):
        with pytest.raises(ValueError):
            group_by([], "nope")

    def test_graph_class_grouping_matches_main_theorem_n2(self):
        lhs: dict[bytes, Fraction] = {}
        for om in transitive_pairs(2):
            k = graph_class_oriented(om).key
            lhs[k] = lhs.get(k, Fraction(0)) + 1  # (n-1)! = 1
        rhs: dict[bytes, Fraction] = {}
        for m in conservative_one_face(2):
            k = graph_class(m).key
            rhs[k] = rhs.get(k, Fraction(0)) + mon_top(m)
        assert lhs == {k: v for k, v in rhs.items() if v}

    def test_rooted_vs_unrooted_keys(self):
        table_rooted = group_by(conservative_one_face(2), "rooted-canonical")
        table_plain = group_by(conservative_one_face(2), "canonical")
        assert sum(table_rooted.values()) == sum(table_plain.values()) == 3

    def test_stream_determinism(self):
        first = [canonical_form(m) for m in conservative_one_face(3)]
        second = [canonical_form(m) for m in conservative_one_face(3)]
        assert first == second
