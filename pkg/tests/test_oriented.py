import random
from itertools import permutations

import pytest

from monmap.maps import MapError, is_orientable, structure
from monmap.oriented import (OrientedMap, bicolored_graph_oriented,
                             default_side_labeling, graph_class_oriented,
                             is_transitive, oriented_from_json_obj,
                             oriented_structure, oriented_to_json_obj,
                             perm_cycles, side_label)

TORUS = OrientedMap.from_cycles(
    9, [[1, 4, 9, 5, 7], [2, 6], [3, 8]], [[1, 9], [2, 3, 5], [4, 7], [6, 8]])


def random_labeling(rng, n):
    labels = list(range(1, 2 * n + 1))
    rng.shuffle(labels)
    f = {}
    for k in range(1, n + 1):
        f[(k, 1)] = labels[2 * k - 2]
        f[(k, 2)] = labels[2 * k - 1]
    return f


class TestTransitivity:
    def test_torus_example(self):
        assert is_transitive(TORUS)

    def test_two_fixed_points(self):
        assert not is_transitive(OrientedMap((0, 1), (0, 1)))

    def test_single_edge(self):
        assert is_transitive(OrientedMap((0,), (0,)))

    def test_matches_component_count(self):
        for s1 in permutations(range(3)):
            for s2 in permutations(range(3)):
                m = OrientedMap(s1, s2)
                assert is_transitive(m) == (oriented_structure(m).components == 1)


class TestOrientedStructure:
    def test_torus(self):
        st = oriented_structure(TORUS)
        assert (st.whites, st.blacks) == (3, 4)
        assert st.faces == 2
        assert st.euler == 0
        assert st.genus == 1

    def test_single_edge_sphere(self):
        st = oriented_structure(OrientedMap((0,), (0,)))
        assert (st.vertices, st.faces, st.euler, st.genus) == (2, 1, 2, 0)

    def test_full_cycle_faces_against_direct_count(self):
        for n in range(1, 7):
            cyc = tuple((i + 1) % n for i in range(n))
            m = OrientedMap(cyc, cyc)
            # oracle: count cycles of the composite permutation directly
            composite = tuple(cyc[cyc[i]] for i in range(n))
            assert oriented_structure(m).faces == len(perm_cycles(composite))

    def test_disconnected_reports_per_component(self):
        m = OrientedMap((0, 1), (0, 1))
        st = oriented_structure(m)
        assert st.genus is None
        assert st.components == 2
        assert st.component_genera == (0, 0)


class TestSideLabel:
    def test_single_edge(self):
        m = side_label(OrientedMap((0,), (0,)))
        assert structure(m).vertices == 2
        assert m.eps.pairs == ((1, 2),)

    def test_torus_any_labeling(self):
        rng = random.Random(7)
        for _ in range(3):
            nm = side_label(TORUS, random_labeling(rng, 9))
            assert is_orientable(nm)
            st = structure(nm)
            assert st.euler == 0 and st.components == 1

    def test_graph_class_independent_of_labeling(self):
        rng = random.Random(1)
        base = graph_class_oriented(TORUS)
        from monmap.maps import graph_class
        for _ in range(4):
            nm = side_label(TORUS, random_labeling(rng, 9))
            assert graph_class(nm) == base

    def test_component_count_matches_orbits(self):
        rng = random.Random(3)
        for n in (1, 2, 3):
            for s1 in permutations(range(n)):
                for s2 in permutations(range(n)):
                    m = OrientedMap(s1, s2)
                    nm = side_label(m, random_labeling(rng, n))
                    assert is_orientable(nm)
                    assert (structure(nm).components
                            == oriented_structure(m).components)

    def test_rejects_non_bijection(self):
        f = default_side_labeling(2)
        f[(1, 1)] = f[(2, 2)]
        with pytest.raises(MapError):
            side_label(OrientedMap((0, 1), (1, 0)), f)

    def test_root_transport(self):
        m = OrientedMap((0,), (0,), root=1)
        assert side_label(m).root == 1


class TestJsonAndGraph:
    def test_json_round_trip(self):
        for m in (TORUS, OrientedMap((0, 1), (1, 0), root=2)):
            assert oriented_from_json_obj(oriented_to_json_obj(m)) == m

    def test_graph_matches_side_labeled_graph(self):
        from monmap.maps import bicolored_graph
        g1 = bicolored_graph_oriented(TORUS)
        g2 = bicolored_graph(side_label(TORUS))
        assert (g1.blacks, g1.whites) == (g2.blacks, g2.whites)
        assert graph_class_oriented(TORUS).key \
            == canonical_form_key(side_label(TORUS))

    def test_validation(self):
        with pytest.raises(MapError):
            OrientedMap((0, 0), (0, 1))
        with pytest.raises(MapError):
            OrientedMap.from_cycles(2, [[1, 1]], [[1, 2]])
        with pytest.raises(MapError):
            OrientedMap((0,), (0,), root=2)


def canonical_form_key(m):
    from monmap.maps import graph_class
    return graph_class(m).key
