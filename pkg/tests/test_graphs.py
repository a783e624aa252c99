import itertools
import random

import pytest

from moment_angle.complexes import SimplicialComplex, are_isomorphic
from moment_angle.errors import CapacityError, InputError
from moment_angle.families import polygon_nerve
from moment_angle.graphs import (
    BuildingSet,
    Graph,
    associahedron_nerve,
    formality_classify,
    graphical_building_set,
    nested_set_complex,
)
from moment_angle.rational_linalg import reduced_cohomology_ranks


def complete_graph(n):
    return Graph.from_edges(n, list(itertools.combinations(range(1, n + 1), 2)))


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def test_graph_validation():
    with pytest.raises(InputError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph.from_edges(3, [(1, 4)])


def test_building_set_examples():
    assert len(graphical_building_set(complete_graph(4)).sets) == 15
    assert graphical_building_set(path_graph(3)).sets == (
        (1,),
        (1, 2),
        (1, 2, 3),
        (2,),
        (2, 3),
        (3,),
    )
    edgeless = Graph.from_edges(2, [])
    B = graphical_building_set(edgeless)
    assert B.sets == ((1,), (2,))
    assert not B.is_connected


def test_building_set_axiom_rejects_bad_family():
    with pytest.raises(InputError):
        BuildingSet.from_sets(3, [(1, 2), (2, 3)])  # union {1,2,3} missing


def test_building_set_closure_random_graphs():
    rng = random.Random(79)
    for _ in range(20):
        n = rng.randint(1, 6)
        edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < 0.5]
        B = graphical_building_set(Graph.from_edges(n, edges))
        family = set(B.sets)
        for s1, s2 in itertools.combinations(B.sets, 2):
            if set(s1) & set(s2):
                assert tuple(sorted(set(s1) | set(s2))) in family
        assert all((v,) in family for v in range(1, n + 1))


def test_nested_complex_identifications():
    assert are_isomorphic(associahedron_nerve(path_graph(3)), polygon_nerve(5))
    assert are_isomorphic(associahedron_nerve(cycle_graph(3)), polygon_nerve(6))
    S0 = SimplicialComplex(2, [(1, 2)])
    assert associahedron_nerve(path_graph(2)) == S0


def test_nerve_sizes():
    assert associahedron_nerve(path_graph(4)).m == 9
    assert associahedron_nerve(cycle_graph(4)).m == 12
    assert associahedron_nerve(complete_graph(4)).m == 14


def test_permutohedron_nerve_is_a_sphere():
    K = associahedron_nerve(complete_graph(4))
    assert K.m == 14
    assert K.dim == 2
    assert reduced_cohomology_ranks(K).ranks == (0, 0, 0, 1)
    assert len(K.maximal_faces()) == 24  # one facet per vertex of the polytope


def test_nerves_are_spheres_small():
    for G in [path_graph(2), path_graph(3), cycle_graph(3), path_graph(4),
              Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)]), cycle_graph(4),
              complete_graph(4)]:
        K = associahedron_nerve(G)
        profile = reduced_cohomology_ranks(K)
        n = G.n - 1  # polytope dimension for connected G
        assert profile.rank(n - 1) == 1
        assert profile.total() == 1


def test_facet_correspondence():
    for G in [path_graph(3), path_graph(4), cycle_graph(4), complete_graph(4)]:
        B = graphical_building_set(G)
        K = nested_set_complex(B)
        non_maximal = sum(
            len([s for s in B.sets if set(s) < set(block)])
            for block in B.maximal_elements()
        )
        assert K.m == non_maximal
        # no ghost vertices: every element appears as a vertex of the nerve
        assert all(K.is_face((v,)) for v in range(1, K.m + 1))


def test_join_compatibility_for_disjoint_graphs():
    G1 = path_graph(3)
    G2 = cycle_graph(3)
    union = Graph.from_edges(6, list(G1.edges) + [(a + 3, b + 3) for a, b in G2.edges])
    assert associahedron_nerve(union) == associahedron_nerve(G1).join(
        associahedron_nerve(G2)
    )


def test_single_vertex_components_are_join_identities():
    G = Graph.from_edges(3, [(2, 3)])
    K = associahedron_nerve(G)
    assert K == SimplicialComplex(2, [(1, 2)])  # only the edge contributes


def test_cube_and_simplex_building_sets():
    # simplex building set: singletons plus the full set -> boundary of a simplex
    B = BuildingSet.from_sets(3, [(1, 2, 3)])
    assert nested_set_complex(B) == SimplicialComplex(3, [(1, 2, 3)])
    # square building set: {1},{2},{3},{12},{123} -> 4-cycle
    B = BuildingSet.from_sets(3, [(1, 2), (1, 2, 3)])
    K = nested_set_complex(B)
    assert are_isomorphic(K, polygon_nerve(4))


def test_capacity_guard():
    with pytest.raises(CapacityError):
        graphical_building_set(Graph.from_edges(11, []))


def test_formality_formal_cases():
    verdict = formality_classify(Graph.from_edges(5, [(1, 2), (2, 3), (4, 5)]))
    assert verdict.formal
    assert verdict.diffeo_type == ("(S^3 x S^4)^#5", "S^3")
    assert verdict.witness is None
    verdict = formality_classify(cycle_graph(3))
    assert verdict.diffeo_type == ("(S^3 x S^5)^#9 # (S^4 x S^4)^#8",)
    verdict = formality_classify(Graph.from_edges(1, []))
    assert verdict.formal and verdict.diffeo_type == ()


def test_formality_path4_nonformal():
    verdict = formality_classify(path_graph(4))
    assert not verdict.formal
    assert verdict.witness is not None
    assert verdict.witness.report.triple.nontrivial
    assert verdict.witness.report.triple.strictly_defined


def test_formality_k4_uses_long_profile():
    verdict = formality_classify(complete_graph(4))
    assert not verdict.formal
    w = verdict.witness
    assert w is not None
    assert tuple(len(s) for s in w.supports) == (4, 2, 4)
    assert w.report.value.total_degree == 12
    assert not w.report.value.is_zero
    assert len(w.report.triple.indeterminacy_basis) == 0
