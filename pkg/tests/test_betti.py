import random

import pytest

from eideal.betti import (BettiTable, HomologyEngine, SizeGuardExceeded,
                          betti_table, forest_pd, has_linear_presentation,
                          has_linear_resolution, independence_complex,
                          invariants, pd_componentwise, reduced_homology_dims,
                          regularity_componentwise, SimplicialComplex)
from eideal.chordality import is_4_cochordal, is_cochordal
from eideal.comb_invariants import tree_induced_matching
from eideal.graph_core import (build_graph, complete_graph, cycle_graph,
                               disjoint_union, empty_graph, enumerate_graphs,
                               graph_from_edge_mask, path_graph)
from eideal.random_models import sample_gnp

from oracles import (naive_betti_table, naive_homology_of_faces,
                     naive_independent_sets, naive_pd_quotient,
                     naive_regularity_quotient)


def random_forest(n, rng, drop=0.25):
    if n <= 1:
        return empty_graph(n)
    edges = [(rng.randrange(i), i) for i in range(1, n)
             if rng.random() > drop]
    return build_graph(n, edges)


def test_independence_complex_cases():
    k3 = independence_complex(complete_graph(3))
    assert sorted(k3.facets) == [1, 2, 4]
    full = independence_complex(empty_graph(3))
    assert full.facets == (7,)
    c5 = independence_complex(cycle_graph(5))
    assert len(c5.facets) == 5
    assert all(f.bit_count() == 2 for f in c5.facets)


def test_reduced_homology_triangle_boundary():
    # Boundary of a triangle: three edges, no filled face -> a circle.
    circle = SimplicialComplex(3, (0b011, 0b101, 0b110))
    assert reduced_homology_dims(circle, "q") == [0, 0, 1]
    assert reduced_homology_dims(circle, "f2") == [0, 0, 1]


def test_reduced_homology_full_simplex_and_points():
    simplex = SimplicialComplex(3, (0b111,))
    assert reduced_homology_dims(simplex, "q") == [0, 0, 0, 0]
    two_points = SimplicialComplex(2, (0b01, 0b10))
    assert reduced_homology_dims(two_points, "q") == [0, 1]
    empty = SimplicialComplex(0, (0,))
    assert reduced_homology_dims(empty, "q") == [1]
    void = SimplicialComplex(0, ())
    assert reduced_homology_dims(void, "q") == []


def test_engine_matches_naive_homology_exhaustive_n5():
    for field in ("q", "f2"):
        for g in enumerate_graphs(5):
            engine = HomologyEngine(g, field)
            for w in range(1 << 5):
                verts = [v for v in range(5) if w >> v & 1]
                from eideal.graph_core import induced_subgraph
                sub = induced_subgraph(g, verts)
                faces = naive_independent_sets(sub)
                expected = naive_homology_of_faces(faces, field)
                expected = {d: r for d, r in expected.items() if r}
                assert engine.dims(w) == expected, (tuple(g.adj), w, field)


def test_engine_matches_naive_homology_random_n7():
    rng = random.Random(17)
    for field in ("q", "f2"):
        for _ in range(60):
            mask = rng.randrange(1 << 21)
            g = graph_from_edge_mask(7, mask)
            engine = HomologyEngine(g, field)
            w = (1 << 7) - 1
            faces = naive_independent_sets(g)
            expected = {d: r
                        for d, r in naive_homology_of_faces(faces, field).items()
                        if r}
            assert engine.dims(w) == expected


def test_betti_table_c5_worked_example():
    table = betti_table(cycle_graph(5))
    assert table.entries == {(1, 2): 5, (2, 3): 5, (3, 5): 1}
    inv = invariants(cycle_graph(5))
    assert inv.regularity_quotient == 2
    assert inv.regularity_ideal == 3
    assert inv.pd_quotient == 3
    assert inv.depth_quotient == 2
    assert inv.krull_dim == 2


def test_betti_table_single_edge_and_two_edges():
    assert betti_table(path_graph(2)).entries == {(1, 2): 1}
    two = build_graph(4, [(0, 1), (2, 3)])
    assert betti_table(two).entries == {(1, 2): 2, (2, 4): 1}


def test_betti_table_edgeless():
    inv = invariants(empty_graph(4))
    assert inv.pd_quotient == 0
    assert inv.depth_quotient == 4
    assert inv.regularity_quotient == 0


def test_betti_table_exhaustive_n4_vs_naive():
    for field in ("q", "f2"):
        for g in enumerate_graphs(4):
            assert betti_table(g, field).entries == naive_betti_table(g, field)


def test_betti_table_random_n6_vs_naive():
    rng = random.Random(3)
    for _ in range(25):
        mask = rng.randrange(1 << 15)
        g = graph_from_edge_mask(6, mask)
        assert betti_table(g, "q").entries == naive_betti_table(g, "q")


def test_betti_support_bounds():
    for trial in range(30):
        g = sample_gnp(7, 0.35, seed=123 + trial)
        for (i, j), rank in betti_table(g).entries.items():
            assert rank >= 1
            assert i + 1 <= j <= 2 * i


def test_field_independence_small_corpus():
    for g in enumerate_graphs(5):
        assert betti_table(g, "q").entries == betti_table(g, "f2").entries
    rng = random.Random(11)
    for n in (6, 7):
        for _ in range(40):
            mask = rng.randrange(1 << (n * (n - 1) // 2))
            g = graph_from_edge_mask(n, mask)
            tq = betti_table(g, "q").entries
            t2 = betti_table(g, "f2").entries
            assert tq == t2, f"field disagreement witness: n={n} adj={g.adj}"


def test_size_guard():
    with pytest.raises(SizeGuardExceeded):
        betti_table(empty_graph(19))
    with pytest.raises(SizeGuardExceeded):
        has_linear_resolution(empty_graph(25))


def test_linear_resolution_cases():
    assert not has_linear_resolution(cycle_graph(5))
    assert has_linear_presentation(cycle_graph(5))
    assert has_linear_resolution(cycle_graph(4))
    two = build_graph(4, [(0, 1), (2, 3)])
    assert not has_linear_resolution(two)
    assert not has_linear_presentation(two)
    assert has_linear_resolution(empty_graph(3))
    assert has_linear_presentation(empty_graph(3))


def test_lr_lp_match_table_definition():
    rng = random.Random(29)
    for _ in range(60):
        mask = rng.randrange(1 << 15)
        g = graph_from_edge_mask(6, mask)
        table = betti_table(g)
        lr_expected = g.edge_count == 0 or table.regularity_quotient() == 1
        lp_expected = all(j < 4 for (i, j) in table.entries if i == 2)
        assert has_linear_resolution(g) == lr_expected
        assert has_linear_presentation(g) == lp_expected


def test_froberg_equivalences_random_n7():
    rng = random.Random(31)
    for _ in range(120):
        mask = rng.randrange(1 << 21)
        g = graph_from_edge_mask(7, mask)
        assert has_linear_resolution(g) == is_cochordal(g)
        assert has_linear_presentation(g) == is_4_cochordal(g)


def test_forest_regularity_identity():
    rng = random.Random(1234)
    for _ in range(80):
        f = random_forest(rng.randint(1, 11), rng)
        reg_q = betti_table(f).regularity_quotient()
        assert reg_q == tree_induced_matching(f)


def test_forest_pd_formula_vs_table():
    # Validation mandated before the fast path may be used: the formula
    # must agree with the subset-homology table on forests.
    rng = random.Random(77)
    for g in enumerate_graphs(5):
        from eideal.comb_invariants import is_forest
        if is_forest(g):
            assert forest_pd(g) == betti_table(g).projective_dimension()
    for _ in range(150):
        f = random_forest(rng.randint(1, 13), rng)
        assert forest_pd(f) == betti_table(f).projective_dimension()


def test_componentwise_reg_pd():
    g = disjoint_union(cycle_graph(5), path_graph(2))
    reg = regularity_componentwise(g)
    assert reg.value == 3 and reg.censored_components == 0
    pd = pd_componentwise(g)
    assert pd.value == 4

    forest = disjoint_union(path_graph(3), path_graph(3))
    assert regularity_componentwise(forest).value == \
        betti_table(forest).regularity_quotient()
    assert pd_componentwise(forest).value == \
        betti_table(forest).projective_dimension()

    edgeless = empty_graph(5)
    assert regularity_componentwise(edgeless).value == 0
    assert pd_componentwise(edgeless).value == 0


def test_componentwise_censoring():
    big_cycle = cycle_graph(20)
    res = regularity_componentwise(big_cycle, betti_guard=18)
    assert res.censored_components == 1
    assert res.censored_sizes == (20,)
    assert res.value == 0
    # Trees beyond the guard are never censored: the fast paths cover them.
    assert regularity_componentwise(path_graph(40)).censored_components == 0
    assert pd_componentwise(path_graph(40)).censored_components == 0


def test_componentwise_matches_whole_graph_table():
    rng = random.Random(15)
    for _ in range(30):
        a = sample_gnp(5, 0.45, seed=rng.randrange(10 ** 9))
        b = sample_gnp(6, 0.35, seed=rng.randrange(10 ** 9))
        g = disjoint_union(a, b)
        table = betti_table(g)
        assert regularity_componentwise(g).value == table.regularity_quotient()
        assert pd_componentwise(g).value == table.projective_dimension()


def test_additivity_against_naive():
    rng = random.Random(8)
    for _ in range(10):
        a = sample_gnp(4, 0.5, seed=rng.randrange(10 ** 9))
        b = sample_gnp(4, 0.5, seed=rng.randrange(10 ** 9))
        g = disjoint_union(a, b)
        assert regularity_componentwise(g).value == naive_regularity_quotient(g)
        assert pd_componentwise(g).value == naive_pd_quotient(g)


def test_table_json_round_trip():
    table = betti_table(cycle_graph(5))
    again = BettiTable.from_json(table.to_json())
    assert again == table
