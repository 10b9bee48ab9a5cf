import pytest

from thdim import (Graph, RandomizedSearchError, SplitExtension, ThresholdGraph,
                   bipartite_coloring_family, bounded_partition,
                   build_suitable_family, complete_graph, cycle_graph,
                   decompose_maxdeg, decompose_split, path_graph, petersen_graph,
                   recognize_threshold, star_graph, uncovered_suitable_pairs,
                   verify_decomposition)
from thdim.graphs import edge_mask

from helpers import bounded_degree_graph, random_corpus


# ---------------------------------------------------------------------------
# suitable families

def test_identity_plus_reverse_is_2_suitable():
    perms = [(0, 1, 2), (2, 1, 0)]
    assert uncovered_suitable_pairs(3, 2, perms) == []


def test_identity_alone_is_not_2_suitable():
    assert uncovered_suitable_pairs(3, 2, [(0, 1, 2)]) != []


def test_build_small_family():
    fam = build_suitable_family(3, 2, seed=0)
    assert fam.exhaustive
    assert uncovered_suitable_pairs(3, 2, fam.perms) == []


def test_build_family_n_equals_k():
    fam = build_suitable_family(2, 2, seed=0)
    assert len(fam.perms) >= 2
    assert uncovered_suitable_pairs(2, 2, fam.perms) == []


def test_build_family_n8_k3():
    fam = build_suitable_family(8, 3, seed=1)
    assert fam.exhaustive
    assert uncovered_suitable_pairs(8, 3, fam.perms) == []


def test_build_family_deterministic():
    assert build_suitable_family(6, 2, seed=9) == build_suitable_family(6, 2, seed=9)


def test_build_family_preconditions():
    with pytest.raises(ValueError):
        build_suitable_family(3, 1, seed=0)
    with pytest.raises(ValueError):
        build_suitable_family(2, 3, seed=0)


# ---------------------------------------------------------------------------
# bounded partitions

def test_partition_trivial():
    g = petersen_graph()
    parts = bounded_partition(g, g.max_degree(), 1, seed=0)
    assert parts == (frozenset(range(10)),)


def test_partition_c8_two_parts():
    g = cycle_graph(8)
    parts = bounded_partition(g, 1, 2, seed=0)
    assert len(parts) == 2
    for v in range(8):
        for part in parts:
            assert len(g.adj[v] & part) <= 1


def test_partition_k4_three_parts_or_cap():
    try:
        parts = bounded_partition(complete_graph(4), 1, 3, seed=0)
    except RandomizedSearchError as err:
        assert "worst_violation" in str(err)
        return
    for v in range(4):
        for part in parts:
            assert len(complete_graph(4).adj[v] & part) <= 1


def test_partition_property_on_randoms():
    for i, g in enumerate(random_corpus(6, [(12, 18), (15, 25)], seed=61)):
        d = max(2, g.max_degree() // 2 + 1)
        parts = bounded_partition(g, d, 2, seed=i)
        assert frozenset().union(*parts) == frozenset(range(g.n))
        for v in range(g.n):
            for part in parts:
                assert len(g.adj[v] & part) <= d


def test_partition_preconditions():
    with pytest.raises(ValueError):
        bounded_partition(path_graph(3), 0, 1)
    with pytest.raises(ValueError):
        bounded_partition(path_graph(3), 1, 0)


# ---------------------------------------------------------------------------
# bipartite coloring families

def test_colorings_trivial_when_degrees_small():
    g = star_graph(5)  # center 0 in A, leaves in B have degree 1
    fam = bipartite_coloring_family(g, [0], [1, 2, 3, 4], r=1, t=1, ell=2, seed=0)
    assert len(fam) >= 1


def test_colorings_star_center_in_b():
    # center 4 sees 4 leaves; with r=2 and 2 colors a coloring must balance
    g = Graph(5, [(4, i) for i in range(4)])
    fam = bipartite_coloring_family(g, [0, 1, 2, 3], [4], r=2, t=3, ell=2, seed=0)
    ok = False
    for c in fam:
        tally = {}
        for leaf in range(4):
            tally[c[leaf]] = tally.get(c[leaf], 0) + 1
        if all(x <= 2 for x in tally.values()):
            ok = True
    assert ok


def test_colorings_always_verify_when_r_covers_degree():
    g = cycle_graph(6)
    fam = bipartite_coloring_family(g, [0, 2, 4], [1, 3, 5], r=2, t=1, ell=1, seed=0)
    assert len(fam) == 1


def test_colorings_preconditions():
    with pytest.raises(ValueError):
        bipartite_coloring_family(path_graph(2), [0], [1], r=0, t=1, ell=1)


# ---------------------------------------------------------------------------
# split extensions

def test_split_extension_validation():
    g = path_graph(4)
    with pytest.raises(ValueError):
        SplitExtension(base=g, a_side=frozenset({0, 1}), b_side=frozenset({2, 3}))
    with pytest.raises(ValueError):
        SplitExtension(base=g, a_side=frozenset({0}), b_side=frozenset({0, 1, 2, 3}))


def test_split_extension_graph():
    g = path_graph(4)
    ext = SplitExtension(base=g, a_side=frozenset({0, 2}), b_side=frozenset({1, 3}))
    eg = ext.as_graph()
    assert eg.has_edge(1, 3)            # clique side completed
    assert eg.has_edge(0, 1) and eg.has_edge(2, 3) and eg.has_edge(1, 2)
    assert not eg.has_edge(0, 2)


def test_split_low_degree_clamps():
    # every B vertex has at most one A neighbor: d clamps to 2, still verifies
    g = Graph(4, [(0, 2), (1, 3)])
    ext = SplitExtension(base=g, a_side=frozenset({0, 1}), b_side=frozenset({2, 3}))
    d = decompose_split(ext, seed=0)
    assert d.verified


def test_split_two_centers_four_leaves():
    edges = [(a, b) for a in range(4) for b in (4, 5)]
    g = Graph(6, edges)
    ext = SplitExtension(base=g, a_side=frozenset(range(4)), b_side=frozenset({4, 5}))
    d = decompose_split(ext, seed=0)
    assert d.verified
    target = ext.as_graph()
    assert verify_decomposition(target, d).ok
    for f in d.factors:
        assert isinstance(recognize_threshold(f.graph), ThresholdGraph)


def test_split_universal_factor_alone_insufficient():
    # the all-of-B-universal factor keeps every A-B pair, so any missing A-B
    # edge must be resolved by some cell factor; drop them and verify fails
    edges = [(a, b) for a in range(4) for b in (4, 5)]
    g = Graph(6, edges[:-1])  # leaf 3 not adjacent to 5
    ext = SplitExtension(base=g, a_side=frozenset(range(4)), b_side=frozenset({4, 5}))
    d = decompose_split(ext, seed=0)
    universal_only = [f for f in d.factors
                      if all(len(f.graph.adj[b]) == 5 for b in (4, 5))]
    from thdim import Decomposition
    stripped = Decomposition(factors=tuple(universal_only) or (d.factors[0],),
                             method="manual", bound_claimed=len(d.factors))
    assert not verify_decomposition(ext.as_graph(), stripped).ok
    assert verify_decomposition(ext.as_graph(), d).ok


# ---------------------------------------------------------------------------
# full pipeline

@pytest.mark.parametrize("g", [complete_graph(4), cycle_graph(12), petersen_graph()])
def test_maxdeg_named_graphs(g):
    d = decompose_maxdeg(g, seed=0)
    assert d.verified and d.size <= d.bound_claimed
    for f in d.factors:
        assert isinstance(recognize_threshold(f.graph), ThresholdGraph)


def test_maxdeg_requires_degree_two():
    with pytest.raises(ValueError):
        decompose_maxdeg(path_graph(2), seed=0)


def test_maxdeg_deterministic():
    g = petersen_graph()
    a = decompose_maxdeg(g, seed=5)
    b = decompose_maxdeg(g, seed=5)
    assert [edge_mask(f.graph) for f in a.factors] == [edge_mask(f.graph) for f in b.factors]


def test_maxdeg_bounded_randoms():
    for i in range(4):
        g = bounded_degree_graph(14 + 4 * i, round(1.3 * (14 + 4 * i)), 6, seed=i)
        d = decompose_maxdeg(g, seed=i)
        assert d.verified
