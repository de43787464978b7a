import itertools

import pytest

from weaksys import (
    Budget,
    BudgetExceeded,
    FlagComplex,
    Graph,
    InputError,
    SubcomplexHandle,
    ball,
    distance,
    find_chordless_cycle,
    is_full,
    link,
    span,
    sphere,
)
from weaksys.core import cliques_in_mask, induced_cycles, mask_of
from weaksys.corpus import (
    cycle_complex,
    flag_torus_complex,
    hexpatch_complex,
    octahedron_complex,
    wheel_complex,
)

import oracles


def test_graph_validation():
    with pytest.raises(InputError):
        Graph(2, [(0, 0)])
    with pytest.raises(InputError):
        Graph(2, [(0, 5)])
    with pytest.raises(InputError):
        Graph(2, [], labels=["a", "a"])
    g = Graph(3, [(0, 1), (1, 2)], labels=["a", "b", "c"])
    g.check()
    assert g.neighbors(1) == (0, 2)
    assert g.vertex_by_label("c") == 2


def test_span_whole_octahedron():
    X = octahedron_complex()
    Y = span(X, range(6))
    assert Y.vertex_set == frozenset(range(6))
    assert Y.full


def test_span_edge_of_wheel():
    X = wheel_complex(5)
    Y = span(X, (1, 2))
    assert Y.edge_set() == {(1, 2)}


def test_span_alternating_vertices_of_hexagon():
    X = cycle_complex(6)
    Y = span(X, (0, 2, 4))
    # derived by direct adjacency lookup: no two are adjacent
    assert Y.edge_set() == set()
    with pytest.raises(InputError):
        span(X, (0, 99))


def test_link_of_wheel_hub_is_rim():
    X = wheel_complex(5)
    Y = link(X, (0,))
    assert Y.vertex_set == frozenset(range(1, 6))


def test_link_in_octahedron_matches_brute_force():
    X = octahedron_complex()
    adj = oracles.adjacency(X)
    # vertex link: common neighbors; derived by brute-force adjacency
    lk = link(X, (0,))
    assert lk.vertex_set == frozenset(adj[0])
    g, old = lk.induced_graph()
    assert sorted(g.degree(v) for v in g.vertices) == [2, 2, 2, 2]
    # edge link: two non-adjacent vertices
    e = next(iter(X.skeleton.edges()))
    lke = link(X, e)
    expect = adj[e[0]] & adj[e[1]]
    assert lke.vertex_set == frozenset(expect)
    u, v = sorted(lke.vertex_set)
    assert not X.has_edge(u, v)
    with pytest.raises(InputError):
        link(X, (0, 3))  # antipodes span no simplex


def test_distance_basic():
    X = cycle_complex(6)
    assert distance(X, 0, 0) == 0
    assert distance(X, 0, 3) == 3
    two = Graph(2, [])
    assert distance(FlagComplex(two), 0, 1) == float("inf")


def test_distance_hexpatch_matches_lattice():
    X = hexpatch_complex(3)
    # derived: BFS distance equals the closed-form lattice distance
    for v in X.vertices:
        q, r = map(int, X.label(v).split(","))
        assert X.dist(0, v) == oracles.hex_dist(q, r)


def test_ball_and_sphere():
    X = wheel_complex(5)
    assert ball(X, 0, 1).vertex_set == frozenset(range(6))
    X6 = cycle_complex(6)
    assert sphere(X6, 0, 3).vertex_set == {3}
    hp = hexpatch_complex(4)
    for r in range(1, 5):
        assert len(sphere(hp, 0, r).vertex_set) == 6 * r
    with pytest.raises(InputError):
        ball(X, (), 1)


def test_sphere_is_ball_difference():
    X = hexpatch_complex(2)
    for i in range(1, 4):
        b_i = ball(X, 0, i).vertex_set
        b_prev = ball(X, 0, i - 1).vertex_set
        assert sphere(X, 0, i).vertex_set == b_i - b_prev


def test_find_chordless_cycle_octahedron():
    X = octahedron_complex()
    w = find_chordless_cycle(X, 4)
    assert w is not None and len(w) == 4 and w.revalidate(X)


def test_find_chordless_cycle_none_on_torus():
    X = flag_torus_complex(7, 7)
    assert find_chordless_cycle(X, 5) is None


def test_find_chordless_cycle_on_cycle():
    X = cycle_complex(5)
    w = find_chordless_cycle(X, 5)
    assert w is not None and w.cycle == (0, 1, 2, 3, 4)
    with pytest.raises(InputError):
        find_chordless_cycle(X, 3)


@pytest.mark.parametrize("name,builder", [
    ("octahedron", octahedron_complex),
    ("wheel5", lambda: wheel_complex(5)),
    ("cycle6", lambda: cycle_complex(6)),
    ("hexpatch1", lambda: hexpatch_complex(1)),
])
def test_induced_cycle_enumeration_matches_subset_scan(name, builder):
    X = builder()
    got = {frozenset(c) for c in induced_cycles(X, X.full_mask(), 4, X.n)}
    want = {frozenset(c) for c in oracles.induced_cycles_brute(X)}
    assert got == want


def test_clique_enumeration_matches_subset_scan():
    X = octahedron_complex()
    got = sorted(cliques_in_mask(X, X.full_mask()))
    want = sorted(oracles.cliques_brute(X))
    assert got == want
    assert X.dim() == 2


def test_is_full():
    X5 = wheel_complex(5)
    assert is_full(X5, span(X5, range(1, 6)))
    X6 = cycle_complex(6)
    assert is_full(X6, span(X6, (1, 2, 3, 4)))
    tri = FlagComplex(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    partial = SubcomplexHandle(
        tri, frozenset((0, 1, 2)), full=False,
        simplices=frozenset({(0,), (1,), (2,), (0, 1), (1, 2)}))
    assert not is_full(tri, partial)


def test_budget_exceeded_is_loud():
    X = hexpatch_complex(2)
    with pytest.raises(BudgetExceeded):
        list(cliques_in_mask(X, X.full_mask(), Budget(5)))


def test_link_within_vertex_link():
    X = octahedron_complex()
    for simplex in oracles.cliques_brute(X):
        lk = link(X, simplex).vertex_set
        for v in simplex:
            assert lk <= link(X, (v,)).vertex_set
