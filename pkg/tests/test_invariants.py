"""Corpus-wide suites for the statements the checkers are built around."""

import itertools

import pytest

from weaksys import (
    FlagComplex,
    ball,
    check_sd2_star,
    check_sd2_star_k,
    check_sd2_star_links,
    check_simple_descent,
    check_thin_bigons,
    enumerate_wheels,
    find_flat_triangle,
    is_convex,
    is_weakly_systolic,
    span,
)
from weaksys.convexity import geodesics_between
from weaksys.corpus import corpus_entries, hexpatch_complex, hyp7patch_complex

WS_ENTRIES = [e for e in corpus_entries(kind="flag")
              if e.expected.get("weakly-systolic")]


def build_ws_corpus():
    return [(e.name, e.build()) for e in WS_ENTRIES]


def test_weakly_systolic_implies_simple_descent_everywhere():
    for name, X in build_ws_corpus():
        for v in X.vertices:
            assert check_simple_descent(X, v, X.ecc(v)).holds, (name, v)


def test_wheel_with_pendant_fullness():
    # in complexes passing the wheel conditions, a 5-wheel with pendant
    # whose apex misses the hub is automatically a full subcomplex
    for entry in corpus_entries(kind="flag"):
        X = entry.build()
        if not check_sd2_star(X).holds:
            continue
        for wp in enumerate_wheels(X, 5, with_pendant=True):
            if not X.has_edge(wp.pendant, wp.wheel.hub):
                assert wp.is_full(X), entry.name


def test_simply_connected_locally_6_large_is_weakly_systolic():
    for entry in corpus_entries(kind="flag"):
        if entry.simply_connected and entry.expected.get("locally-6-large"):
            X = entry.build()
            assert is_weakly_systolic(X).holds, entry.name


def test_links_condition_matches_per_link_checks():
    # the full-wheel scan agrees with checking the complex and each vertex
    # link separately
    from weaksys import link
    for entry in corpus_entries(kind="flag"):
        X = entry.build()
        if X.n > 30:
            continue
        whole = check_sd2_star_links(X, 6).holds
        per_link = check_sd2_star_k(X, 6).holds
        for v in X.vertices:
            if not per_link:
                break
            g, _ = link(X, (v,)).induced_graph()
            per_link = check_sd2_star_k(FlagComplex(g), 6).holds
        assert whole == per_link, entry.name


def test_convex_subcomplexes_are_weakly_systolic():
    for name, X in build_ws_corpus():
        if X.n > 40:
            continue
        for v in X.vertices:
            for i in (1, 2):
                Y = ball(X, v, i)
                if not is_convex(X, Y).holds:
                    continue
                g, _ = Y.induced_graph()
                assert is_weakly_systolic(FlagComplex(g)).holds, (name, v, i)


def test_y_lemma_exhaustive():
    # common geodesic prefixes: for v1, v2 equidistant from v there is a
    # branch point u with d(v,u) = n - g and d(u, v1) = d(u, v2) = g
    for name, X in build_ws_corpus():
        if X.n > 40:
            continue
        dm = X.dist_matrix()
        for v in X.vertices:
            for v1 in X.vertices:
                n = int(dm[v, v1])
                if n <= 0:
                    continue
                for v2 in X.vertices:
                    if int(dm[v, v2]) != n:
                        continue
                    g = int(dm[v1, v2])
                    if g > n:
                        continue
                    ok = any(int(dm[v, u]) == n - g and
                             int(dm[u, v1]) == g and int(dm[u, v2]) == g
                             for u in X.vertices)
                    assert ok, (name, v, v1, v2)


def _geodesics_by_origin(X, origin, budget=None):
    by_len = {}
    for target in X.vertices:
        d = X.dist(origin, target)
        if d <= 0:
            continue
        for g in geodesics_between(X, origin, target).paths:
            by_len.setdefault(d, []).append(g)
    return by_len


def test_bigon_divergence_bound():
    # geodesic pairs with a common origin whose second vertices are
    # distance 2 apart must diverge: n < 5 + endpoint distance (in the
    # order-7 patch no such pair even reaches length 5, which is the
    # divergence happening immediately)
    X = hyp7patch_complex(3)
    assert check_sd2_star_k(X, 7).holds
    dm = X.dist_matrix()
    checked = 0
    for origin in X.vertices:
        by_len = _geodesics_by_origin(X, origin)
        for n, paths in by_len.items():
            for a, b in itertools.combinations(paths, 2):
                if dm[a[1], b[1]] == 2:
                    checked += 1
                    assert n < 5 + dm[a[-1], b[-1]], (origin, a, b)
    assert checked > 10000


def test_projection_simplex_corollary():
    # for v equidistant (n >= d+5) from nearby v1, v2, the projections of
    # v toward each of them span a common simplex
    X = hyp7patch_complex(3)
    dm = X.dist_matrix()
    checked = 0
    for v1 in X.vertices:
        for v2 in range(v1 + 1, X.n):
            d = int(dm[v1, v2])
            if d < 1 or d > 2:
                continue
            for v in X.vertices:
                n = int(dm[v, v1])
                if n != int(dm[v, v2]) or n < d + 5:
                    continue
                s1 = [u for u in X.neighbors(v) if dm[u, v1] == n - 1]
                s2 = [u for u in X.neighbors(v) if dm[u, v2] == n - 1]
                union = sorted(set(s1) | set(s2))
                assert X.skeleton.is_clique(union), (v, v1, v2)
                checked += 1
    assert checked > 0


def test_hyperbolicity_coherence_without_interiorless_sides():
    # complexes with thin bigons at the diameter carry no flat triangle
    # with an interior vertex (side at least 3) at any fitting scale
    for name, X in build_ws_corpus():
        if X.n > 90:
            continue
        diam = X.diameter()
        verdict, _ = check_thin_bigons(X, diam)
        if not verdict.holds:
            continue
        for side in range(3, diam // 2 + 1):
            assert find_flat_triangle(X, side) is None, (name, side)


def test_bitset_oracle_matches_wheel_checker_on_whole_complexes():
    import oracles as orc
    for entry in corpus_entries(kind="flag"):
        X = entry.build()
        if X.n > 30:
            continue
        full = (1 << X.n) - 1
        got = orc.sd2_star_bitset(list(X.skeleton.masks), X.n, full)
        assert got == check_sd2_star(X).holds, entry.name


def test_flat_triangle_in_flat_patch_comes_with_wide_bigons():
    X = hexpatch_complex(4)
    tri = find_flat_triangle(X, 3)
    assert tri is not None
    verdict, worst = check_thin_bigons(X, X.diameter())
    assert not verdict.holds and worst.max_width >= 2
