"""Convexity of subcomplexes: geodesic closure, short-geodesic closure,
link-level closure, descent around simplices, and convex neighborhoods
of quasi-convex subcomplexes.

``is_convex`` is the brute-force oracle: it walks every geodesic between
every vertex pair of the subcomplex.  A per-pair interval prefilter (a
vertex lies on some geodesic between u and v exactly when
d(u,w) + d(w,v) = d(u,v)) skips pairs that cannot fail; when a pair can
fail, a concrete violating geodesic is materialized as the certificate.
The fast route for the same predicate is short-geodesic closure plus
connectedness; the test suite cross-checks the two on sampled
subcomplexes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .conditions import Verdict, check_sd2_star_k, check_simple_descent, \
    is_weakly_systolic
from .core import (
    FlagComplex,
    Simplex,
    SubcomplexHandle,
    ball,
    iter_bits,
    mask_of,
)
from .errors import Budget, InputError, PreconditionError, ensure_budget


@dataclass(frozen=True)
class GeodesicSet:
    """All 1-skeleton geodesics between two vertices."""

    u: int
    v: int
    paths: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.paths)


def geodesics_between(X: FlagComplex, u: int, v: int,
                      budget: Budget | None = None) -> GeodesicSet:
    """Enumerate every geodesic from u to v by walking the BFS-predecessor
    relation for distances from u."""
    b = ensure_budget(budget)
    du = X.dist_from(u)
    if du[v] < 0:
        raise InputError("vertices lie in different components")
    paths: list[tuple[int, ...]] = []
    path = [v]

    def rec(w: int):
        b.tick()
        if w == u:
            paths.append(tuple(reversed(path)))
            return
        for x in X.neighbors(w):
            if 0 <= du[x] == du[w] - 1:
                path.append(x)
                rec(x)
                path.pop()

    rec(v)
    return GeodesicSet(u, v, tuple(paths))


def _first_bad_geodesic(X: FlagComplex, u: int, v: int, allowed_mask: int,
                        budget: Budget) -> tuple[int, ...] | None:
    """First geodesic from u to v leaving ``allowed_mask``, if any."""
    for g in geodesics_between(X, u, v, budget).paths:
        if any(not (allowed_mask >> w) & 1 for w in g):
            return g
    return None


def is_convex(X: FlagComplex, Y: SubcomplexHandle,
              budget: Budget | None = None) -> Verdict:
    """Geodesic closure of a full subcomplex, by exhaustive enumeration.

    Fails with a concrete violating geodesic.  Disconnected subcomplexes
    of a connected ambient complex always fail (some geodesic between the
    pieces leaves the vertex set).
    """
    _require_full(X, Y)
    b = ensure_budget(budget)
    verts = Y.vertices_sorted()
    stats = {"pairs": 0}
    if not verts:
        raise InputError("empty subcomplex")
    mask = Y.mask
    dm = X.dist_matrix()
    in_y = np.zeros(X.n, dtype=bool)
    in_y[verts] = True
    for i, u in enumerate(verts):
        du = dm[u]
        for v in verts[i + 1:]:
            b.tick()
            stats["pairs"] += 1
            if du[v] < 0:
                return Verdict("convex", False, ("disconnected", (u, v)), stats)
            if du[v] <= 1:
                continue
            # interval prefilter: on-some-geodesic vertices outside Y
            on = (du + dm[v] == du[v]) & ~in_y
            if on.any():
                bad = _first_bad_geodesic(X, u, v, mask, b)
                stats["budget"] = b.used
                return Verdict("convex", False, bad, stats)
    if not Y.connected():
        return Verdict("convex", False, ("disconnected", tuple(verts[:1])), stats)
    stats["budget"] = b.used
    return Verdict("convex", True, None, stats)


def is_convex_by_enumeration(X: FlagComplex, Y: SubcomplexHandle,
                             budget: Budget | None = None) -> Verdict:
    """Same predicate as ``is_convex`` with no prefilter: every geodesic of
    every pair is walked.  Kept as the cross-check route."""
    _require_full(X, Y)
    b = ensure_budget(budget)
    verts = Y.vertices_sorted()
    mask = Y.mask
    stats = {"pairs": 0, "geodesics": 0}
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            stats["pairs"] += 1
            if X.dist(u, v) < 0:
                return Verdict("convex", False, ("disconnected", (u, v)), stats)
            for g in geodesics_between(X, u, v, b).paths:
                stats["geodesics"] += 1
                if any(not (mask >> w) & 1 for w in g):
                    return Verdict("convex", False, g, stats)
    if verts and not Y.connected():
        return Verdict("convex", False, ("disconnected", tuple(verts[:1])), stats)
    return Verdict("convex", True, None, stats)


def _require_full(X: FlagComplex, Y: SubcomplexHandle) -> None:
    from .core import is_full
    if not is_full(X, Y):
        raise InputError("subcomplex is not full in the ambient complex")


def is_3convex(X: FlagComplex, Y: SubcomplexHandle,
               budget: Budget | None = None) -> Verdict:
    """Closure under length-2 geodesics: the middle vertex of any geodesic
    (v1, v2, v3) with both ends in Y lies in Y."""
    _require_full(X, Y)
    b = ensure_budget(budget)
    verts = Y.vertices_sorted()
    mask = Y.mask
    stats = {"pairs": 0}
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if X.dist(u, v) != 2:
                continue
            b.tick()
            stats["pairs"] += 1
            mid = X.nbr_mask(u) & X.nbr_mask(v) & ~mask
            if mid:
                w = next(iter_bits(mid))
                return Verdict("3convex", False, (u, w, v), stats)
    stats["budget"] = b.used
    return Verdict("3convex", True, None, stats)


def is_locally_3convex(X: FlagComplex, Y: SubcomplexHandle,
                       budget: Budget | None = None) -> Verdict:
    """Every vertex link of Y is 3-convex inside the ambient link.

    Distances are measured inside the link graph, not the ambient complex.
    """
    _require_full(X, Y)
    b = ensure_budget(budget)
    stats = {"links": 0}
    for v in Y.vertices_sorted():
        stats["links"] += 1
        link_vs = X.neighbors(v)
        g, old = X.induced_graph(link_vs)
        y_local = {i for i, u in enumerate(old) if u in Y.vertex_set}
        for i in y_local:
            b.tick()
            di = g.bfs(i)
            for j in y_local:
                if j <= i or di[j] != 2:
                    continue
                for m in range(g.n):
                    if m not in y_local and di[m] == 1 and g.has_edge(m, j):
                        return Verdict("locally-3convex", False,
                                       (old[i], old[m], old[j], v), stats)
    stats["budget"] = b.used
    return Verdict("locally-3convex", True, None, stats)


def check_edge_descent(X: FlagComplex, simplex,
                       weakly_systolic: bool | None = None,
                       budget: Budget | None = None) -> Verdict:
    """Edges on spheres around a simplex have a common inward neighbor at
    the right distance from some simplex vertex.

    The guarantee holds on weakly systolic complexes; pass
    ``weakly_systolic=True`` to skip re-deriving that hypothesis, or leave
    it None to have it checked (a failing hypothesis raises
    ``PreconditionError``).
    """
    b = ensure_budget(budget)
    s = X.as_simplex(simplex)
    if weakly_systolic is None:
        weakly_systolic = is_weakly_systolic(X, b).holds
    if not weakly_systolic:
        raise PreconditionError("complex is not weakly systolic")
    dist = X.dist_to_set(s)
    dists_to_vertex = {w: X.dist_from(w) for w in s}
    stats = {"edges": 0}
    max_r = max(dist)
    for i in range(1, max_r + 1):
        sphere_vs = [v for v in X.vertices if dist[v] == i]
        sphere_mask = mask_of(sphere_vs)
        for z in sphere_vs:
            for z2 in iter_bits(X.nbr_mask(z) & sphere_mask):
                if z2 <= z:
                    continue
                b.tick()
                stats["edges"] += 1
                common = X.nbr_mask(z) & X.nbr_mask(z2)
                ok = False
                for v in iter_bits(common):
                    if dist[v] <= i - 1 and any(
                            dists_to_vertex[w][v] == i - 1 for w in s):
                        ok = True
                        break
                if not ok:
                    return Verdict("edge-descent", False, (z, z2, i), stats)
    stats["budget"] = b.used
    return Verdict("edge-descent", True, None, stats)


def _is_maximal_simplex(X: FlagComplex, s: Simplex) -> bool:
    m = X.common_neighbors_mask(s)
    return m & ~mask_of(s) == 0


def check_ball_convexity(X: FlagComplex, simplex, i: int,
                         weakly_systolic: bool | None = None,
                         budget: Budget | None = None) -> Verdict:
    """Convexity of the radius-i ball around a simplex (guaranteed for
    i >= 2 on weakly systolic complexes); for maximal simplices the full
    descent condition around the simplex is verified as well."""
    b = ensure_budget(budget)
    s = X.as_simplex(simplex)
    if weakly_systolic is None:
        weakly_systolic = is_weakly_systolic(X, b).holds
    if not weakly_systolic:
        raise PreconditionError("complex is not weakly systolic")
    verdict = is_convex(X, ball(X, s, i), b)
    stats = dict(verdict.stats)
    if not verdict.holds:
        return Verdict("ball-convex", False, verdict.certificate, stats)
    if _is_maximal_simplex(X, s):
        dist = X.dist_to_set(s)
        sd = check_simple_descent(X, s, max(max(dist), 1), b)
        stats["maximal-descent"] = sd.holds
        if not sd.holds:
            return Verdict("ball-convex", False, sd.certificate, stats)
    stats["budget"] = b.used
    return Verdict("ball-convex", True, None, stats)


def quasiconvexity_constant(X: FlagComplex, Y: SubcomplexHandle,
                            budget: Budget | None = None) -> int:
    """Measured quasi-convexity constant: the largest distance to Y over
    all vertices of all geodesics between vertices of Y."""
    b = ensure_budget(budget)
    verts = Y.vertices_sorted()
    if not verts:
        raise InputError("empty subcomplex")
    dist_y = np.asarray(X.dist_to_set(verts))
    dm = X.dist_matrix()
    in_interval_max = 0
    for i, u in enumerate(verts):
        du = dm[u]
        for v in verts[i + 1:]:
            b.tick()
            if du[v] < 0:
                raise InputError("subcomplex vertices in different components")
            on = (du + dm[v] == du[v])
            val = int(dist_y[on].max()) if on.any() else 0
            in_interval_max = max(in_interval_max, val)
    return in_interval_max


def find_convex_neighborhood(X: FlagComplex, Y: SubcomplexHandle, n_max: int,
                             check_preconditions: bool = True,
                             budget: Budget | None = None):
    """Smallest n <= n_max with the radius-n ball around Y convex, or None.

    The guarantee that some such n exists needs the ambient complex to be
    weakly systolic with the order-7 wheel condition; these are checked
    unless disabled.  The measured quasi-convexity constant of Y is
    reported alongside the radius.
    """
    b = ensure_budget(budget)
    if check_preconditions:
        if not is_weakly_systolic(X, b).holds:
            raise PreconditionError("complex is not weakly systolic")
        pre = check_sd2_star_k(X, 7, b)
        if not pre.holds:
            raise PreconditionError("complex fails the order-7 wheel condition",
                                    pre.certificate)
    k = quasiconvexity_constant(X, Y, b)
    for n in range(0, n_max + 1):
        if is_convex(X, ball(X, Y, n), b).holds:
            return n, k
    return None, k
