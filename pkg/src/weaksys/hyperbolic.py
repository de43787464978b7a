"""Negative-curvature diagnostics.

Thin bigons: every pair of geodesics with common endpoints stays within
distance one pointwise.  Strict contraction: two-step inward projections
of adjacent sphere vertices are nested.  Flat triangles: isometric copies
of the side-l equilateral triangle of the flat triangular tiling, found
by growing rows of projections over a seed geodesic with backtracking.
The boundary export builds barycentric subdivisions of even spheres with
the two-step projection maps between consecutive levels and verifies that
every map is simplicial.

All searches are exhaustive within an explicit budget; running out is a
distinct inconclusive outcome, never a verdict.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .conditions import Verdict, check_sd2_star_k
from .convexity import geodesics_between
from .core import FlagComplex, Simplex, iter_bits, mask_of
from .errors import Budget, BudgetExceeded, InputError, PreconditionError, \
    ensure_budget

# ---------------------------------------------------------------------------
# thin bigons
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BigonReport:
    """Worst geodesic pair between two endpoints: pointwise widths."""

    u: int
    v: int
    geodesic_a: tuple[int, ...]
    geodesic_b: tuple[int, ...]
    max_width: int

    def revalidate(self, X: FlagComplex) -> bool:
        ga, gb = self.geodesic_a, self.geodesic_b
        if len(ga) != len(gb) or ga[0] != gb[0] or ga[-1] != gb[-1]:
            return False
        width = max(X.dist(a, bb) for a, bb in zip(ga, gb))
        return width == self.max_width

    def render(self, X: FlagComplex) -> str:
        ga = ",".join(X.label(v) for v in self.geodesic_a)
        gb = ",".join(X.label(v) for v in self.geodesic_b)
        return f"bigon width {self.max_width}: ({ga}) vs ({gb})"


def check_thin_bigons(X: FlagComplex, max_dist: int,
                      budget: Budget | None = None
                      ) -> tuple[Verdict, BigonReport | None]:
    """Scan all geodesic pairs between vertices at distance <= max_dist.

    Holds when every pointwise width is at most one.  Returns the verdict
    together with the worst bigon found (also when the verdict holds).
    Runnable on any complex; the guarantee needs the order-7 wheel
    condition and simple connectivity.
    """
    b = ensure_budget(budget)
    dm = X.dist_matrix()
    worst: BigonReport | None = None
    stats = {"pairs": 0, "geodesic-pairs": 0}
    try:
        for u in X.vertices:
            for v in range(u + 1, X.n):
                d = int(dm[u, v])
                if d < 2 or d > max_dist:
                    continue
                stats["pairs"] += 1
                paths = geodesics_between(X, u, v, b).paths
                if len(paths) < 2:
                    continue
                arr = np.array(paths, dtype=np.int64)
                for i in range(len(paths)):
                    b.tick(len(paths) - i)
                    widths = dm[arr[i][None, :], arr[i + 1:]]
                    stats["geodesic-pairs"] += len(paths) - i - 1
                    w = int(widths.max()) if widths.size else 0
                    if worst is None or w > worst.max_width:
                        j = i + 1 + int(widths.max(axis=1).argmax())
                        worst = BigonReport(u, v, tuple(paths[i]),
                                            tuple(paths[j]), w)
    except BudgetExceeded:
        return (Verdict("thin-bigons", False, None, stats, inconclusive=True),
                worst)
    stats["budget"] = b.used
    holds = worst is None or worst.max_width <= 1
    cert = None if holds else worst
    return Verdict("thin-bigons", holds, cert, stats), worst


# ---------------------------------------------------------------------------
# strict contraction
# ---------------------------------------------------------------------------


def _project_set(X: FlagComplex, vertices, dist, radius: int) -> tuple[int, ...]:
    """Common neighbors of ``vertices`` within the ball of ``radius``."""
    m = X.full_mask()
    for v in vertices:
        m &= X.nbr_mask(v)
    return tuple(w for w in iter_bits(m) if 0 <= dist[w] <= radius)


def check_strict_contraction(X: FlagComplex, v: int,
                             budget: Budget | None = None) -> Verdict:
    """Two-step projections of adjacent same-sphere vertices are nested.

    For every radius n >= 2 and every edge (w1, w2) on the sphere of
    radius n around v, the two-step inward projections must satisfy
    containment one way or the other.  Diagnostic: runnable on any
    complex; the guarantee needs simple connectivity plus the order-7
    wheel condition.
    """
    b = ensure_budget(budget)
    dist = X.dist_from(v)
    ecc = max(dist)
    stats = {"edges": 0, "radii": max(0, ecc - 1)}
    for n in range(2, ecc + 1):
        sphere = [w for w in X.vertices if dist[w] == n]
        sphere_mask = mask_of(sphere)
        for w1 in sphere:
            for w2 in iter_bits(X.nbr_mask(w1) & sphere_mask):
                if w2 <= w1:
                    continue
                b.tick()
                stats["edges"] += 1
                p1 = _project_set(X, _project_set(X, (w1,), dist, n - 1),
                                  dist, n - 2)
                p2 = _project_set(X, _project_set(X, (w2,), dist, n - 1),
                                  dist, n - 2)
                s1, s2 = set(p1), set(p2)
                if not (s1 <= s2 or s2 <= s1):
                    stats["budget"] = b.used
                    return Verdict("strict-contraction", False,
                                   (w1, w2, n), stats)
    stats["budget"] = b.used
    return Verdict("strict-contraction", True, None, stats)


# ---------------------------------------------------------------------------
# flat triangles
# ---------------------------------------------------------------------------


def triangle_coords(side: int) -> list[tuple[int, int]]:
    """Vertices (j, m) of the side-l triangular patch, row-major:
    row m has side-m+1 vertices; (j, m) neighbors (j±1, m), (j, m±1),
    (j+1, m-1), (j-1, m+1)."""
    return [(j, m) for m in range(side + 1) for j in range(side - m + 1)]


def triangle_dist(a: tuple[int, int], bb: tuple[int, int]) -> int:
    dq = a[0] - bb[0]
    dr = a[1] - bb[1]
    return (abs(dq) + abs(dr) + abs(dq + dr)) // 2


@dataclass(frozen=True)
class FlatTriangle:
    """Distance-preserving embedding of the side-l flat triangle."""

    side: int
    mapping: tuple[tuple[tuple[int, int], int], ...]  # ((j, m) -> vertex)

    def vertex(self, j: int, m: int) -> int:
        for coord, v in self.mapping:
            if coord == (j, m):
                return v
        raise KeyError((j, m))

    def revalidate(self, X: FlagComplex) -> bool:
        coords = [c for c, _ in self.mapping]
        verts = [v for _, v in self.mapping]
        if len(set(verts)) != len(verts):
            return False
        for i in range(len(coords)):
            for j in range(i + 1, len(coords)):
                if X.dist(verts[i], verts[j]) != triangle_dist(coords[i],
                                                               coords[j]):
                    return False
        return True


def _search_rows(X: FlagComplex, side: int, seed: tuple[int, ...],
                 budget: Budget) -> dict | None:
    """Grow rows above a seed geodesic; candidates for each slot are common
    neighbors of the two supporting vertices below (and the left neighbor),
    pruned by exact distances to everything already placed."""
    dm = X.dist_matrix()
    coords = triangle_coords(side)
    placed: dict[tuple[int, int], int] = {(j, 0): seed[j] for j in range(side + 1)}
    order = [c for c in coords if c[1] > 0]

    def candidates(j: int, m: int) -> list[int]:
        m_mask = X.nbr_mask(placed[(j, m - 1)]) & X.nbr_mask(placed[(j + 1, m - 1)])
        if j > 0:
            m_mask &= X.nbr_mask(placed[(j - 1, m)])
        return list(iter_bits(m_mask))

    def ok(coord, v) -> bool:
        for c, u in placed.items():
            if dm[u, v] != triangle_dist(c, coord):
                return False
        return True

    def rec(idx: int) -> bool:
        if idx == len(order):
            return True
        coord = order[idx]
        budget.tick()
        for v in candidates(*coord):
            if ok(coord, v):
                placed[coord] = v
                if rec(idx + 1):
                    return True
                del placed[coord]
        return False

    return dict(placed) if rec(0) else None


def _search_generic(X: FlagComplex, side: int, budget: Budget) -> dict | None:
    """Plain distance-matrix backtracking over all vertices, any seed."""
    dm = X.dist_matrix()
    coords = triangle_coords(side)
    placed: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> bool:
        if idx == len(coords):
            return True
        coord = coords[idx]
        budget.tick()
        for v in X.vertices:
            good = True
            for c, u in placed.items():
                if dm[u, v] != triangle_dist(c, coord):
                    good = False
                    break
            if good:
                placed[coord] = v
                if rec(idx + 1):
                    return True
                del placed[coord]
        return False

    return dict(placed) if rec(0) else None


def find_flat_triangle(X: FlagComplex, side: int,
                       budget: Budget | None = None) -> FlatTriangle | None:
    """Search for an isometric copy of the side-l flat triangle.

    Seeds with every geodesic of length l and grows rows of projections
    with backtracking; for small sides a generic distance-preserving
    search runs as a fallback when no seeded embedding exists.  A None
    return means exhaustive failure (budget permitting).
    """
    if side < 1:
        raise InputError("side must be positive")
    b = ensure_budget(budget)
    dm = X.dist_matrix()
    for u in X.vertices:
        for v in range(X.n):
            if dm[u, v] != side:
                continue
            for seed in geodesics_between(X, u, v, b).paths:
                found = _search_rows(X, side, seed, b)
                if found is not None:
                    mapping = tuple(sorted(found.items()))
                    tri = FlatTriangle(side, mapping)
                    if not tri.revalidate(X):
                        raise InputError("internal: embedding failed revalidation")
                    return tri
    if side <= 4:
        found = _search_generic(X, side, b)
        if found is not None:
            return FlatTriangle(side, tuple(sorted(found.items())))
    return None


# ---------------------------------------------------------------------------
# boundary inverse system
# ---------------------------------------------------------------------------


@dataclass
class SubdivisionLevel:
    """Barycentric subdivision of one even sphere: one vertex per sphere
    simplex, one subdivision simplex per chain of sphere simplices."""

    radius: int
    simplices: list[Simplex]          # sphere simplices, sorted
    index: dict[Simplex, int]

    @property
    def size(self) -> int:
        return len(self.simplices)

    def skeleton_edges(self) -> list[tuple[int, int]]:
        out = []
        for i, s in enumerate(self.simplices):
            ss = set(s)
            for j in range(i + 1, len(self.simplices)):
                t = set(self.simplices[j])
                if ss < t or t < ss:
                    out.append((i, j))
        return out


@dataclass
class SphereProjectionSystem:
    """Finite stage of the boundary inverse system around a base vertex:
    subdivided even spheres and the two-step projection maps between
    consecutive levels (level n+1 maps down to level n)."""

    base: int
    levels: list[SubdivisionLevel]
    maps: list[dict[Simplex, Simplex]]   # maps[i]: level i+1 -> level i


def _sphere_simplices(X: FlagComplex, dist, r: int,
                      budget: Budget) -> list[Simplex]:
    from .core import cliques_in_mask
    m = 0
    for v, d in enumerate(dist):
        if d == r:
            m |= 1 << v
    return sorted(cliques_in_mask(X, m, budget))


def _double_projection(X: FlagComplex, simp: Simplex, dist,
                       r: int) -> tuple[Simplex, Simplex]:
    """Apply the inward projection twice: sphere r -> r-1 -> r-2.

    Raises PreconditionError when an intermediate or final image is empty
    or fails to span a simplex."""
    step1 = _project_set(X, simp, dist, r - 1)
    if not step1 or not X.skeleton.is_clique(step1):
        raise PreconditionError(
            f"projection of {X.label_set(simp)} is not a simplex", simp)
    step2 = _project_set(X, step1, dist, r - 2)
    if not step2 or not X.skeleton.is_clique(step2):
        raise PreconditionError(
            f"two-step projection of {X.label_set(simp)} is not a simplex",
            simp)
    return step1, step2


def export_boundary_system(X: FlagComplex, v: int, n_levels: int,
                           check_precondition: bool = True,
                           budget: Budget | None = None
                           ) -> SphereProjectionSystem:
    """Build subdivided spheres of radii 2, 4, ..., 2*n_levels around v
    with the two-step projection maps between consecutive levels.

    With ``check_precondition`` the order-7 wheel condition is verified
    first (that hypothesis, with simple connectivity, is what makes every
    projection a simplex and the maps simplicial); either way a
    non-simplex image raises ``PreconditionError``.  Simpliciality of
    every map is verified: images of nested sphere simplices are nested.
    """
    if n_levels < 1:
        raise InputError("need at least one level")
    b = ensure_budget(budget)
    if check_precondition:
        pre = check_sd2_star_k(X, 7, b)
        if not pre.holds:
            raise PreconditionError("complex fails the order-7 wheel condition",
                                    pre.certificate)
    dist = X.dist_from(v)
    # spheres beyond the eccentricity are empty; the system degenerates to
    # empty levels with empty maps (cones give a trivial system)
    levels = []
    for n in range(1, n_levels + 1):
        simps = _sphere_simplices(X, dist, 2 * n, b)
        levels.append(SubdivisionLevel(2 * n, simps,
                                       {s: i for i, s in enumerate(simps)}))
    maps: list[dict[Simplex, Simplex]] = []
    for n in range(1, n_levels):
        upper = levels[n]
        lower = levels[n - 1]
        mapping: dict[Simplex, Simplex] = {}
        for s in upper.simplices:
            b.tick()
            _, image = _double_projection(X, s, dist, upper.radius)
            if image not in lower.index:
                raise PreconditionError(
                    f"image of {X.label_set(s)} is not a sphere simplex", s)
            mapping[s] = image
        # simpliciality: nested simplices must have nested images
        for s, t in itertools.combinations(upper.simplices, 2):
            if set(s) < set(t):
                a, bb = mapping[s], mapping[t]
                if not (set(a) <= set(bb) or set(bb) <= set(a)):
                    raise PreconditionError(
                        f"map at level {n + 1} is not simplicial", (s, t))
        maps.append(mapping)
    return SphereProjectionSystem(v, levels, maps)
