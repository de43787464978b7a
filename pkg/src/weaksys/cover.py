"""Truncated universal covers built ball by ball.

Starting from the unit ball around a base vertex, each step attaches one
more sphere: frontier pairs (sphere vertex, unseen base neighbor) are
grouped into classes by the edge-generated equivalence, classes become the
new sphere vertices, and edges follow the base complex.  The construction
is valid exactly on complexes without 4-wheels and with dominated wheels
with pendant triangles; under that hypothesis the class relation is
transitive, which is asserted (never assumed) during construction.

``validate_cover`` re-checks the three covering-data conditions on the
finished object by independent breadth-first searches and descent checks:
recorded radii match BFS (ball condition), the cover satisfies simple
descent around the basepoint (descent condition), and the map is locally
injective everywhere and locally bijective away from the rim (local
isomorphism condition).
"""

from __future__ import annotations

from dataclasses import dataclass

from .conditions import Verdict, check_sd2_star, check_simple_descent
from .core import FlagComplex, Graph, iter_bits
from .errors import (
    Budget,
    InputError,
    InvariantViolation,
    PreconditionError,
    ensure_budget,
)

# ---------------------------------------------------------------------------


@dataclass
class PartialCover:
    """A radius-R ball of the universal cover with its covering map."""

    base: FlagComplex
    cover: FlagComplex
    to_base: tuple[int, ...]          # cover vertex -> base vertex
    basepoint: int                    # cover vertex over the chosen base
    radius: int
    sphere_sizes: list[int]
    birth_radius: tuple[int, ...]     # construction radius per cover vertex

    def map_label(self, v: int) -> str:
        return self.base.label(self.to_base[v])

    def map_labels(self) -> list[str]:
        return [self.map_label(v) for v in self.cover.vertices]


@dataclass(frozen=True)
class FrontierClass:
    """One new sphere vertex: the merged frontier pairs (w, z) sharing a
    base target z, with the w's pairwise adjacent in the current ball."""

    class_id: int
    target: int                       # base vertex z
    sources: tuple[int, ...]          # cover sphere vertices w


def _grow_sphere(base: FlagComplex, cover_adj: list[set[int]],
                 to_base: list[int], sphere: list[int],
                 budget: Budget) -> list[FrontierClass]:
    """Compute the frontier classes one radius out from ``sphere``."""
    pairs: list[tuple[int, int]] = []
    pair_index: dict[tuple[int, int], int] = {}
    for w in sphere:
        seen = {to_base[u] for u in cover_adj[w]}
        for z in base.neighbors(to_base[w]):
            if z not in seen:
                budget.tick()
                pair_index[(w, z)] = len(pairs)
                pairs.append((w, z))

    parent = list(range(len(pairs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    sphere_set = set(sphere)
    for (w, z), i in pair_index.items():
        for u in cover_adj[w]:
            if u in sphere_set:
                j = pair_index.get((u, z))
                if j is not None:
                    budget.tick()
                    union(i, j)

    groups: dict[int, list[int]] = {}
    for i in range(len(pairs)):
        groups.setdefault(find(i), []).append(i)

    classes = []
    for cid, members in enumerate(sorted(groups.values(), key=lambda g: g[0])):
        ws = tuple(sorted(pairs[i][0] for i in members))
        z = pairs[members[0]][1]
        # transitivity assertion: the generated equivalence must already be
        # an edge relation, so members are pairwise adjacent in the cover
        for a in range(len(ws)):
            for bb in range(a + 1, len(ws)):
                budget.tick()
                if ws[bb] not in cover_adj[ws[a]]:
                    raise InvariantViolation(
                        f"frontier class over {base.label(z)} is not an "
                        f"edge-clique; the input cannot satisfy the wheel "
                        f"conditions")
                if base.dist(to_base[ws[a]], to_base[ws[bb]]) > 1:
                    raise InvariantViolation(
                        "composable frontier pair maps to a distant pair")
        classes.append(FrontierClass(cid, z, ws))
    return classes


def build_cover(X: FlagComplex, v: int, R: int,
                check_precondition: bool = True,
                budget: Budget | None = None) -> PartialCover:
    """Build the radius-R ball of the universal cover based at ``v``.

    Parameters
    ----------
    X : flag complex, connected, expected to pass the wheel conditions
        (checked unless ``check_precondition`` is False).
    v : base vertex.
    R : truncation radius; the result never claims anything beyond it.
    """
    if not X.connected():
        raise InputError("complex is not connected")
    if R < 1:
        raise InputError("radius must be at least 1")
    b = ensure_budget(budget)
    if check_precondition:
        pre = check_sd2_star(X, b)
        if not pre.holds:
            raise PreconditionError("input fails the wheel conditions",
                                    pre.certificate)

    # radius-1 ball copied from the base
    ball1 = sorted(iter_bits(X.ball_mask((v,), 1)))
    to_base = list(ball1)
    index = {u: i for i, u in enumerate(ball1)}
    cover_adj: list[set[int]] = [set() for _ in ball1]
    for i, u in enumerate(ball1):
        for w in X.neighbors(u):
            j = index.get(w)
            if j is not None:
                cover_adj[i].add(j)
    basepoint = index[v]
    birth = [min(1, X.dist(v, u)) for u in ball1]
    sphere = [i for i, u in enumerate(ball1) if X.dist(v, u) == 1]
    label_count: dict[str, int] = {}
    used_labels: set[str] = set()
    labels = []
    for u in ball1:
        labels.append(X.label(u))
        used_labels.add(X.label(u))
        label_count[X.label(u)] = 1

    def fresh_label(base_label: str) -> str:
        count = label_count.get(base_label, 0)
        label_count[base_label] = count + 1
        if count == 0 and base_label not in used_labels:
            lab = base_label
        else:
            lab = f"{base_label}#{count}"
            while lab in used_labels:
                count += 1
                label_count[base_label] = count + 1
                lab = f"{base_label}#{count}"
        used_labels.add(lab)
        return lab

    for i in range(1, R):
        classes = _grow_sphere(X, cover_adj, to_base, sphere, b)
        new_sphere = []
        class_vertex: dict[int, int] = {}
        for cl in classes:
            vid = len(to_base)
            class_vertex[cl.class_id] = vid
            to_base.append(cl.target)
            birth.append(i + 1)
            cover_adj.append(set())
            labels.append(fresh_label(X.label(cl.target)))
            new_sphere.append(vid)
            for w in cl.sources:
                cover_adj[vid].add(w)
                cover_adj[w].add(vid)
        # edges between new vertices: same source w, adjacent base targets
        by_source: dict[int, list[tuple[int, int]]] = {}
        for cl in classes:
            vid = class_vertex[cl.class_id]
            for w in cl.sources:
                by_source.setdefault(w, []).append((vid, cl.target))
        for w, items in by_source.items():
            for a in range(len(items)):
                va, za = items[a]
                for c in range(a + 1, len(items)):
                    vc, zc = items[c]
                    b.tick()
                    if X.has_edge(za, zc):
                        cover_adj[va].add(vc)
                        cover_adj[vc].add(va)
        sphere = new_sphere

    n = len(to_base)
    edges = [(u, w) for u in range(n) for w in cover_adj[u] if w > u]
    cover = FlagComplex(Graph(n, edges, labels=labels))
    sizes = [0] * (R + 1)
    for r in birth:
        sizes[r] += 1
    return PartialCover(X, cover, tuple(to_base), basepoint, R, sizes,
                        tuple(birth))


def validate_cover(pc: PartialCover, budget: Budget | None = None) -> Verdict:
    """Re-check the covering data with independent searches.

    Ball condition: BFS distance from the basepoint equals the recorded
    construction radius for every cover vertex.  Descent condition: the
    cover satisfies simple descent around the basepoint up to R-1.  Local
    isomorphism condition: the map is injective on every unit ball and
    bijective onto the base unit ball for vertices of radius at most R-1.
    """
    b = ensure_budget(budget)
    X, Y = pc.base, pc.cover
    f = pc.to_base
    stats = {"vertices": Y.n}

    dist = Y.dist_from(pc.basepoint)
    for w in Y.vertices:
        if dist[w] != pc.birth_radius[w]:
            return Verdict("cover-valid", False,
                           ("ball-condition", (w,)), stats)

    for w in Y.vertices:
        b.tick()
        nbrs = Y.neighbors(w)
        images = {f[u] for u in nbrs}
        if len(images) != len(nbrs) or f[w] in images:
            return Verdict("cover-valid", False,
                           ("local-injectivity", (w,)), stats)
        for u in nbrs:
            if not X.has_edge(f[u], f[w]):
                return Verdict("cover-valid", False,
                               ("not-simplicial", (w, u)), stats)
        if dist[w] <= pc.radius - 1:
            if images != set(X.neighbors(f[w])):
                return Verdict("cover-valid", False,
                               ("local-bijectivity", (w,)), stats)

    q = check_simple_descent(Y, pc.basepoint, pc.radius - 1, b)
    stats.update({f"descent-{k}": v for k, v in q.stats.items()})
    if not q.holds:
        return Verdict("cover-valid", False, ("descent", q.certificate), stats)
    stats["budget"] = b.used
    return Verdict("cover-valid", True, None, stats)


def detect_nontrivial_pi1(X: FlagComplex, budget: Budget | None = None) -> bool:
    """True when the cover keeps growing past the diameter, i.e. the
    complex is not simply connected (valid under the wheel conditions)."""
    pc = build_cover(X, 0, X.diameter() + 1, budget=budget)
    return pc.cover.n > X.n
