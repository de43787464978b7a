"""Finite flag simplicial complexes presented by their 1-skeleta.

A flag complex is fully determined by its graph: the simplices are exactly
the nonempty cliques of the skeleton.  Everything downstream (descent
conditions, covers, convexity, hyperbolicity diagnostics) works on this
representation, so this module carries the graph, metric, link, ball and
induced-cycle primitives shared by all of them.

Vertices are dense integers 0..n-1; every vertex also carries an input
label so that certificates can be reported in the caller's namespace.
Vertex sets are passed around as Python int bitmasks where speed matters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import Budget, InputError, ensure_budget

Simplex = tuple[int, ...]

UNREACHABLE = -1


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


class Graph:
    """Finite simple graph with dense integer ids and sorted adjacency.

    The adjacency relation is symmetric and irreflexive.  ``labels`` maps
    ids back to the input namespace; ids are assigned in declaration order.
    Instances are immutable after construction and safe to share.
    """

    __slots__ = ("n", "labels", "adj", "masks", "_label_index")

    def __init__(self, n: int, edges, labels=None):
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise InputError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise InputError("duplicate vertex labels")
        self.n = n
        self.labels = labels
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.masks = tuple(mask_of(s) for s in nbrs)
        self._label_index = {lab: i for i, lab in enumerate(labels)}

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    def vertex_by_label(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise InputError(f"unknown vertex label {label!r}") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (self.masks[u] >> v) & 1 == 1

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def is_clique(self, vertices) -> bool:
        vs = list(vertices)
        for i, u in enumerate(vs):
            mu = self.masks[u]
            for w in vs[i + 1:]:
                if u == w or not (mu >> w) & 1:
                    return False
        return True

    def is_clique_mask(self, mask: int) -> bool:
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if rest & ~self.masks[v]:
                return False
        return True

    def common_neighbors_mask(self, vertices) -> int:
        m = (1 << self.n) - 1
        for v in vertices:
            m &= self.masks[v]
        return m

    # -- metric -----------------------------------------------------------

    def bfs(self, sources) -> list[int]:
        """Distances from a vertex or a set of vertices; -1 if unreachable."""
        if isinstance(sources, int):
            sources = (sources,)
        dist = [UNREACHABLE] * self.n
        frontier = []
        for s in sources:
            if dist[s] == UNREACHABLE:
                dist[s] = 0
                frontier.append(s)
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for w in self.adj[u]:
                    if dist[w] == UNREACHABLE:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        return dist

    def connected(self) -> bool:
        if self.n == 0:
            return True
        return UNREACHABLE not in self.bfs(0)

    def check(self) -> None:
        """Validate the symmetry/irreflexivity invariants (debug aid)."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v == u or u not in self.adj[v]:
                    raise InputError(f"adjacency broken at ({u},{v})")

    def relabeled(self, labels) -> "Graph":
        return Graph(self.n, list(self.edges()), labels=labels)


class FlagComplex:
    """A flag simplicial complex: the clique complex of its skeleton.

    Caches per-source BFS distance arrays and, on demand, a dense numpy
    distance matrix.  All methods are pure; the caches are fill-once.
    """

    def __init__(self, skeleton: Graph):
        self.skeleton = skeleton
        self._dist: dict[int, list[int]] = {}
        self._dist_matrix = None
        self._dim = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "FlagComplex":
        return cls(Graph(n, edges, labels=labels))

    # -- delegation ----------------------------------------------------

    @property
    def n(self) -> int:
        return self.skeleton.n

    @property
    def vertices(self) -> range:
        return self.skeleton.vertices

    @property
    def labels(self) -> tuple[str, ...]:
        return self.skeleton.labels

    def label(self, v: int) -> str:
        return self.skeleton.labels[v]

    def label_set(self, vs) -> tuple[str, ...]:
        return tuple(self.skeleton.labels[v] for v in sorted(vs))

    def vertex_by_label(self, label: str) -> int:
        return self.skeleton.vertex_by_label(label)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.skeleton.adj[v]

    def nbr_mask(self, v: int) -> int:
        return self.skeleton.masks[v]

    def closed_mask(self, v: int) -> int:
        return self.skeleton.masks[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return self.skeleton.has_edge(u, v)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def connected(self) -> bool:
        return self.skeleton.connected()

    # -- simplices -------------------------------------------------------

    def is_simplex(self, vertices) -> bool:
        vs = tuple(vertices)
        return len(vs) > 0 and len(set(vs)) == len(vs) and self.skeleton.is_clique(vs)

    def as_simplex(self, vertices) -> Simplex:
        vs = tuple(sorted(set(vertices)))
        if not vs:
            raise InputError("empty vertex set is not a simplex")
        if not self.skeleton.is_clique(vs):
            raise InputError(f"vertices {self.label_set(vs)} do not span a simplex")
        return vs

    def simplex_by_labels(self, labels) -> Simplex:
        return self.as_simplex(self.vertex_by_label(l) for l in labels)

    def common_neighbors_mask(self, vertices) -> int:
        return self.skeleton.common_neighbors_mask(vertices)

    def dim(self, budget: Budget | None = None) -> int:
        """Dimension = size of a maximum clique minus one."""
        if self._dim is None:
            best = 0
            for c in maximal_cliques_in_mask(self, self.full_mask(), budget):
                if len(c) > best:
                    best = len(c)
            self._dim = best - 1
        return self._dim

    # -- metric ----------------------------------------------------------

    def dist_from(self, v: int) -> list[int]:
        d = self._dist.get(v)
        if d is None:
            d = self.skeleton.bfs(v)
            self._dist[v] = d
        return d

    def dist(self, u: int, v: int) -> int:
        return self.dist_from(u)[v]

    def dist_matrix(self) -> np.ndarray:
        if self._dist_matrix is None:
            m = np.empty((self.n, self.n), dtype=np.int32)
            for v in range(self.n):
                m[v] = self.dist_from(v)
            self._dist_matrix = m
        return self._dist_matrix

    def ecc(self, v: int) -> int:
        return max(self.dist_from(v))

    def diameter(self) -> int:
        return max(self.ecc(v) for v in self.vertices) if self.n else 0

    def dist_to_set(self, vertices) -> list[int]:
        return self.skeleton.bfs(list(vertices))

    def ball_mask(self, vertices, i: int) -> int:
        dist = self.dist_to_set(vertices)
        m = 0
        for v, d in enumerate(dist):
            if 0 <= d <= i:
                m |= 1 << v
        return m

    def sphere_mask(self, vertices, i: int) -> int:
        dist = self.dist_to_set(vertices)
        m = 0
        for v, d in enumerate(dist):
            if d == i:
                m |= 1 << v
        return m

    def induced_graph(self, vertices) -> tuple[Graph, list[int]]:
        """Subgraph induced on ``vertices``; returns (graph, old-id list)."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        edges = []
        for i, u in enumerate(vs):
            for w in self.skeleton.adj[u]:
                j = index.get(w)
                if j is not None and j > i:
                    edges.append((i, j))
        labels = [self.skeleton.labels[v] for v in vs]
        return Graph(len(vs), edges, labels=labels), vs


@dataclass(frozen=True)
class SubcomplexHandle:
    """A subcomplex of an ambient flag complex.

    With ``simplices=None`` the handle denotes the full (induced)
    subcomplex spanned by ``vertex_set``.  An explicit downward-closed
    simplex family can be supplied instead, in which case ``full`` is
    whatever the caller claims and ``is_full`` decides the truth.
    """

    ambient: FlagComplex
    vertex_set: frozenset[int]
    full: bool = True
    simplices: frozenset[Simplex] | None = None

    @property
    def mask(self) -> int:
        return mask_of(self.vertex_set)

    def vertices_sorted(self) -> list[int]:
        return sorted(self.vertex_set)

    def label_set(self) -> tuple[str, ...]:
        return self.ambient.label_set(self.vertex_set)

    def induced_graph(self) -> tuple[Graph, list[int]]:
        return self.ambient.induced_graph(self.vertex_set)

    def edge_set(self) -> set[tuple[int, int]]:
        amb = self.ambient
        vs = self.vertices_sorted()
        out = set()
        for i, u in enumerate(vs):
            for w in vs[i + 1:]:
                if amb.has_edge(u, w):
                    out.add((u, w))
        return out

    def connected(self) -> bool:
        g, _ = self.induced_graph()
        return g.connected()

    def __contains__(self, v: int) -> bool:
        return v in self.vertex_set


@dataclass(frozen=True)
class CycleWitness:
    """An embedded graph cycle (v0,...,v_{k-1}); chordless when induced."""

    cycle: tuple[int, ...]
    chordless: bool

    def __len__(self):
        return len(self.cycle)

    def revalidate(self, X: FlagComplex) -> bool:
        c = self.cycle
        k = len(c)
        if k < 4 or len(set(c)) != k:
            return False
        for i in range(k):
            if not X.has_edge(c[i], c[(i + 1) % k]):
                return False
        if self.chordless:
            for i in range(k):
                for j in range(i + 2, k):
                    if i == 0 and j == k - 1:
                        continue
                    if X.has_edge(c[i], c[j]):
                        return False
        return True


# ---------------------------------------------------------------------------
# subcomplex operations
# ---------------------------------------------------------------------------


def normalize_vertex_set(X: FlagComplex, A) -> frozenset[int]:
    """Accept a vertex id, an iterable of ids, or a handle."""
    if isinstance(A, SubcomplexHandle):
        return A.vertex_set
    if isinstance(A, int):
        vs = frozenset((A,))
    else:
        vs = frozenset(A)
    for v in vs:
        if not (0 <= v < X.n):
            raise InputError(f"unknown vertex id {v}")
    return vs


def span(X: FlagComplex, vertices) -> SubcomplexHandle:
    """Smallest full subcomplex containing the given vertices."""
    vs = normalize_vertex_set(X, vertices)
    return SubcomplexHandle(X, vs, full=True)


def link(X: FlagComplex, simplex) -> SubcomplexHandle:
    """Full subcomplex on the common neighbors of a simplex, simplex excluded."""
    s = X.as_simplex(simplex)
    m = X.common_neighbors_mask(s)
    m &= ~mask_of(s)
    return SubcomplexHandle(X, frozenset(iter_bits(m)), full=True)


def distance(X: FlagComplex, u: int, v: int) -> int | float:
    """Edge-count distance in the 1-skeleton; inf across components."""
    d = X.dist(u, v)
    return float("inf") if d == UNREACHABLE else d


def ball(X: FlagComplex, A, i: int) -> SubcomplexHandle:
    vs = normalize_vertex_set(X, A)
    if not vs:
        raise InputError("ball around the empty set")
    return SubcomplexHandle(X, frozenset(iter_bits(X.ball_mask(vs, i))), full=True)


def sphere(X: FlagComplex, A, i: int) -> SubcomplexHandle:
    vs = normalize_vertex_set(X, A)
    if not vs:
        raise InputError("sphere around the empty set")
    return SubcomplexHandle(X, frozenset(iter_bits(X.sphere_mask(vs, i))), full=True)


def is_full(X: FlagComplex, Y: SubcomplexHandle) -> bool:
    """Does Y contain every ambient simplex spanned by its vertices?

    Handles without an explicit simplex family denote spans and are full
    by construction.  Explicit families are checked for closure against
    the ambient cliques on Y's vertex set.
    """
    if Y.simplices is None:
        return True
    have = set(Y.simplices)
    m = mask_of(Y.vertex_set)
    for c in cliques_in_mask(X, m):
        if c not in have:
            return False
    return True


def cliques_in_mask(X: FlagComplex, mask: int, budget: Budget | None = None,
                    max_size: int | None = None):
    """Yield every nonempty clique inside ``mask`` in ascending lex order."""
    b = ensure_budget(budget)
    masks = X.skeleton.masks

    def rec(base: Simplex, cand: int):
        for v in iter_bits(cand):
            b.tick()
            cur = base + (v,)
            yield cur
            if max_size is None or len(cur) < max_size:
                higher = cand & masks[v] & ~((1 << (v + 1)) - 1)
                if higher:
                    yield from rec(cur, higher)

    yield from rec((), mask)


def maximal_cliques_in_mask(X: FlagComplex, mask: int, budget: Budget | None = None):
    """Yield the maximal cliques inside ``mask`` (Bron-Kerbosch with pivot)."""
    b = ensure_budget(budget)
    masks = X.skeleton.masks

    def bk(r: int, p: int, x: int):
        b.tick()
        if p == 0 and x == 0:
            yield tuple(iter_bits(r))
            return
        pivot_pool = p | x
        pivot = next(iter_bits(pivot_pool))
        best = -1
        for u in iter_bits(pivot_pool):
            deg = bin(p & masks[u]).count("1")
            if deg > best:
                best, pivot = deg, u
        for v in iter_bits(p & ~masks[pivot]):
            yield from bk(r | (1 << v), p & masks[v], x & masks[v])
            p ^= 1 << v
            x |= 1 << v

    if mask:
        yield from bk(0, mask, 0)


def induced_cycles(X: FlagComplex, mask: int, min_len: int = 4,
                   max_len: int | None = None, budget: Budget | None = None):
    """Yield every chordless cycle inside ``mask`` with length in range.

    A cycle is reported once, as a tuple starting at its smallest vertex
    with the smaller of the two directions second.  The search extends
    induced paths vertex by vertex, so it is exhaustive; every search node
    ticks the budget.
    """
    if max_len is not None and max_len < 4:
        return
    b = ensure_budget(budget)
    masks = X.skeleton.masks
    if min_len < 4:
        min_len = 4

    for p0 in iter_bits(mask):
        allowed_global = mask & ~((1 << (p0 + 1)) - 1)  # vertices > p0 only
        start_nbrs = masks[p0] & allowed_global
        for p1 in iter_bits(start_nbrs):
            path = [p0, p1]

            def rec(last: int, blocked: int):
                # blocked = union of neighbor masks of path[1:-1]; adjacency
                # to p0 is handled separately since it closes the cycle
                b.tick()
                ext = allowed_global & masks[last] & ~blocked
                for x in iter_bits(ext):
                    if x in path:
                        continue
                    adj_p0 = (masks[p0] >> x) & 1
                    if adj_p0:
                        # candidate closure: x adjacent to last and p0 and
                        # nothing in between
                        if len(path) + 1 >= min_len and \
                           (max_len is None or len(path) + 1 <= max_len) and \
                           path[1] < x:
                            yield tuple(path) + (x,)
                        continue
                    if max_len is not None and len(path) + 1 >= max_len:
                        continue
                    path.append(x)
                    yield from rec(x, blocked | masks[last])
                    path.pop()

            yield from rec(p1, 0)


def find_chordless_cycle(X: FlagComplex, max_len: int,
                         budget: Budget | None = None) -> CycleWitness | None:
    """First chordless cycle of length between 4 and ``max_len``, if any."""
    if max_len < 4:
        raise InputError("max_len must be at least 4")
    for cyc in induced_cycles(X, X.full_mask(), 4, max_len, budget):
        return CycleWitness(cyc, chordless=True)
    return None
