"""Cell complexes, thickenings, and Davis complexes of right-angled
Coxeter systems.

A cell complex is stored as a graph (its 1-skeleton) plus maximal cells
given as vertex sets.  Cubical cells are validated structurally: the
induced subgraph of each cell must be a hypercube graph, and its faces
are exactly the metric intervals of that hypercube.  The derived cell
family (all faces plus all pairwise intersections, closed under
intersection) backs the thickening, the triple-intersection condition,
vertex links, face complexes and Euler characteristics.

Davis complexes are generated from a nerve graph: generators are nerve
vertices, adjacent generators commute, all other pairs are free.  Words
are kept in a canonical normal form (cancel equal letters separated by
commuting blocks, then sort commuting adjacent letters), and the cubical
ball of any radius is produced with one cube per spherical coset that
fits inside the ball.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .conditions import Verdict
from .core import FlagComplex, Graph, Simplex, maximal_cliques_in_mask
from .errors import Budget, InputError, ensure_budget

# ---------------------------------------------------------------------------
# explicit simplicial complexes (links of cell complexes)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """Explicit finite simplicial complex given by its facets.

    Unlike a flag complex this is not determined by its edges; flagness
    is a real condition here and is part of largeness.
    """

    n: int
    facets: tuple[Simplex, ...]
    labels: tuple[str, ...]

    def one_skeleton(self) -> Graph:
        edges = set()
        for f in self.facets:
            for a, bb in itertools.combinations(f, 2):
                edges.add((a, bb))
        return Graph(self.n, sorted(edges), labels=self.labels)

    def has_face(self, vs) -> bool:
        s = set(vs)
        return any(s <= set(f) for f in self.facets)

    def is_flag(self, budget: Budget | None = None) -> bool:
        X = FlagComplex(self.one_skeleton())
        for c in maximal_cliques_in_mask(X, X.full_mask(), budget):
            if not self.has_face(c):
                return False
        return True

    def is_k_large(self, k: int, budget: Budget | None = None) -> Verdict:
        """Flag and no chordless cycle shorter than k in the 1-skeleton."""
        from .core import induced_cycles
        b = ensure_budget(budget)
        X = FlagComplex(self.one_skeleton())
        if not self.is_flag(b):
            return Verdict(f"{k}-large", False, ("not-flag",), {})
        for cyc in induced_cycles(X, X.full_mask(), 4, k - 1, b):
            return Verdict(f"{k}-large", False, ("cycle", cyc), {})
        return Verdict(f"{k}-large", True, None, {"budget": b.used})


# ---------------------------------------------------------------------------
# cell complexes
# ---------------------------------------------------------------------------


def _is_hypercube(verts: list[int], X_adj) -> int | None:
    """If the induced graph on ``verts`` is a hypercube graph, return its
    dimension, else None.

    Coordinates are assigned level by level from a base corner: the base
    gets the empty bit set, its neighbors get single bits, and a deeper
    vertex gets the union of the coordinates of its inward neighbors (any
    two distinct inward neighbors already determine it).  The assignment
    is then verified to be a bijection onto all bit sets with edges
    exactly the Hamming-distance-1 pairs."""
    m = len(verts)
    d = m.bit_length() - 1
    if 1 << d != m:
        return None
    if m == 1:
        return 0
    vset = set(verts)
    adj = {v: [u for u in X_adj[v] if u in vset] for v in verts}
    if any(len(adj[v]) != d for v in verts):
        return None
    base = verts[0]
    dist = {base: 0}
    frontier = [base]
    levels = [[base]]
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        if nxt:
            levels.append(nxt)
        frontier = nxt
    if len(dist) != m:
        return None
    coord = {base: 0}
    for i, u in enumerate(levels[1] if len(levels) > 1 else []):
        coord[u] = 1 << i
    for level in range(2, len(levels)):
        for w in levels[level]:
            inward = [coord[x] for x in adj[w] if dist[x] == level - 1]
            if len(inward) < 2:
                return None
            c = 0
            for x in inward:
                c |= x
            if bin(c).count("1") != level:
                return None
            coord[w] = c
    if len(coord) != m or len(set(coord.values())) != m:
        return None
    for v in verts:
        for u in adj[v]:
            if bin(coord[v] ^ coord[u]).count("1") != 1:
                return None
    return d


class CellComplex:
    """Cell complex on a graph with declared maximal cells.

    With ``cubical=True`` (default) every maximal cell must induce a
    hypercube graph; faces are the metric intervals of the cell.  The
    full family is the face set of all maximal cells closed under
    pairwise intersection; intersections that are not themselves cells
    make the input invalid.
    """

    def __init__(self, graph: Graph, maximal_cells, cubical: bool = True):
        self.graph = graph
        cells = []
        seen = set()
        for c in maximal_cells:
            fs = frozenset(c)
            if not fs:
                raise InputError("empty maximal cell")
            for v in fs:
                if not 0 <= v < graph.n:
                    raise InputError(f"cell vertex {v} out of range")
            if fs not in seen:
                seen.add(fs)
                cells.append(fs)
        self.maximal_cells: tuple[frozenset[int], ...] = tuple(
            sorted(cells, key=sorted))
        self.cubical = cubical
        self._family: frozenset[frozenset[int]] | None = None
        self._dims: dict[frozenset[int], int] | None = None
        if cubical:
            self._validate_cubical()

    # -- structure -------------------------------------------------------

    @property
    def n(self) -> int:
        return self.graph.n

    def label(self, v: int) -> str:
        return self.graph.labels[v]

    def _validate_cubical(self) -> None:
        for c in self.maximal_cells:
            d = _is_hypercube(sorted(c), self.graph.adj)
            if d is None:
                raise InputError(
                    f"cell {sorted(self.label(v) for v in c)} does not induce "
                    f"a hypercube graph")

    def _cell_faces(self, cell: frozenset[int]) -> set[frozenset[int]]:
        """Faces of one cubical cell: metric intervals of its induced graph."""
        verts = sorted(cell)
        sub = {v: set(self.graph.adj[v]) & cell for v in verts}
        # BFS distances inside the cell
        dist = {}
        for s in verts:
            d = {s: 0}
            frontier = [s]
            while frontier:
                nxt = []
                for u in frontier:
                    for w in sub[u]:
                        if w not in d:
                            d[w] = d[u] + 1
                            nxt.append(w)
                frontier = nxt
            dist[s] = d
        faces = set()
        for u in verts:
            du = dist[u]
            for w in verts:
                interval = frozenset(x for x in verts
                                     if du[x] + dist[w][x] == du[w])
                faces.add(interval)
        return faces

    def cells(self) -> frozenset[frozenset[int]]:
        """The full derived cell family (nonempty cells)."""
        if self._family is None:
            fam: set[frozenset[int]] = set()
            if self.cubical:
                for c in self.maximal_cells:
                    fam |= self._cell_faces(c)
            else:
                fam |= set(self.maximal_cells)
            # close under pairwise intersection
            changed = True
            while changed:
                changed = False
                items = sorted(fam, key=sorted)
                for a, bb in itertools.combinations(items, 2):
                    inter = a & bb
                    if inter and inter not in fam:
                        if self.cubical:
                            raise InputError(
                                "cell intersection is not a common face: "
                                f"{sorted(inter)}")
                        fam.add(inter)
                        changed = True
            self._family = frozenset(fam)
        return self._family

    def cell_dim(self, cell: frozenset[int]) -> int:
        if self.cubical:
            return (len(cell)).bit_length() - 1
        raise InputError("cell dimension needs a cubical complex")

    def min_cell_containing(self, vs) -> frozenset[int] | None:
        best = None
        s = set(vs)
        for c in self.cells():
            if s <= c and (best is None or len(c) < len(best)):
                best = c
        return best

    def vertex_link(self, v: int) -> SimplicialComplex:
        """Link of a vertex as an explicit simplicial complex.

        Vertices of the link are the neighbors of v (edge cells at v);
        a set of neighbors spans a face when, together with v, it lies in
        a common cell.  Needs a cubical complex (simplicity is structural
        there)."""
        if not self.cubical:
            raise InputError("vertex links need a cubical complex")
        nbrs = [u for u in self.graph.adj[v]]
        index = {u: i for i, u in enumerate(nbrs)}
        facets = set()
        for c in self.maximal_cells:
            if v in c:
                face = tuple(sorted(index[u] for u in c
                                    if u != v and u in index))
                if face:
                    facets.add(face)
        # keep only maximal faces
        maximal = [f for f in facets
                   if not any(set(f) < set(g) for g in facets if g != f)]
        labels = [self.graph.labels[u] for u in nbrs]
        return SimplicialComplex(len(nbrs), tuple(sorted(maximal)), tuple(labels))

    def restrict(self, keep_vertices) -> "CellComplex":
        """Subcomplex of cells entirely inside ``keep_vertices``.

        Vertices are re-indexed; labels are preserved."""
        keep = sorted(set(keep_vertices))
        index = {v: i for i, v in enumerate(keep)}
        kset = set(keep)
        edges = [(index[u], index[w]) for (u, w) in self.graph.edges()
                 if u in kset and w in kset]
        labels = [self.graph.labels[v] for v in keep]
        g = Graph(len(keep), edges, labels=labels)
        cells = []
        for c in self.cells():
            if c <= kset:
                cells.append(frozenset(index[v] for v in c))
        maximal = [c for c in cells
                   if not any(c < other for other in cells)]
        return CellComplex(g, maximal, cubical=self.cubical)


# ---------------------------------------------------------------------------
# thickening and cell-level checks
# ---------------------------------------------------------------------------


def thicken(Y: CellComplex, budget: Budget | None = None
            ) -> tuple[FlagComplex, Verdict]:
    """Graph on Y's vertices joining vertices that share a cell, returned
    as a flag complex together with a flagness verdict: does every clique
    of that graph actually lie in a common cell?"""
    b = ensure_budget(budget)
    edges = set()
    for c in Y.maximal_cells:
        for u, w in itertools.combinations(sorted(c), 2):
            b.tick()
            edges.add((u, w))
    X = FlagComplex(Graph(Y.n, sorted(edges), labels=Y.graph.labels))
    bad = None
    for clique in maximal_cliques_in_mask(X, X.full_mask(), b):
        s = set(clique)
        if not any(s <= c for c in Y.maximal_cells):
            bad = tuple(clique)
            break
    verdict = Verdict("thickening-flag", bad is None,
                      None if bad is None else bad, {"budget": b.used})
    return X, verdict


def check_no_delta(Y: CellComplex, all_cells: bool = False,
                   budget: Budget | None = None) -> Verdict:
    """Any three pairwise-intersecting cells share a common vertex.

    By default the scan runs over maximal cells; ``all_cells=True`` runs
    the full derived family (brute force), which the test suite asserts
    agrees on small instances."""
    b = ensure_budget(budget)
    cells = sorted(Y.cells() if all_cells else Y.maximal_cells, key=sorted)
    stats = {"cells": len(cells), "triples": 0}
    for i, a in enumerate(cells):
        for j in range(i + 1, len(cells)):
            bb = cells[j]
            if not (a & bb):
                continue
            for k in range(j + 1, len(cells)):
                c = cells[k]
                b.tick()
                if (a & c) and (bb & c):
                    stats["triples"] += 1
                    if not (a & bb & c):
                        cert = (tuple(sorted(a)), tuple(sorted(bb)),
                                tuple(sorted(c)))
                        return Verdict("no-delta", False, cert, stats)
    stats["budget"] = b.used
    return Verdict("no-delta", True, None, stats)


def check_locally_k_large_cell(Y: CellComplex, k: int,
                               budget: Budget | None = None) -> Verdict:
    """Every vertex link (as a simplicial complex of cell faces) is
    k-large: flag, with no chordless cycle shorter than k."""
    if k < 4:
        raise InputError("k must be at least 4")
    b = ensure_budget(budget)
    stats = {"links": 0}
    for v in range(Y.n):
        stats["links"] += 1
        lk = Y.vertex_link(v)
        sub = lk.is_k_large(k, b)
        if not sub.holds:
            return Verdict(f"locally-{k}-large-cell", False,
                           (v, sub.certificate), stats)
    stats["budget"] = b.used
    return Verdict(f"locally-{k}-large-cell", True, None, stats)


def face_complex(obj, budget: Budget | None = None) -> FlagComplex:
    """Complex on the nonempty cells of the input, two cells adjacent when
    they lie in a common cell.

    Accepts a cell complex (cells = derived family), a flag complex
    (cells = simplices, i.e. cliques), or an explicit simplicial complex
    (cells = faces)."""
    b = ensure_budget(budget)
    if isinstance(obj, CellComplex):
        cells = sorted(obj.cells(), key=sorted)
        tops = obj.maximal_cells
        labels = ["+".join(obj.label(v) for v in sorted(c)) for c in cells]
    elif isinstance(obj, FlagComplex):
        from .core import cliques_in_mask
        cells = [frozenset(c) for c in cliques_in_mask(obj, obj.full_mask(), b)]
        cells.sort(key=sorted)
        tops = [frozenset(c) for c in
                maximal_cliques_in_mask(obj, obj.full_mask(), b)]
        labels = ["+".join(obj.label(v) for v in sorted(c)) for c in cells]
    elif isinstance(obj, SimplicialComplex):
        faces = set()
        for f in obj.facets:
            for r in range(1, len(f) + 1):
                for sub in itertools.combinations(f, r):
                    faces.add(frozenset(sub))
        cells = sorted(faces, key=sorted)
        tops = [frozenset(f) for f in obj.facets]
        labels = ["+".join(obj.labels[v] for v in sorted(c)) for c in cells]
    else:
        raise InputError(f"face complex of unsupported type {type(obj)!r}")
    edges = []
    for i, a in enumerate(cells):
        for j in range(i + 1, len(cells)):
            b.tick()
            u = a | cells[j]
            if any(u <= t for t in tops):
                edges.append((i, j))
    return FlagComplex(Graph(len(cells), edges, labels=labels))


def euler_characteristic(obj, budget: Budget | None = None) -> int:
    """Alternating sum over simplices (clique count) or cells."""
    b = ensure_budget(budget)
    if isinstance(obj, FlagComplex):
        from .core import cliques_in_mask
        chi = 0
        for c in cliques_in_mask(obj, obj.full_mask(), b):
            chi += 1 if len(c) % 2 == 1 else -1
        return chi
    if isinstance(obj, CellComplex):
        chi = 0
        for c in obj.cells():
            chi += 1 if obj.cell_dim(c) % 2 == 0 else -1
        return chi
    if isinstance(obj, SimplicialComplex):
        faces = set()
        for f in obj.facets:
            for r in range(1, len(f) + 1):
                for sub in itertools.combinations(f, r):
                    faces.add(frozenset(sub))
        return sum(1 if len(f) % 2 == 1 else -1 for f in faces)
    raise InputError(f"euler characteristic of unsupported type {type(obj)!r}")


# ---------------------------------------------------------------------------
# right-angled Coxeter systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoxeterNerve:
    """Right-angled Coxeter system described by its nerve graph.

    Generators are the nerve vertices; adjacent generators commute, all
    other distinct pairs are free (infinite order product).  The nerve
    simplicial complex is the clique complex of this graph, which is the
    correct nerve because a set of generators spans a finite subgroup
    exactly when it is pairwise commuting."""

    graph: Graph

    @classmethod
    def from_graph(cls, g: Graph) -> "CoxeterNerve":
        return cls(g)

    @property
    def generators(self) -> range:
        return self.graph.vertices

    def commute(self, s: int, t: int) -> bool:
        return self.graph.has_edge(s, t)

    def label(self, s: int) -> str:
        return self.graph.labels[s]


def normal_form(nerve: CoxeterNerve, word) -> tuple[int, ...]:
    """Canonical reduced word for a right-angled system.

    First cancel pairs of equal letters separated only by letters
    commuting with them (a word is reduced exactly when no such pair
    remains); then emit, repeatedly, the least letter that commutes with
    everything before it.  The second pass picks the lexicographically
    least word among all commutation-equivalent orderings, which a plain
    adjacent-swap sort would miss (moving a letter forward can require a
    temporarily increasing swap)."""
    w = list(word)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(w):
            s = w[i]
            j = i + 1
            while j < len(w):
                if w[j] == s:
                    del w[j]
                    del w[i]
                    changed = True
                    break
                if not nerve.commute(s, w[j]):
                    break
                j += 1
            if changed:
                break
            i += 1
    out = []
    while w:
        best_i = None
        for i, s in enumerate(w):
            if all(nerve.commute(s, t) for t in w[:i]):
                if best_i is None or s < w[best_i]:
                    best_i = i
        out.append(w.pop(best_i))
    return tuple(out)


def multiply(nerve: CoxeterNerve, a, bb) -> tuple[int, ...]:
    return normal_form(nerve, tuple(a) + tuple(bb))


def reflection_matrix(nerve: CoxeterNerve, s: int):
    """Integer matrix of the canonical reflection representation.

    The generator s sends its own basis vector to its negative, fixes the
    basis vectors of commuting generators, and adds twice the s-vector to
    the basis vector of every free partner.  Entries stay integral, and
    the representation is faithful, so exact matrix equality decides the
    word problem."""
    import numpy as np
    n = nerve.graph.n
    m = np.eye(n, dtype=object)
    for t in range(n):
        if t == s:
            m[s, s] = -1
        elif not nerve.commute(s, t):
            m[s, t] = 2
    return m


def word_matrix(nerve: CoxeterNerve, word):
    import numpy as np
    n = nerve.graph.n
    m = np.eye(n, dtype=object)
    for s in word:
        m = m @ reflection_matrix(nerve, s)
    return m


def matrix_key(m) -> tuple:
    return tuple(tuple(int(x) for x in row) for row in m)


# ---------------------------------------------------------------------------
# Davis complexes
# ---------------------------------------------------------------------------


@dataclass
class DavisBall:
    """Radius-R ball of the Davis complex: one vertex per group element of
    length at most R, one cube per spherical coset fully inside the ball."""

    nerve: CoxeterNerve
    radius: int
    complex: CellComplex
    words: tuple[tuple[int, ...], ...]       # vertex id -> canonical word
    edge_generator: dict[tuple[int, int], int]

    def interior(self) -> CellComplex:
        """Subcomplex on elements of length at most R-1 (cells fully
        inside); rim cubes are dropped to avoid truncation artifacts."""
        keep = [i for i, w in enumerate(self.words)
                if len(w) <= self.radius - 1]
        return self.complex.restrict(keep)


def _word_label(nerve: CoxeterNerve, word) -> str:
    if not word:
        return "1"
    return ".".join(nerve.label(s) for s in word)


def coxeter_ball(nerve: CoxeterNerve, R: int,
                 budget: Budget | None = None) -> list[tuple[int, ...]]:
    """All canonical words of length at most R, breadth first."""
    b = ensure_budget(budget)
    ball = {(): 0}
    order = [()]
    frontier = [()]
    for _ in range(R):
        nxt = []
        for w in frontier:
            for s in nerve.generators:
                b.tick()
                nf = normal_form(nerve, w + (s,))
                if len(nf) == len(w) + 1 and nf not in ball:
                    ball[nf] = len(order)
                    order.append(nf)
                    nxt.append(nf)
        frontier = nxt
    return order


def davis_complex(nerve: CoxeterNerve, R: int,
                  budget: Budget | None = None) -> DavisBall:
    """Cubical ball of the Davis complex of a right-angled system.

    Vertices are group elements of word length at most R; edges join w and
    ws; the cube over a coset of a spherical (pairwise commuting) subset T
    is included when all of its 2^|T| elements lie in the ball.
    """
    if R < 0:
        raise InputError("radius must be nonnegative")
    b = ensure_budget(budget)
    order = coxeter_ball(nerve, R, b)
    index = {w: i for i, w in enumerate(order)}
    labels = [_word_label(nerve, w) for w in order]

    edges = []
    edge_gen = {}
    for w, i in index.items():
        for s in nerve.generators:
            nf = normal_form(nerve, w + (s,))
            j = index.get(nf)
            if j is not None and j > i:
                edges.append((i, j))
                edge_gen[(i, j)] = s

    nerve_flag = FlagComplex(nerve.graph)
    from .core import cliques_in_mask
    spherical = [c for c in cliques_in_mask(nerve_flag, nerve_flag.full_mask(), b)
                 if len(c) >= 2]
    cubes: set[frozenset[int]] = set()
    for w in order:
        for T in spherical:
            members = []
            ok = True
            for r in range(len(T) + 1):
                for sub in itertools.combinations(T, r):
                    b.tick()
                    el = normal_form(nerve, w + sub)
                    i = index.get(el)
                    if i is None:
                        ok = False
                        break
                    members.append(i)
                if not ok:
                    break
            if ok:
                cubes.add(frozenset(members))
    all_cells = [frozenset((i,)) for i in range(len(order))]
    all_cells += [frozenset(e) for e in edges]
    all_cells += sorted(cubes, key=sorted)
    maximal = [c for c in all_cells
               if not any(c < other for other in all_cells)]
    g = Graph(len(order), edges, labels=labels)
    complex_ = CellComplex(g, maximal, cubical=True)
    return DavisBall(nerve, R, complex_, tuple(order), edge_gen)


def moussong_check(nerve: CoxeterNerve, budget: Budget | None = None) -> Verdict:
    """Hyperbolicity criterion for the right-angled system: the nerve's
    clique complex must be 5-large, i.e. the nerve graph has no induced
    4-cycle (flagness holds by construction for graph nerves)."""
    from .core import induced_cycles
    b = ensure_budget(budget)
    X = FlagComplex(nerve.graph)
    for cyc in induced_cycles(X, X.full_mask(), 4, 4, b):
        return Verdict("nerve-5-large", False, ("cycle", cyc), {"budget": b.used})
    return Verdict("nerve-5-large", True, None, {"budget": b.used})
