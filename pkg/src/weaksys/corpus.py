"""Named example complexes, generators, and the test corpus registry.

Generators are deterministic: the same name and parameters always produce
the same labeled complex.  Registry entries carry declared metadata
(simple connectivity, local largeness, expected verdicts) which the test
suite re-derives; stale metadata fails the build.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import FlagComplex, Graph
from .errors import InputError

# ---------------------------------------------------------------------------
# flag-complex generators
# ---------------------------------------------------------------------------


def cycle_complex(k: int) -> FlagComplex:
    if k < 3:
        raise InputError("cycle needs k >= 3")
    edges = [(i, (i + 1) % k) for i in range(k)]
    return FlagComplex(Graph(k, edges, labels=[f"c{i}" for i in range(k)]))


def path_complex(n: int) -> FlagComplex:
    edges = [(i, i + 1) for i in range(n - 1)]
    return FlagComplex(Graph(n, edges, labels=[f"p{i}" for i in range(n)]))


def star_complex(n: int) -> FlagComplex:
    """A hub joined to n isolated leaves (a tree)."""
    edges = [(0, i) for i in range(1, n + 1)]
    labels = ["hub"] + [f"l{i}" for i in range(1, n + 1)]
    return FlagComplex(Graph(n + 1, edges, labels=labels))


def simplex_complex(k: int) -> FlagComplex:
    """The full simplex on k+1 vertices."""
    n = k + 1
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return FlagComplex(Graph(n, edges, labels=[f"s{i}" for i in range(n)]))


def wheel_complex(k: int) -> FlagComplex:
    """Hub 'h' joined to an induced rim k-cycle r0..r(k-1)."""
    if k < 4:
        raise InputError("wheel needs k >= 4")
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i % k + 1) for i in range(1, k + 1)]
    labels = ["h"] + [f"r{i}" for i in range(k)]
    return FlagComplex(Graph(k + 1, edges, labels=labels))


def octahedron_complex() -> FlagComplex:
    """Three pairs of antipodes, every non-antipodal pair joined."""
    edges = [(u, v) for u in range(6) for v in range(u + 1, 6) if u % 3 != v % 3]
    labels = ["x+", "y+", "z+", "x-", "y-", "z-"]
    return FlagComplex(Graph(6, edges, labels=labels))


def icosahedron_complex() -> FlagComplex:
    """Pentagonal antiprism capped by two apexes; all links are 5-cycles."""
    # 0 = top, 11 = bottom, 1..5 upper ring, 6..10 lower ring
    edges = []
    for i in range(5):
        u = 1 + i
        w = 6 + i
        edges.append((0, u))
        edges.append((11, w))
        edges.append((u, 1 + (i + 1) % 5))
        edges.append((w, 6 + (i + 1) % 5))
        edges.append((u, w))
        edges.append((u, 6 + (i + 1) % 5))
    labels = (["top"] + [f"u{i}" for i in range(5)]
              + [f"w{i}" for i in range(5)] + ["bot"])
    return FlagComplex(Graph(12, edges, labels=labels))


def two_triangles_complex() -> FlagComplex:
    """Two triangles glued along an edge."""
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]
    return FlagComplex(Graph(4, edges, labels=["a", "b", "c", "d"]))


# triangular (hexagonal-plane) lattice: axial coordinates, 6 directions
_HEX_DIRS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


def hex_dist(q: int, r: int) -> int:
    return (abs(q) + abs(r) + abs(q + r)) // 2


def hexpatch_complex(radius: int) -> FlagComplex:
    """Ball of the equilateral-triangle tiling of the plane."""
    if radius < 0:
        raise InputError("radius must be nonnegative")
    coords = [(q, r) for q in range(-radius, radius + 1)
              for r in range(-radius, radius + 1) if hex_dist(q, r) <= radius]
    coords.sort(key=lambda c: (hex_dist(*c), c))
    index = {c: i for i, c in enumerate(coords)}
    edges = []
    for (q, r), i in index.items():
        for dq, dr in _HEX_DIRS:
            j = index.get((q + dq, r + dr))
            if j is not None and j > i:
                edges.append((i, j))
    labels = [f"{q},{r}" for q, r in coords]
    return FlagComplex(Graph(len(coords), edges, labels=labels))


def flag_torus_complex(m: int = 7, n: int = 7) -> FlagComplex:
    """Triangular lattice wrapped on an m-by-n torus (not simply connected)."""
    if m < 4 or n < 4:
        raise InputError("torus needs m, n >= 4")
    index = {(a, b): a * n + b for a in range(m) for b in range(n)}
    edges = set()
    for (a, b), i in index.items():
        for dq, dr in _HEX_DIRS:
            j = index[((a + dq) % m, (b + dr) % n)]
            if j != i:
                edges.add((min(i, j), max(i, j)))
    labels = [f"t{a},{b}" for a in range(m) for b in range(n)]
    X = FlagComplex(Graph(m * n, sorted(edges), labels=labels))
    for v in X.vertices:
        nbrs = X.neighbors(v)
        if len(nbrs) != 6:
            raise InputError("torus parameters too small: degenerate links")
    return X


def hyp7patch_complex(radius: int) -> FlagComplex:
    """Ball of the order-7 triangular tiling (vertex degree 7).

    Built ring by ring: a ring vertex with one inward neighbor spawns four
    outward children, one with two inward neighbors spawns three, and
    consecutive ring vertices share one child.  Interior links are induced
    7-cycles, boundary links are induced arcs, so every patch is locally
    7-large; as a ball it is contractible.
    """
    if radius < 0:
        raise InputError("radius must be nonnegative")
    edges: list[tuple[int, int]] = []
    n = 1
    if radius >= 1:
        ring = list(range(1, 8))
        parents = {v: 1 for v in ring}
        n = 8
        for i, v in enumerate(ring):
            edges.append((0, v))
            edges.append((v, ring[(i + 1) % len(ring)]))
        for _ in range(2, radius + 1):
            # each ring vertex creates out-1 fresh children; its remaining
            # child is the last fresh child of its ring predecessor
            blocks: dict[int, list[int]] = {}
            nxt: list[int] = []
            for v in ring:
                out = 4 if parents[v] == 1 else 3
                fresh = list(range(n, n + out - 1))
                n += out - 1
                blocks[v] = fresh
                nxt.extend(fresh)
            for idx, v in enumerate(ring):
                shared = blocks[ring[idx - 1]][-1]
                for c in [shared] + blocks[v]:
                    edges.append((v, c))
            new_parents = {c: 1 for c in nxt}
            for v in ring:
                new_parents[blocks[v][-1]] = 2
            for i, c in enumerate(nxt):
                edges.append((c, nxt[(i + 1) % len(nxt)]))
            ring = nxt
            parents = new_parents
    labels = [f"h{i}" for i in range(n)]
    return FlagComplex(Graph(n, sorted(set(edges)), labels=labels))


def _psl27():
    """Elements of PSL(2,7) as canonical 2x2 tuples over F7 (mod +-1)."""
    import itertools as it

    def canon(m):
        neg = tuple((-x) % 7 for x in m)
        return min(m, neg)

    els = set()
    for a, b, c, d in it.product(range(7), repeat=4):
        if (a * d - b * c) % 7 == 1:
            els.add(canon((a, b, c, d)))

    def mul(m1, m2):
        a, b, c, d = m1
        e, f, g, h = m2
        return canon(((a * e + b * g) % 7, (a * f + b * h) % 7,
                      (c * e + d * g) % 7, (c * f + d * h) % 7))

    return sorted(els), mul, canon((1, 0, 0, 1))


def klein_quartic_complex() -> FlagComplex:
    """The 24-vertex triangulated genus-3 surface with 7-regular vertex
    stars (a quotient of the order-7 triangular tiling).

    Built from the rotation group PSL(2,7): vertices are cosets of an
    order-7 cyclic subgroup, and two vertices are joined when their cosets
    meet a common coset of the order-2 subgroup generated by the edge
    rotation.  Every vertex link is an induced 7-cycle, so the complex is
    flag and locally 7-large, but it is a closed surface and in
    particular not simply connected."""
    els, mul, ident = _psl27()

    def order(m):
        x, k = m, 1
        while x != ident:
            x = mul(x, m)
            k += 1
        return k

    r = min(m for m in els if order(m) == 7)
    s = min(m for m in els if order(m) == 3 and order(mul(r, m)) == 2)
    rot = [ident]
    x = r
    while x != ident:
        rot.append(x)
        x = mul(x, r)

    def vertex_coset(g):
        return min(mul(g, h) for h in rot)

    verts = sorted({vertex_coset(g) for g in els})
    vid = {v: i for i, v in enumerate(verts)}
    rs = mul(r, s)
    edges = set()
    for g in els:
        u = vid[vertex_coset(g)]
        w = vid[vertex_coset(mul(g, rs))]
        if u != w:
            edges.add((min(u, w), max(u, w)))
    labels = [f"k{i}" for i in range(len(verts))]
    return FlagComplex(Graph(len(verts), sorted(edges), labels=labels))


# ---------------------------------------------------------------------------
# cell-complex generators (cubical)
# ---------------------------------------------------------------------------


def _cell_complex(vertex_labels, edges, maximal_cells):
    from .thickening import CellComplex
    g = Graph(len(vertex_labels), edges, labels=vertex_labels)
    return CellComplex(g, maximal_cells)


def square_cell() -> "CellComplex":
    return _cell_complex(["00", "01", "10", "11"],
                         [(0, 1), (0, 2), (1, 3), (2, 3)], [(0, 1, 2, 3)])


def cube_cell(d: int = 3) -> "CellComplex":
    if not 1 <= d <= 6:
        raise InputError("cube dimension out of range")
    n = 1 << d
    labels = [format(i, f"0{d}b") for i in range(n)]
    edges = [(i, i | (1 << b)) for i in range(n) for b in range(d)
             if not (i >> b) & 1]
    return _cell_complex(labels, edges, [tuple(range(n))])


def two_squares_edge_cell() -> "CellComplex":
    labels = ["a", "b", "c", "d", "e", "f"]
    edges = [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5)]
    return _cell_complex(labels, edges, [(0, 1, 2, 3), (2, 3, 4, 5)])


def squares_strip_cell(n: int) -> "CellComplex":
    """n unit squares in a row, consecutive squares sharing an edge."""
    labels = [f"{i}{j}" for i in range(n + 1) for j in (0, 1)]
    edges = []
    cells = []
    for i in range(n + 1):
        edges.append((2 * i, 2 * i + 1))
        if i < n:
            edges.append((2 * i, 2 * i + 2))
            edges.append((2 * i + 1, 2 * i + 3))
            cells.append((2 * i, 2 * i + 1, 2 * i + 2, 2 * i + 3))
    return _cell_complex(labels, edges, cells)


def cube_block_cell(a: int = 2, b: int = 2, c: int = 2) -> "CellComplex":
    """An a-by-b-by-c block of unit 3-cubes."""
    if min(a, b, c) < 1:
        raise InputError("block dimensions must be positive")
    index = {}
    labels = []
    for i in range(a + 1):
        for j in range(b + 1):
            for k in range(c + 1):
                index[(i, j, k)] = len(labels)
                labels.append(f"{i}{j}{k}")
    edges = []
    for (i, j, k), u in index.items():
        for di, dj, dk in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            w = index.get((i + di, j + dj, k + dk))
            if w is not None:
                edges.append((u, w))
    cells = []
    for i in range(a):
        for j in range(b):
            for k in range(c):
                cells.append(tuple(index[(i + di, j + dj, k + dk)]
                                   for di in (0, 1) for dj in (0, 1)
                                   for dk in (0, 1)))
    return _cell_complex(labels, edges, cells)


def two_cubes_face_cell() -> "CellComplex":
    """Two solid 3-cubes glued along a square face."""
    labels = [f"v{i}" for i in range(12)]
    # cube A on 0..7 (binary xyz), cube B shares the x=1 face {4,5,6,7}
    edges = [(i, i | (1 << b)) for i in range(8) for b in range(3)
             if not (i >> b) & 1]
    # cube B: vertices 4..7 plus 8..11, with 8+k glued over 4+k
    for k in range(4):
        edges.append((4 + k, 8 + k))
    edges += [(8, 9), (8, 10), (9, 11), (10, 11)]
    return _cell_complex(labels, edges,
                         [tuple(range(8)), (4, 5, 6, 7, 8, 9, 10, 11)])


def three_squares_ring_cell() -> "CellComplex":
    """Three squares pairwise meeting in single corners around a hexagon;
    the triple intersection is empty."""
    labels = ["v0", "v1", "v2", "v3", "v4", "v5", "a", "b", "c"]
    edges = [(0, 1), (1, 2), (2, 6), (6, 0),      # square {v0,v1,v2,a}
             (2, 3), (3, 4), (4, 7), (7, 2),      # square {v2,v3,v4,b}
             (4, 5), (5, 0), (0, 8), (8, 4)]      # square {v4,v5,v0,c}
    return _cell_complex(labels, edges,
                         [(0, 1, 2, 6), (2, 3, 4, 7), (0, 4, 5, 8)])


def corner_squares_cell() -> "CellComplex":
    """Three squares around a common corner vertex, pairwise sharing edges
    (the boundary of a cube corner, no solid cube)."""
    labels = ["o", "x", "y", "z", "xy", "yz", "zx"]
    edges = [(0, 1), (0, 2), (0, 3),
             (1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (1, 6)]
    return _cell_complex(labels, edges, [(0, 1, 2, 4), (0, 2, 3, 5), (0, 1, 3, 6)])


def pentagon_davis_interior(radius: int = 3) -> "CellComplex":
    """Interior of the radius-``radius`` ball of the Davis complex of the
    right-angled system with pentagon nerve."""
    from .thickening import CoxeterNerve, davis_complex
    nerve = CoxeterNerve.from_graph(cycle_complex(5).skeleton)
    ball = davis_complex(nerve, radius)
    return ball.interior()


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    """A named corpus complex with declared, test-verified metadata."""

    name: str
    kind: str                      # "flag" | "cell"
    builder: object
    params: dict = field(default_factory=dict)
    simply_connected: bool | None = None
    # largest k in the probe range 4..8 for which local k-largeness holds;
    # 8 means "holds at every probed k", 3 means "fails already at 4"
    locally_k_large: int | None = None
    expected: dict = field(default_factory=dict)
    large: bool = False            # excluded from whole-corpus sweeps

    def build(self):
        return self.builder(**self.params)


GENERATORS: dict[str, tuple] = {
    "cycle": (cycle_complex, "k-cycle; params: k"),
    "path": (path_complex, "path on n vertices; params: n"),
    "star": (star_complex, "hub with n leaves; params: n"),
    "simplex": (simplex_complex, "full simplex of dimension k; params: k"),
    "wheel": (wheel_complex, "hub joined to an induced k-cycle; params: k"),
    "octahedron": (octahedron_complex, "boundary of the octahedron"),
    "icosahedron": (icosahedron_complex, "boundary of the icosahedron"),
    "two-triangles": (two_triangles_complex, "two triangles sharing an edge"),
    "hexpatch": (hexpatch_complex,
                 "ball of the flat triangular tiling; params: radius"),
    "flag-torus": (flag_torus_complex,
                   "triangular lattice on a torus; params: m n"),
    "hyp7patch": (hyp7patch_complex,
                  "ball of the order-7 triangular tiling; params: radius"),
    "klein-quartic": (klein_quartic_complex,
                      "24-vertex locally 7-large genus-3 surface"),
    "square": (square_cell, "one unit square (cell complex)"),
    "cube": (cube_cell, "solid d-cube (cell complex); params: d"),
    "two-squares": (two_squares_edge_cell, "two squares sharing an edge"),
    "squares-strip": (squares_strip_cell, "row of n squares; params: n"),
    "two-cubes": (two_cubes_face_cell, "two 3-cubes sharing a face"),
    "cube-block": (cube_block_cell,
                   "a x b x c block of unit cubes; params: a b c"),
    "three-squares-ring": (three_squares_ring_cell,
                           "three squares pairwise meeting in corners"),
    "corner-squares": (corner_squares_cell,
                       "three squares around a cube corner"),
    "davis-pentagon-interior": (pentagon_davis_interior,
                                "interior Davis ball, pentagon nerve; params: radius"),
}


def generate(name: str, **params):
    try:
        fn, _ = GENERATORS[name]
    except KeyError:
        raise InputError(f"unknown generator {name!r}") from None
    try:
        return fn(**params)
    except TypeError as exc:
        raise InputError(f"bad parameters for {name!r}: {exc}") from None


def _registry() -> list[CorpusEntry]:
    E = CorpusEntry
    return [
        E("cycle-4", "flag", cycle_complex, {"k": 4}, simply_connected=False,
          locally_k_large=8,
          expected={"sd2star": True, "weakly-systolic": False,
                    "locally-6-large": True}),
        E("cycle-5", "flag", cycle_complex, {"k": 5}, simply_connected=False,
          locally_k_large=8,
          expected={"sd2star": True, "weakly-systolic": False,
                    "locally-6-large": True}),
        E("cycle-6", "flag", cycle_complex, {"k": 6}, simply_connected=False,
          locally_k_large=8,
          expected={"sd2star": True, "weakly-systolic": False,
                    "locally-6-large": True}),
        E("cycle-7", "flag", cycle_complex, {"k": 7}, simply_connected=False,
          locally_k_large=8,
          expected={"sd2star": True, "weakly-systolic": False,
                    "locally-6-large": True}),
        E("path-5", "flag", path_complex, {"n": 5}, simply_connected=True,
          locally_k_large=8,
          expected={"sd2star": True, "weakly-systolic": True,
                    "locally-6-large": True}),
        E("star-5", "flag", star_complex, {"n": 5}, simply_connected=True,
          locally_k_large=8,
          expected={"sd2star": True, "weakly-systolic": True,
                    "locally-6-large": True}),
        E("simplex-3", "flag", simplex_complex, {"k": 3}, simply_connected=True,
          locally_k_large=8,
          expected={"sd2star": True, "weakly-systolic": True,
                    "locally-6-large": True}),
        E("two-triangles", "flag", two_triangles_complex, {},
          simply_connected=True, locally_k_large=8,
          expected={"sd2star": True, "weakly-systolic": True,
                    "locally-6-large": True}),
        E("wheel-4", "flag", wheel_complex, {"k": 4}, simply_connected=True,
          locally_k_large=4,
          expected={"sd2star": False, "weakly-systolic": False,
                    "locally-6-large": False}),
        E("wheel-5", "flag", wheel_complex, {"k": 5}, simply_connected=True,
          locally_k_large=5,
          expected={"sd2star": True, "weakly-systolic": True,
                    "locally-6-large": False}),
        E("wheel-6", "flag", wheel_complex, {"k": 6}, simply_connected=True,
          locally_k_large=6,
          expected={"sd2star": True, "weakly-systolic": True,
                    "locally-6-large": True}),
        E("octahedron", "flag", octahedron_complex, {}, simply_connected=True,
          locally_k_large=4,
          expected={"sd2star": False, "weakly-systolic": False,
                    "locally-6-large": False}),
        E("icosahedron", "flag", icosahedron_complex, {},
          simply_connected=True, locally_k_large=5,
          expected={"sd2star": False, "weakly-systolic": False,
                    "locally-6-large": False}),
        E("hexpatch-1", "flag", hexpatch_complex, {"radius": 1},
          simply_connected=True, locally_k_large=6,
          expected={"sd2star": True, "weakly-systolic": True,
                    "locally-6-large": True}),
        E("hexpatch-2", "flag", hexpatch_complex, {"radius": 2},
          simply_connected=True, locally_k_large=6,
          expected={"sd2star": True, "weakly-systolic": True,
                    "locally-6-large": True}),
        E("hexpatch-3", "flag", hexpatch_complex, {"radius": 3},
          simply_connected=True, locally_k_large=6,
          expected={"sd2star": True, "weakly-systolic": True,
                    "locally-6-large": True}),
        E("flag-torus-7x7", "flag", flag_torus_complex, {"m": 7, "n": 7},
          simply_connected=False, locally_k_large=6,
          expected={"sd2star": True, "weakly-systolic": False,
                    "locally-6-large": True}),
        E("hyp7patch-2", "flag", hyp7patch_complex, {"radius": 2},
          simply_connected=True, locally_k_large=7,
          expected={"sd2star": True, "weakly-systolic": True,
                    "locally-6-large": True, "sd2star-7": True}),
        E("hyp7patch-3", "flag", hyp7patch_complex, {"radius": 3},
          simply_connected=True, locally_k_large=7, large=True,
          expected={"sd2star": True, "weakly-systolic": True,
                    "locally-6-large": True, "sd2star-7": True}),
        E("hyp7patch-6", "flag", hyp7patch_complex, {"radius": 6},
          simply_connected=True, locally_k_large=7, large=True,
          expected={"sd2star-7": True}),
        E("klein-quartic", "flag", klein_quartic_complex, {},
          simply_connected=False, locally_k_large=7,
          expected={"sd2star": True, "weakly-systolic": False,
                    "locally-6-large": True, "sd2star-7": True}),
        # cubical cell complexes
        E("square", "cell", square_cell, {}, simply_connected=True,
          locally_k_large=8,
          expected={"no-delta": True}),
        E("cube-3", "cell", cube_cell, {"d": 3}, simply_connected=True,
          locally_k_large=8,
          expected={"no-delta": True}),
        E("two-squares", "cell", two_squares_edge_cell, {},
          simply_connected=True, locally_k_large=8,
          expected={"no-delta": True}),
        E("squares-strip-3", "cell", squares_strip_cell, {"n": 3},
          simply_connected=True, locally_k_large=8,
          expected={"no-delta": True}),
        E("two-cubes", "cell", two_cubes_face_cell, {},
          simply_connected=True, locally_k_large=8,
          expected={"no-delta": True}),
        E("cube-block-222", "cell", cube_block_cell, {"a": 2, "b": 2, "c": 2},
          simply_connected=True, locally_k_large=4,
          expected={"no-delta": True}),
        E("three-squares-ring", "cell", three_squares_ring_cell, {},
          simply_connected=False, locally_k_large=8,
          expected={"no-delta": False}),
        E("corner-squares", "cell", corner_squares_cell, {},
          simply_connected=True, locally_k_large=3,
          expected={"no-delta": True}),
        E("davis-pentagon-interior", "cell", pentagon_davis_interior,
          {"radius": 3}, simply_connected=True, locally_k_large=5,
          expected={"no-delta": True}),
    ]


REGISTRY: list[CorpusEntry] = _registry()


def corpus_entries(kind: str | None = None, include_large: bool = False):
    for entry in REGISTRY:
        if kind is not None and entry.kind != kind:
            continue
        if entry.large and not include_large:
            continue
        yield entry


def entry_by_name(name: str) -> CorpusEntry:
    for entry in REGISTRY:
        if entry.name == name:
            return entry
    raise InputError(f"unknown corpus entry {name!r}")
