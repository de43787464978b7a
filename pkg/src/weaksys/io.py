"""Line-oriented text formats for complexes, cell complexes and covers.

The shared format is::

    # comment
    v <label>
    e <label> <label>

with one declaration per line.  Labels are arbitrary non-whitespace byte
strings; declaration order fixes the canonical ids 0..n-1.  Cell-complex
files add ``c <label> ... <label>`` lines declaring maximal cells, and
cover files add ``m <cover-label> <base-label>`` lines for the covering
map.  Davis-complex files may carry ``g <label> <label> <generator>``
lines recording which generator an edge belongs to.
"""

from __future__ import annotations

import hashlib

from .core import FlagComplex, Graph
from .errors import InputError


def _tokenize(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def parse_graph(text: str) -> Graph:
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    extra = []
    for lineno, tok in _tokenize(text):
        kind, args = tok[0], tok[1:]
        if kind == "v":
            if len(args) != 1:
                raise InputError(f"line {lineno}: v takes one label")
            lab = args[0]
            if lab in index:
                raise InputError(f"line {lineno}: duplicate vertex {lab!r}")
            index[lab] = len(labels)
            labels.append(lab)
        elif kind == "e":
            if len(args) != 2:
                raise InputError(f"line {lineno}: e takes two labels")
            try:
                u, v = index[args[0]], index[args[1]]
            except KeyError as exc:
                raise InputError(f"line {lineno}: unknown vertex {exc}") from None
            edges.append((u, v))
        elif kind in ("c", "m", "g"):
            extra.append((lineno, tok))
        else:
            raise InputError(f"line {lineno}: unknown directive {kind!r}")
    return Graph(len(labels), edges, labels=labels)


def parse_complex(text: str) -> FlagComplex:
    return FlagComplex(parse_graph(text))


def parse_cells(text: str) -> list[list[str]]:
    """Extract the ``c`` lines (maximal cells) as label lists."""
    cells = []
    for lineno, tok in _tokenize(text):
        if tok[0] == "c":
            if len(tok) < 2:
                raise InputError(f"line {lineno}: empty cell")
            cells.append(tok[1:])
    return cells


def parse_map_lines(text: str) -> list[tuple[str, str]]:
    pairs = []
    for lineno, tok in _tokenize(text):
        if tok[0] == "m":
            if len(tok) != 3:
                raise InputError(f"line {lineno}: m takes two labels")
            pairs.append((tok[1], tok[2]))
    return pairs


def emit_graph(g: Graph, header: str | None = None) -> str:
    out = []
    if header:
        out.append(f"# {header}")
    for lab in g.labels:
        out.append(f"v {lab}")
    for u, v in g.edges():
        out.append(f"e {g.labels[u]} {g.labels[v]}")
    return "\n".join(out) + "\n"


def emit_complex(X: FlagComplex, header: str | None = None) -> str:
    return emit_graph(X.skeleton, header=header)


def emit_cell_complex(graph: Graph, maximal_cells, header: str | None = None) -> str:
    out = [emit_graph(graph, header=header).rstrip("\n")]
    for cell in maximal_cells:
        out.append("c " + " ".join(graph.labels[v] for v in sorted(cell)))
    return "\n".join(out) + "\n"


def emit_cover(cover: FlagComplex, to_base_labels, header: str | None = None) -> str:
    """Cover complex plus ``m`` lines mapping cover labels to base labels."""
    out = [emit_complex(cover, header=header).rstrip("\n")]
    for v in cover.vertices:
        out.append(f"m {cover.label(v)} {to_base_labels[v]}")
    return "\n".join(out) + "\n"


def sha256_of(text: str | bytes) -> str:
    data = text.encode() if isinstance(text, str) else text
    return hashlib.sha256(data).hexdigest()


def load_complex(path) -> FlagComplex:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_complex(fh.read())
