import pytest

from weaksys import InputError
from weaksys.io import (
    emit_cell_complex,
    emit_complex,
    emit_cover,
    parse_cells,
    parse_complex,
    parse_graph,
    parse_map_lines,
    sha256_of,
)
from weaksys.corpus import REGISTRY, corpus_entries
from weaksys.thickening import CellComplex


SAMPLE = """\
# a triangle with a tail
v a
v b
v c
v tail
e a b
e b c
e a c
e c tail
"""


def test_parse_basic():
    X = parse_complex(SAMPLE)
    assert X.n == 4
    assert X.labels == ("a", "b", "c", "tail")
    assert X.has_edge(0, 1) and X.has_edge(2, 3)


def test_parse_errors():
    with pytest.raises(InputError):
        parse_complex("v a\ne a b\n")
    with pytest.raises(InputError):
        parse_complex("v a\nv a\n")
    with pytest.raises(InputError):
        parse_complex("x nonsense\n")
    with pytest.raises(InputError):
        parse_complex("v a\nv b\ne a\n")


def test_roundtrip_every_corpus_complex():
    for entry in corpus_entries():
        obj = entry.build()
        if isinstance(obj, CellComplex):
            text = emit_cell_complex(obj.graph, obj.maximal_cells)
            g = parse_graph(text)
            cells = [[g.vertex_by_label(l) for l in c]
                     for c in parse_cells(text)]
            again = CellComplex(g, cells)
            assert again.graph.labels == obj.graph.labels
            assert sorted(again.graph.edges()) == sorted(obj.graph.edges())
            assert set(again.maximal_cells) == set(obj.maximal_cells)
            assert emit_cell_complex(again.graph, again.maximal_cells) == text
        else:
            text = emit_complex(obj)
            again = parse_complex(text)
            assert again.labels == obj.labels
            assert sorted(again.skeleton.edges()) == \
                sorted(obj.skeleton.edges())
            assert emit_complex(again) == text


def test_cover_emission_carries_map_lines():
    from weaksys import build_cover
    from weaksys.corpus import cycle_complex
    pc = build_cover(cycle_complex(4), 0, 3)
    text = emit_cover(pc.cover, pc.map_labels())
    pairs = parse_map_lines(text)
    assert len(pairs) == pc.cover.n
    base_labels = set(pc.base.labels)
    for cover_label, base_label in pairs:
        assert base_label in base_labels
    again = parse_complex(text)
    assert again.n == pc.cover.n


def test_digest_stability():
    assert sha256_of("abc") == sha256_of(b"abc")
    assert sha256_of("abc") != sha256_of("abd")
