import networkx as nx
import pytest

from conftest import atlas
from vizingdom.errors import Graph6ParseError, UnsupportedSizeError
from vizingdom.generators import generate, GraphFamily
from vizingdom.graph import Graph
from vizingdom.graph6 import decode_graph6, encode_graph6, read_graph6_file


@pytest.mark.parametrize('text,edges', [
    ('A_', [(0, 1)]),
    ('A?', []),
    ('Bw', [(0, 1), (0, 2), (1, 2)]),
    ('>>graph6<<Bw', [(0, 1), (0, 2), (1, 2)]),
])
def test_decode(text, edges):
    g = decode_graph6(text)
    assert g.edges() == edges


def test_encode_small():
    assert encode_graph6(generate(GraphFamily.COMPLETE, 2)) == 'A_'
    assert encode_graph6(Graph.from_edges(2, [])) == 'A?'
    assert encode_graph6(generate(GraphFamily.COMPLETE, 3)) == 'Bw'
    assert encode_graph6(Graph(n=0, rows=())) == '?'


def test_atlas_encoding_matches_networkx():
    for g in atlas()[1:]:
        expected = nx.to_graph6_bytes(g.to_networkx(), header=False).decode('ascii').strip()
        assert encode_graph6(g) == expected
        assert decode_graph6(expected) == g


def test_multibyte_size_field():
    g = generate(GraphFamily.PATH, 70)
    text = encode_graph6(g)
    assert text.startswith('~')
    assert decode_graph6(text) == g
    assert nx.utils.edges_equal(nx.from_graph6_bytes(text.encode('ascii')).edges(), g.edges())


@pytest.mark.parametrize('text,offset', [
    ('A', 1),       # missing data byte
    ('A_?', 2),     # trailing byte
    ('A`', 1),      # nonzero padding
    ('A ', 1),      # below the graph6 range
    ('~??', 3),     # truncated size field
])
def test_parse_errors_name_byte_offset(text, offset):
    with pytest.raises(Graph6ParseError) as ex:
        decode_graph6(text)
    assert ex.value.offset == offset
    assert f'byte {offset}' in str(ex.value)


@pytest.mark.parametrize('text,offset', [
    ('>>graph6<<A', 11),
    ('>>graph6<<A_?', 12),
    ('  A', 3),
])
def test_parse_error_offsets_count_the_header(text, offset):
    with pytest.raises(Graph6ParseError) as ex:
        decode_graph6(text)
    assert ex.value.offset == offset


def test_empty_record():
    with pytest.raises(Graph6ParseError):
        decode_graph6('')


def test_eight_byte_size_field_unsupported():
    with pytest.raises(UnsupportedSizeError):
        decode_graph6('~~??????')


def test_read_file(tmp_path):
    path = tmp_path / 'corpus.g6'
    path.write_text('>>graph6<<A_\n\nBw\nA?\n')
    records = read_graph6_file(path)
    assert [gid for gid, _ in records] == ['A_', 'Bw', 'A?']
    assert records[1][1].num_edges == 3


def test_read_file_reports_line(tmp_path):
    path = tmp_path / 'corpus.g6'
    path.write_text('A_\nBw\nA\n')
    with pytest.raises(Graph6ParseError) as ex:
        read_graph6_file(path)
    assert ex.value.line == 3
    assert 'line 3' in str(ex.value)


def test_read_file_offset_includes_header(tmp_path):
    path = tmp_path / 'corpus.g6'
    path.write_text('>>graph6<<A_\n>>graph6<<A`\n')
    with pytest.raises(Graph6ParseError) as ex:
        read_graph6_file(path)
    assert (ex.value.line, ex.value.offset) == (2, 11)
