"""
graph6 codec, see https://users.cecs.anu.edu.au/~bdm/data/formats.txt

Upper-triangle bits are packed column by column: (0,1), (0,2), (1,2), (0,3), ...
"""
import logging
from pathlib import Path
from typing import Iterator

from vizingdom.errors import Graph6ParseError, UnsupportedSizeError
from vizingdom.graph import Graph

HEADER = '>>graph6<<'
BIAS = 63
MAX_CHAR = 126
SMALL_N = 62
MEDIUM_N = 258047


def _size_field(n: int) -> str:
    if n < 0:
        raise UnsupportedSizeError(f'Negative vertex count {n}')
    if n <= SMALL_N:
        return chr(n + BIAS)
    if n <= MEDIUM_N:
        return chr(MAX_CHAR) + ''.join(chr(((n >> shift) & 0x3F) + BIAS) for shift in (12, 6, 0))
    raise UnsupportedSizeError(f'graph6 size field supports at most {MEDIUM_N} vertices, got {n}')


def encode_graph6(g: Graph) -> str:
    out = [_size_field(g.n)]
    value, nbits = 0, 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            value = (value << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(value + BIAS))
                value, nbits = 0, 0
    if nbits:
        out.append(chr((value << (6 - nbits)) + BIAS))
    return ''.join(out)


def _split_header(text: str) -> tuple[int, str]:
    """
    Position of the record inside text and the record itself, without surrounding whitespace or header
    """
    stripped = text.lstrip()
    skip = len(text) - len(stripped)
    if stripped.startswith(HEADER):
        skip += len(HEADER)
    return skip, text[skip:].rstrip()


def strip_header(text: str) -> str:
    return _split_header(text)[1]


def decode_graph6(text: str) -> Graph:
    """
    Parse errors report byte offsets into text as given, header included
    """
    skip, data = _split_header(text)
    try:
        return _decode(data)
    except Graph6ParseError as ex:
        if not skip:
            raise
        raise Graph6ParseError(ex.reason, offset=ex.offset + skip) from ex


def _decode(data: str) -> Graph:
    for offset, c in enumerate(data):
        if not BIAS <= ord(c) <= MAX_CHAR:
            raise Graph6ParseError(f'Character {c!r} outside the graph6 range', offset=offset)
    if not data:
        raise Graph6ParseError('Empty graph6 record', offset=0)

    values = [ord(c) - BIAS for c in data]
    if values[0] != MAX_CHAR - BIAS:
        n, pos = values[0], 1
    elif len(values) > 1 and values[1] == MAX_CHAR - BIAS:
        raise UnsupportedSizeError(f'graph6 8-byte size field is not supported (more than {MEDIUM_N} vertices)')
    elif len(values) >= 4:
        n, pos = (values[1] << 12) | (values[2] << 6) | values[3], 4
    else:
        raise Graph6ParseError('Truncated size field', offset=len(values))

    nbits = n * (n - 1) // 2
    expected = pos + (nbits + 5) // 6
    if len(values) != expected:
        raise Graph6ParseError(f'Expected {expected} bytes for {n} vertices, got {len(values)}',
                               offset=min(len(values), expected))
    if nbits % 6 and values[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6ParseError('Nonzero padding bits', offset=len(values) - 1)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if values[pos + k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n=n, rows=tuple(rows))


def iter_graph6_lines(lines) -> Iterator[tuple[str, Graph]]:
    for line_no, line in enumerate(lines, start=1):
        record = strip_header(line)
        if not record:
            continue
        try:
            yield record, decode_graph6(line)
        except Graph6ParseError as ex:
            raise Graph6ParseError(ex.reason, offset=ex.offset, line=line_no) from ex


def read_graph6_file(path: Path) -> list[tuple[str, Graph]]:
    """
    Read a graph6 file, one record per line. Records are identified by their graph6 text as given.
    """
    logging.debug(f'Reading graph6 corpus {path}')
    with open(path, 'r', encoding='latin-1') as f:
        return list(iter_graph6_lines(f))
