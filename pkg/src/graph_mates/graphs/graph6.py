"""
graph6 codec (short form, n <= 62).

A record is N(n) followed by the upper-triangle adjacency bits in the order
x(0,1), x(0,2), x(1,2), x(0,3), ..., packed six bits per byte, most
significant bit first, each byte offset by 63. Padding bits must be zero.
"""

import logging
from typing import Union

from ..errors import MalformedGraph6, UnsupportedGraph
from .graph import MAX_ORDER, Graph

logger = logging.getLogger(__name__)

HEADER = b'>>graph6<<'


def _body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(line: Union[bytes, str]) -> Graph:
    """Decode one graph6 record, tolerating the optional header and one trailing newline."""
    record = line.encode('ascii') if isinstance(line, str) else bytes(line)
    if record.endswith(b'\n'):
        record = record[:-1]
        if record.endswith(b'\r'):
            record = record[:-1]
    if record.startswith(HEADER):
        record = record[len(HEADER):]
    if not record:
        raise MalformedGraph6("empty record")

    for byte in record:
        if not 63 <= byte <= 126:
            raise MalformedGraph6(f"byte {byte} outside 63..126", record)

    n = record[0] - 63
    if n > MAX_ORDER:
        # 126 introduces the long form for n >= 63
        raise MalformedGraph6(f"orders above {MAX_ORDER} are not supported", record)
    if n == 0:
        raise MalformedGraph6("graphs must have at least one vertex", record)

    body = record[1:]
    if len(body) != _body_length(n):
        raise MalformedGraph6(f"expected {_body_length(n)} data bytes for n={n}, got {len(body)}", record)

    bits = 0
    for byte in body:
        bits = bits << 6 | (byte - 63)
    total = 6 * len(body)
    pairs = n * (n - 1) // 2
    if bits & ((1 << (total - pairs)) - 1):
        raise MalformedGraph6("nonzero padding bits", record)

    rows = [0] * n
    k = total - 1
    for v in range(1, n):
        for u in range(v):
            if bits >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k -= 1
    return Graph(n, tuple(rows))


def encode_graph6(g: Graph) -> bytes:
    """Encode without header or newline."""
    n = g.order
    if n > MAX_ORDER:
        raise UnsupportedGraph(f"graph6 short form holds at most {MAX_ORDER} vertices, got {n}")
    out = bytearray([n + 63])
    value = 0
    width = 0
    for v in range(1, n):
        row = g.rows[v]
        for u in range(v):
            value = value << 1 | (row >> u & 1)
            width += 1
            if width == 6:
                out.append(value + 63)
                value = 0
                width = 0
    if width:
        out.append((value << (6 - width)) + 63)
    return bytes(out)


def to_graph6_str(g: Graph) -> str:
    return encode_graph6(g).decode('ascii')


def record_order(record: Union[bytes, str]) -> int:
    """Vertex count of a graph6 record, read from its first byte."""
    text = record.decode('ascii') if isinstance(record, bytes) else record
    if text.startswith(HEADER.decode('ascii')):
        text = text[len(HEADER):]
    if not text or not 63 <= ord(text[0]) <= 126:
        raise MalformedGraph6("missing or invalid order byte", text.encode('ascii', 'replace'))
    return ord(text[0]) - 63
