"""Encoder and parser for the graph6 text format.

graph6 packs the upper triangle of the adjacency matrix column by column
(column j lists rows 0..j-1) into 6-bit groups, each printed as one ASCII
character offset by 63.  A header encodes the order: one character for
n <= 62, or '~' followed by three characters for n up to 258047.
"""

from __future__ import annotations

from .errors import CapacityError, ParseError
from .graphs import Graph, _pair_count, pair_bit

GRAPH6_MAX_ORDER = 258047
_PREFIX = ">>graph6<<"


def _column_major_bits(g: Graph) -> list[int]:
    bits = []
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    return bits


def encode_graph6(g: Graph) -> str:
    """graph6 string for a graph; orders above 258047 are rejected."""
    n = g.n
    if n > GRAPH6_MAX_ORDER:
        raise CapacityError(f"graph6 supports orders up to {GRAPH6_MAX_ORDER}, got {n}")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = _column_major_bits(g)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k:k + 6]:
            group = (group << 1) | b
        body.append(chr(group + 63))
    return head + "".join(body)


def _read_order(text: str) -> tuple[int, int]:
    """Order and the index where the bit body starts."""
    if not text:
        raise ParseError("empty graph6 string")
    c = ord(text[0])
    if text[0] != "~":
        if not 63 <= c <= 126:
            raise ParseError(f"invalid graph6 header byte {c}")
        return c - 63, 1
    if len(text) < 4:
        raise ParseError("truncated graph6 long-form header")
    if text[1] == "~":
        raise ParseError("graph6 very-long form (n > 258047) is not supported")
    n = 0
    for ch in text[1:4]:
        v = ord(ch)
        if not 63 <= v <= 126:
            raise ParseError(f"invalid graph6 header byte {v}")
        n = (n << 6) | (v - 63)
    if n <= 62:
        raise ParseError("graph6 long-form header used for an order below 63")
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Graph from a graph6 string; the standard '>>graph6<<' prefix is allowed."""
    if text.startswith(_PREFIX):
        text = text[len(_PREFIX):]
    text = text.strip()
    n, start = _read_order(text)
    m = _pair_count(n)
    groups = -(-m // 6)
    body = text[start:]
    if len(body) != groups:
        raise ParseError(
            f"graph6 body for order {n} needs {groups} characters, got {len(body)}")
    bits = []
    for ch in body:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise ParseError(f"invalid graph6 body byte {ord(ch)}")
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[m:]):
        raise ParseError("nonzero padding bits in graph6 body")
    packed = 0
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                packed |= pair_bit(i, j, n)
            k += 1
    return Graph(n, packed)
