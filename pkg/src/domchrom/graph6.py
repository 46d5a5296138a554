"""graph6 encoding and decoding (the >>graph6<< interchange format).

Only the undirected graph6 flavor is supported: one graph per ASCII line,
size prefix N(n) followed by the upper triangle of the adjacency matrix in
column-major order, packed into 6-bit groups offset by 63.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graphs import Graph, GraphError

HEADER = ">>graph6<<"

_MAX_N = 258047  # largest order of the 4-byte size encoding; enough here


class Graph6Error(GraphError):
    """Malformed graph6 input; `offset` is the byte position of the fault."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


def _check_chars(data: str) -> None:
    for i, ch in enumerate(data):
        o = ord(ch)
        if not (63 <= o <= 126):
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126", offset=i)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (a leading >>graph6<< header is tolerated)."""
    data = text.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 string", offset=0)
    _check_chars(data)

    # Size prefix.
    first = ord(data[0]) - 63
    if first < 63:
        n = first
        pos = 1
    else:
        if len(data) >= 2 and data[1] == "~":
            raise Graph6Error(f"orders above {_MAX_N} are not supported", offset=0)
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size prefix", offset=len(data))
        n = 0
        for i in range(1, 4):
            n = (n << 6) | (ord(data[i]) - 63)
        pos = 4
        if n < 63:
            raise Graph6Error("non-canonical long size prefix for n < 63", offset=0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise Graph6Error(
            f"adjacency body has {len(body)} bytes, expected {nbytes} for n={n}",
            offset=pos + min(len(body), nbytes),
        )

    rows = [0] * n
    bit_index = 0
    for byte_i, ch in enumerate(body):
        group = ord(ch) - 63
        for k in range(5, -1, -1):
            bit = group >> k & 1
            if bit_index >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bits", offset=pos + byte_i)
                bit_index += 1
                continue
            if bit:
                u, v = _pair_at(bit_index)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit_index += 1
    return Graph(n, rows, _checked=True)


def _pair_at(bit_index: int) -> tuple[int, int]:
    # Upper triangle column-major: bits for column v are rows 0..v-1.
    v = 1
    while v * (v + 1) // 2 <= bit_index:
        v += 1
    u = bit_index - v * (v - 1) // 2
    return u, v


def to_graph6(g: Graph) -> str:
    """Canonical graph6 encoding of the graph in its current vertex order."""
    n = g.n
    if n > _MAX_N:
        raise Graph6Error(f"orders above {_MAX_N} are not supported")
    if n <= 62:
        prefix = chr(63 + n)
    else:
        prefix = "~" + "".join(chr(63 + (n >> s & 0x3F)) for s in (12, 6, 0))
    chunks = []
    group = 0
    filled = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            group = group << 1 | (col >> u & 1)
            filled += 1
            if filled == 6:
                chunks.append(chr(63 + group))
                group = 0
                filled = 0
    if filled:
        group <<= 6 - filled
        chunks.append(chr(63 + group))
    return prefix + "".join(chunks)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield (line_number, payload) for non-blank lines, handling the header."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if lineno == 1 and line.startswith(HEADER):
            line = line[len(HEADER):].strip()
            if not line:
                continue
        yield lineno, line
