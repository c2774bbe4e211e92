"""graph6 text codec (n <= 62, single-byte header)."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph, from_edges

MAX_G6_ORDER = 62
HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


class Graph6EmptyError(Graph6Error):
    pass


class Graph6ByteError(Graph6Error):
    pass


class Graph6LengthError(Graph6Error):
    pass


class Graph6TrailingError(Graph6Error):
    pass


def _pairs(n: int):
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode(g: Graph) -> str:
    n = g.n
    if n > MAX_G6_ORDER:
        raise Graph6Error(f"graph6 encoding here supports n <= {MAX_G6_ORDER}")
    bits = [int(g.has_edge(i, j)) for i, j in _pairs(n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def decode(s: str | bytes) -> Graph:
    if isinstance(s, bytes):
        s = s.decode("ascii", errors="replace")
    s = s.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise Graph6EmptyError("empty graph6 input")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ByteError(f"invalid graph6 byte {ch!r} at position {pos}")
    n = ord(s[0]) - 63
    if n > MAX_G6_ORDER:
        raise Graph6Error(f"graph6 orders above {MAX_G6_ORDER} are not supported")
    if n == 0:
        raise Graph6Error("graph6 string encodes the empty graph (n = 0)")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(s) < expected:
        raise Graph6LengthError(f"graph6 too short: {len(s)} chars, expected {expected}")
    if len(s) > expected:
        raise Graph6TrailingError(
            f"trailing data after graph6 body: {s[expected:]!r}"
        )
    edges = []
    for k, (i, j) in enumerate(_pairs(n)):
        chunk = ord(s[1 + k // 6]) - 63
        if chunk >> (5 - k % 6) & 1:
            edges.append((i, j))
    return from_edges(n, edges)


def read_stream(lines: Iterable[str], skip: int = 0) -> Iterator[Graph]:
    """Decode newline-delimited graph6, ignoring blank lines."""
    seen = 0
    for line in lines:
        line = line.strip()
        if not line:
            continue
        seen += 1
        if seen <= skip:
            continue
        yield decode(line)
