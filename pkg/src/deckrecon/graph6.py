"""graph6 encoding for graphs with at most 62 vertices.

Only the single-byte size header is supported. The adjacency bits are the
upper triangle read column by column, packed into 6-bit groups, each group
offset by 63 into printable ASCII.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import Graph6Error
from .graph import MAX_VERTICES, Graph


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        r = g.rows[j]
        bits.extend(r >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k:k + 6]:
            group = group << 1 | b
        out.append(chr(group + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip("\r\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    n = ord(s[0]) - 63
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"unsupported graph6 size header {s[0]!r}")
    m = _pair_count(n)
    need = -(-m // 6)
    body = s[1:]
    if len(body) != need:
        what = "trailing garbage" if len(body) > need else "truncated adjacency data"
        raise Graph6Error(f"{what}: expected {need} data bytes for n={n}, got {len(body)}")
    value = 0
    for ch in body:
        group = ord(ch) - 63
        if not 0 <= group < 64:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
        value = value << 6 | group
    pad = need * 6 - m
    if value & ((1 << pad) - 1):
        raise Graph6Error("padding bits are set")
    value >>= pad
    rows = [0] * n
    pos = m - 1
    for j in range(1, n):
        for i in range(j):
            if value >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def read_graph6(stream: TextIO) -> Iterator[Graph]:
    """Yield one graph per non-blank line."""
    for line in stream:
        if line.strip():
            yield parse_graph6(line.strip())


def write_graph6(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(to_graph6(g) + "\n")
