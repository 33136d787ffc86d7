"""graph6 codec (the ASCII format used by nauty's geng and friends).

Header: byte n+63 for n <= 62; bytes (126, b1, b2, b3) with n big-endian in
three 6-bit groups for 63 <= n <= 258047.  The 8-byte form for even larger
graphs is rejected.  Edge bits follow in column-major upper-triangle order
x(0,1), x(0,2), x(1,2), x(0,3), ..., packed into 6-bit groups (zero-padded)
with 63 added to each group.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph

MAX_N = 258047
_PREFIX = b">>graph6<<"


def _as_bytes(line) -> bytes:
    if isinstance(line, str):
        line = line.encode("ascii")
    return line.strip()


def parse_graph6(line) -> Graph:
    """Decode one graph6 record (optionally prefixed with ``>>graph6<<``)."""
    data = _as_bytes(line)
    if data.startswith(_PREFIX):
        data = data[len(_PREFIX):]
    if not data:
        raise Graph6Error("empty graph6 record")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside graph6 range [63,126]")

    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("8-byte graph6 size header not supported")
        if len(data) < 4:
            raise Graph6Error("truncated extended graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_N:
        raise Graph6Error(f"vertex count {n} exceeds graph6 ceiling {MAX_N}")

    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise Graph6Error(
            f"graph6 body has {len(body)} bytes, expected {expect} for n={n}"
        )

    adj = [0] * n
    bit = 0
    for b in body:
        group = b - 63
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if (group >> shift) & 1:
                    raise Graph6Error("nonzero padding bits in graph6 record")
                bit += 1
                continue
            if (group >> shift) & 1:
                # column-major upper triangle: bit index -> (i, j), j > i
                j = _column_of(bit)
                i = bit - j * (j - 1) // 2
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(adj))


def _column_of(bit: int) -> int:
    # smallest j with j*(j+1)/2 > bit
    j = int(((8 * bit + 1) ** 0.5 - 1) / 2)
    while j * (j + 1) // 2 <= bit:
        j += 1
    while j * (j - 1) // 2 > bit:
        j -= 1
    return j


def write_graph6(g: Graph) -> bytes:
    """Encode a graph; minimal-length canonical record for this labeling."""
    n = g.n
    if n > MAX_N:
        raise Graph6Error(f"vertex count {n} exceeds graph6 ceiling {MAX_N}")
    if n <= 62:
        out = bytearray([n + 63])
    else:
        out = bytearray([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])

    group = 0
    shift = 5
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            if (col >> i) & 1:
                group |= 1 << shift
            if shift == 0:
                out.append(group + 63)
                group, shift = 0, 5
            else:
                shift -= 1
    if shift != 5:
        out.append(group + 63)
    return bytes(out)
