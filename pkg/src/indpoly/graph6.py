"""graph6 reading and writing (the nauty/geng text format)."""

from __future__ import annotations

from typing import Iterator, TextIO

from .graph import Graph

HEADER = b">>graph6<<"


class GraphFormatError(ValueError):
    pass


def _size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphFormatError("empty graph6 record")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 8-byte size header")
        groups, offset = data[2:8], 8
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated 4-byte size header")
        groups, offset = data[1:4], 4
    n = 0
    for b in groups:
        n = (n << 6) | (b - 63)
    return n, offset


def parse_graph6(record: bytes | str) -> Graph:
    if isinstance(record, str):
        record = record.encode("ascii", errors="replace")
    data = record.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b!r} at offset {i} is outside the graph6 range 63..126")
    n, offset = _size(data)
    body = data[offset:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise GraphFormatError(f"bit vector truncated: need {need} bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise GraphFormatError(f"{len(body) - need} trailing bytes after bit vector")
    bitstr = "".join(format(b - 63, "06b") for b in body)
    masks = [0] * n
    k = 0
    for j in range(1, n):
        col = bitstr[k:k + j]
        k += j
        if "1" in col:
            # bit i of column j is adjacency (i, j); reverse so bit i lands at 1 << i
            m = int(col[::-1], 2)
            masks[j] = m
            for i in range(j):
                if col[i] == "1":
                    masks[i] |= 1 << j
    return Graph(n, tuple(masks))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    else:
        head = bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    out = bytearray(head)
    acc = 0
    width = 0
    for j in range(1, n):
        col = g.masks[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            width += 1
            if width == 6:
                out.append(acc + 63)
                acc = width = 0
    if width:
        out.append((acc << (6 - width)) + 63)
    return out.decode("ascii")


def read_graph6(stream: TextIO) -> Iterator[Graph]:
    """Yield one graph per non-blank line."""
    for line in stream:
        line = line.strip()
        if line:
            yield parse_graph6(line)
