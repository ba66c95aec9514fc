"""Graph file formats: plain edge lists and graph6 byte encoding.

Edge-list format: optional header line ``n <count>`` declaring the vertex
count, then one ``u v`` pair per line (0-indexed).  graph6 follows the
standard 6-bit byte encoding with upper-triangle bits in column-major
order.  Both formats round-trip exactly.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import Union

from .graphs import Graph, new_graph

__all__ = ["ParseError", "read_graph", "write_graph", "to_graph6", "from_graph6"]

_GRAPH6_HEADER = ">>graph6<<"


class ParseError(ValueError):
    """Malformed graph input; carries a line or byte position."""

    def __init__(self, message: str, *, line: int | None = None, byte: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if byte is not None:
            where.append(f"byte {byte}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(message + suffix)
        self.line = line
        self.byte = byte


def _parse_edge_list(text: str, n: int | None) -> Graph:
    declared = n
    edges = []
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if lineno != 1 and edges:
                raise ParseError("header line after edges", line=lineno)
            if len(parts) != 2:
                raise ParseError("header must be 'n <count>'", line=lineno)
            try:
                declared = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", line=lineno) from None
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex in {line!r}", line=lineno)
        if u == v:
            raise ParseError(f"loop edge ({u},{u})", line=lineno)
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    if declared is None:
        declared = max_seen + 1
    if max_seen >= declared:
        raise ParseError(f"endpoint {max_seen} exceeds declared vertex count {declared}")
    return new_graph(declared, edges)


def _emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _g6_encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126]) + bytes(((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def _g6_decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, bytes consumed)."""
    if not data:
        raise ParseError("empty graph6 data", byte=0)
    if data[0] != 126:
        n = data[0] - 63
        if n < 0:
            raise ParseError(f"bad graph6 size byte {data[0]}", byte=0)
        return n, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated graph6 size", byte=len(data))
        vals = [b - 63 for b in data[2:8]]
        if any(v < 0 or v > 63 for v in vals):
            raise ParseError("bad graph6 size byte", byte=2)
        n = 0
        for v in vals:
            n = (n << 6) | v
        return n, 8
    if len(data) < 4:
        raise ParseError("truncated graph6 size", byte=len(data))
    vals = [b - 63 for b in data[1:4]]
    if any(v < 0 or v > 63 for v in vals):
        raise ParseError("bad graph6 size byte", byte=1)
    return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (no trailing newline)."""
    out = bytearray(_g6_encode_n(g.n))
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        row = g.rows[v]
        for u in range(v):
            acc = (acc << 1) | ((row >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc, nbits = 0, 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string (optional ``>>graph6<<`` header allowed)."""
    s = text.strip()
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER) :]
    data = s.encode("ascii", errors="strict")
    n, off = _g6_decode_n(data)
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    body = data[off:]
    if len(body) != need:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}",
            byte=off + min(len(body), need),
        )
    rows = [0] * n
    idx = 0
    for b in body:
        val = b - 63
        if val < 0 or val > 63:
            raise ParseError(f"bad graph6 byte {b}", byte=off + idx // 6)
        for k in range(5, -1, -1):
            if idx >= npairs:
                if (val >> k) & 1:
                    raise ParseError("nonzero padding bits", byte=off + idx // 6)
                continue
            if (val >> k) & 1:
                # column-major upper triangle: pair index -> (u, v)
                v = _col_of(idx)
                u = idx - v * (v - 1) // 2
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    return Graph(n, rows)


def _col_of(idx: int) -> int:
    # smallest v with v(v+1)/2 > idx, i.e. the column of pair index idx
    v = int(((8 * idx + 1) ** 0.5 - 1) / 2) + 1
    while v * (v - 1) // 2 > idx:
        v -= 1
    while (v + 1) * v // 2 <= idx:
        v += 1
    return v


PathOrFile = Union[str, Path, io.TextIOBase]


def read_graph(source: PathOrFile, fmt: str = "edge-list", n: int | None = None) -> Graph:
    """Read a graph from a path or text stream in the given format."""
    if fmt not in ("edge-list", "graph6"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
    else:
        text = source.read()
    if fmt == "edge-list":
        return _parse_edge_list(text, n)
    return from_graph6(text)


def write_graph(g: Graph, dest: PathOrFile, fmt: str = "edge-list") -> None:
    """Write a graph to a path or text stream; inverse of :func:`read_graph`."""
    if fmt == "edge-list":
        payload = _emit_edge_list(g)
    elif fmt == "graph6":
        payload = to_graph6(g) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(payload)
    else:
        dest.write(payload)
