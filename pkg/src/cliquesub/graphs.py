"""Immutable bitset graphs: constructors, induced-subgraph algebra, G(n,p)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Graph",
    "Density",
    "new_graph",
    "edge_density",
    "complement",
    "induced",
    "gen_gnp",
    "bits",
    "vertex_mask",
]

# Full symmetry validation is O(n^2); skip it above this size (constructors
# below produce symmetric rows by construction).
_VALIDATE_LIMIT = 512


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Adjacency is stored as one Python int per vertex (bit v of ``rows[u]``
    set iff uv is an edge), so common-neighbor counts are word-parallel
    popcounts.  Instances are immutable and safe to share.
    """

    __slots__ = ("n", "rows", "m", "_mat")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        self.n = n
        self.rows = tuple(rows)
        for v, row in enumerate(self.rows):
            if row >> n:
                raise ValueError(f"row {v} has bits beyond vertex range")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        if n <= _VALIDATE_LIMIT:
            for u in range(n):
                for v in bits(self.rows[u]):
                    if not (self.rows[v] >> u) & 1:
                        raise ValueError(f"adjacency not symmetric at ({u},{v})")
        self.m = sum(r.bit_count() for r in self.rows) // 2
        self._mat = None

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.rows[v])

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield (u, v)
                row >>= 1
                v += 1

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def bool_matrix(self) -> np.ndarray:
        """Dense n x n boolean adjacency matrix (cached)."""
        if self._mat is None:
            n = self.n
            nbytes = (n + 7) // 8
            buf = bytearray(n * nbytes)
            for v, row in enumerate(self.rows):
                buf[v * nbytes : (v + 1) * nbytes] = row.to_bytes(nbytes, "little")
            arr = np.frombuffer(bytes(buf), dtype=np.uint8).reshape(n, nbytes)
            mat = np.unpackbits(arr, axis=1, bitorder="little", count=n)
            self._mat = mat.astype(bool)
            self._mat.setflags(write=False)
        return self._mat

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Density:
    """Edge density |E| / C(n,2), carried exactly as a rational."""

    fraction: Fraction

    @property
    def value(self) -> float:
        return float(self.fraction)

    def __float__(self) -> float:
        return float(self.fraction)


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; edges are deduplicated and symmetrized."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range: ({u},{v}) with n={n}")
        if u == v:
            raise ValueError(f"loop edge ({u},{u}) not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def edge_density(g: Graph) -> Density:
    if g.n <= 1:
        return Density(Fraction(0))
    return Density(Fraction(g.m, g.n * (g.n - 1) // 2))


def complement(g: Graph) -> Graph:
    full = g.full_mask()
    rows = [(full ^ row) & ~(1 << v) for v, row in enumerate(g.rows)]
    return Graph(g.n, rows)


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``s``.

    Returns ``(h, mapping)`` where ``mapping[i]`` is the vertex of ``g``
    that vertex ``i`` of ``h`` came from (ascending label order).
    """
    sel = sorted(set(s))
    for v in sel:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    k = len(sel)
    if k > 256:
        mat = g.bool_matrix()[np.ix_(sel, sel)]
        packed = np.packbits(mat, axis=1, bitorder="little")
        rows = [int.from_bytes(packed[i].tobytes(), "little") for i in range(k)]
    else:
        rows = [0] * k
        for i, u in enumerate(sel):
            ru = g.rows[u]
            acc = 0
            for j, v in enumerate(sel):
                acc |= ((ru >> v) & 1) << j
            rows[i] = acc
    return Graph(k, rows), tuple(sel)


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n,p); deterministic for a given 64-bit seed."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability p={p} outside [0,1]")
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    rng = np.random.Generator(np.random.PCG64(seed))
    mat = np.zeros((n, n), dtype=bool)
    for i in range(n - 1):
        mat[i, i + 1 :] = rng.random(n - 1 - i) < p
    mat |= mat.T
    packed = np.packbits(mat, axis=1, bitorder="little")
    rows = [int.from_bytes(packed[i].tobytes(), "little") for i in range(n)]
    return Graph(n, rows)
