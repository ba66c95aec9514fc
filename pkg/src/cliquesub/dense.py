"""Dense-subset extraction: peel to a set with few nonadjacent pairs, then
shrink greedily to an exact target size.

In a graph with independence number at most a, the peel chain loses a factor
rho per step and at most a-1 steps can occur, so the terminal set has at
least rho^(a-1) * n vertices and fewer than rho*|T|^2/2 nonadjacent pairs.
Greedy max-non-degree deletion then reaches any smaller size without ever
increasing the missing-pair density, which realizes the averaging step
deterministically.
"""

from __future__ import annotations

from typing import Iterable

from .graphs import Graph, bits, vertex_mask

__all__ = [
    "peel_sequence",
    "dense_subset",
    "missing_pair_count",
    "greedy_shrink_trace",
]


def missing_pair_count(g: Graph, vertices: Iterable[int]) -> int:
    """Number of nonadjacent pairs inside the given vertex set."""
    vs = sorted(set(vertices))
    mask = vertex_mask(vs)
    adjacent = sum((g.rows[v] & mask).bit_count() for v in vs) // 2
    k = len(vs)
    return k * (k - 1) // 2 - adjacent


def _non_degree(g: Graph, v: int, mask: int, size: int) -> int:
    return size - 1 - (g.rows[v] & mask).bit_count()


def peel_sequence(g: Graph, rho: float) -> list[tuple[int, ...]]:
    """Chain V0 > V1 > ... ending at a set where every vertex has fewer than
    rho*|V_i| non-neighbors (hence < rho*|T|^2/2 nonadjacent pairs).

    Each step recurses into the non-neighborhood of the vertex with the most
    non-neighbors (ties to the lowest label), which drops the induced
    independence number by one and keeps |V_{i+1}| >= rho*|V_i|.
    """
    if not 0.0 < rho < 1.0:
        raise ValueError(f"rho={rho} outside (0,1)")
    current = tuple(range(g.n))
    chain = [current]
    while True:
        size = len(current)
        mask = vertex_mask(current)
        best_v, best_nd = -1, -1
        for v in current:
            nd = _non_degree(g, v, mask, size)
            if nd > best_nd:
                best_v, best_nd = v, nd
        if best_v < 0 or best_nd < rho * size:
            return chain
        next_mask = mask & ~g.rows[best_v] & ~(1 << best_v)
        current = tuple(bits(next_mask))
        chain.append(current)


def greedy_shrink_trace(
    g: Graph, vertices: Iterable[int]
) -> tuple[list[int], list[int]]:
    """Deletion order (max non-degree first, ties to highest label) and the
    missing-pair count at every size.

    Returns ``(order, missing)`` where ``missing[k]`` is the nonadjacent pair
    count of the set after deleting down to k vertices, and ``order[i]`` is
    the i-th deleted vertex.  Deleting the max-non-degree vertex never
    increases missing-pair density, which is asserted per step.
    """
    vs = sorted(set(vertices))
    k = len(vs)
    mask = vertex_mask(vs)
    missing = [0] * (k + 1)
    missing[k] = missing_pair_count(g, vs)
    order: list[int] = []
    current = list(vs)
    cur_missing = missing[k]
    while len(current) > 1:
        size = len(current)
        worst_v, worst_nd = -1, -1
        for v in current:
            nd = _non_degree(g, v, mask, size)
            if nd > worst_nd or (nd == worst_nd and v > worst_v):
                worst_v, worst_nd = v, nd
        prev_pairs = size * (size - 1) // 2
        new_missing = cur_missing - worst_nd
        new_pairs = (size - 1) * (size - 2) // 2
        # density monotone: missing/(C(k,2)) never increases under max deletion
        if new_pairs and new_missing * prev_pairs > cur_missing * new_pairs:
            raise AssertionError("greedy shrink increased missing-pair density")
        order.append(worst_v)
        mask &= ~(1 << worst_v)
        current.remove(worst_v)
        cur_missing = new_missing
        missing[size - 1] = cur_missing
    return order, missing


def dense_subset(g: Graph, rho: float, s: int) -> tuple[int, ...]:
    """A vertex set of size exactly ``s`` with at most rho*s^2 nonadjacent pairs.

    The caller is responsible for s <= ceil(rho^(a-1) * n) where a bounds the
    independence number; under that hypothesis the bound always holds and a
    violation is an internal error.
    """
    if not 0.0 < rho < 1.0:
        raise ValueError(f"rho={rho} outside (0,1)")
    if s < 1 or s > g.n:
        raise ValueError(f"target size s={s} out of range 1..{g.n}")
    chain = peel_sequence(g, rho)
    terminal = chain[-1]
    if len(terminal) < s:
        raise ValueError(
            f"peel terminal has {len(terminal)} vertices < s={s}; "
            f"the caller's independence bound was too small"
        )
    order, missing = greedy_shrink_trace(g, terminal)
    keep = set(terminal)
    for v in order[: len(terminal) - s]:
        keep.discard(v)
    result = tuple(sorted(keep))
    if missing[s] > rho * s * s:
        raise AssertionError(
            f"dense_subset bound violated: {missing[s]} > rho*s^2 = {rho * s * s}"
        )
    return result
