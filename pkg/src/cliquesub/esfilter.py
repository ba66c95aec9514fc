"""Independence filter: bucket vertices by a canonical superset of their
neighborhood inside a maximum independent set.

Vertices sharing a superset of size floor(d*|I|) see all their I-neighbors
inside that one small set, so the remaining (1-d)*|I| independent vertices
extend any independent subset of the bucket; with I maximum this caps the
bucket's induced independence number at d*|I|.  Pigeonhole over the at most
C(|I|, floor(d|I|)) <= (e/d)^(d|I|) possible supersets makes the largest
bucket large.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable

from .graphs import Graph, vertex_mask

__all__ = ["es_filter"]


def es_filter(
    g: Graph,
    i_set: Iterable[int],
    v1: Iterable[int],
    d: float | Fraction,
) -> tuple[int, ...]:
    """Largest canonical-superset bucket of ``v1``.

    Preconditions: ``i_set`` is independent (the caller certifies it is also
    maximum; that is what makes the independence drop sound), ``v1`` is
    disjoint from it, and every vertex of ``v1`` has at most d*|I| neighbors
    in it.  Violations raise ValueError naming the offender.
    """
    iv = sorted(set(i_set))
    imask = vertex_mask(iv)
    for v in iv:
        if g.rows[v] & imask:
            raise ValueError(f"i_set is not independent: vertex {v} has a neighbor inside")
    dfrac = Fraction(d)
    if not 0 < dfrac <= 1:
        raise ValueError(f"d={d} outside (0,1]")
    alpha = len(iv)
    cap = int(dfrac * alpha)  # floor(d*|I|)
    v1s = sorted(set(v1))
    v1mask = vertex_mask(v1s)
    if v1mask & imask:
        raise ValueError("v1 overlaps i_set")
    buckets: dict[tuple[int, ...], list[int]] = {}
    for v in v1s:
        nb = g.rows[v] & imask
        count = nb.bit_count()
        if count > dfrac * alpha:
            raise ValueError(
                f"vertex {v} has {count} neighbors in i_set, exceeding d*|I| = "
                f"{float(dfrac * alpha):g}"
            )
        members = [w for w in iv if (nb >> w) & 1]
        for w in iv:  # pad with lowest-index unused I-vertices
            if len(members) == cap:
                break
            if not (nb >> w) & 1:
                members.append(w)
        key = tuple(sorted(members))
        buckets.setdefault(key, []).append(v)
    if not buckets:
        return ()
    best_key = min(
        buckets, key=lambda k: (-len(buckets[k]), k)
    )  # largest bucket, ties to lexicographically smallest superset
    chosen = tuple(sorted(buckets[best_key]))
    # pigeonhole: |U| * (number of possible supersets) >= |v1|
    if alpha and chosen and len(chosen) * comb(alpha, cap) < len(v1s):
        raise AssertionError("bucket pigeonhole bound violated")
    return chosen
