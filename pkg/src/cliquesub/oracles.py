"""Exact small-scale oracles: independence/clique/chromatic numbers, tiny
exact subdivision search, and the counting-based subdivision upper bound.

Every oracle returns a tagged result; downstream code must check the tag
before treating a value as exact.  Budgets are node-expansion counts, not
wall time, so results are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .graphs import Graph, bits, complement, edge_density
from .subdivision import SubdivisionCertificate

__all__ = [
    "Tagged",
    "ColoringResult",
    "SigmaSearchResult",
    "SigmaUpperCert",
    "GraphStats",
    "alpha_exact",
    "greedy_clique_lower",
    "omega_exact",
    "chi_exact",
    "dsatur_upper",
    "sigma_exact_tiny",
    "sigma_exact_value",
    "sigma_upper_cert",
    "turan_density_bound",
    "graph_stats",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 2_000_000

TAG_EXACT = "exact"
TAG_HEURISTIC = "heuristic"
TAG_EXCEEDED = "exceeded"


@dataclass(frozen=True)
class Tagged:
    """An oracle value with its witness and exactness tag."""

    value: int
    witness: tuple[int, ...]
    tag: str
    nodes: int = 0

    @property
    def exact(self) -> bool:
        return self.tag == TAG_EXACT


def _greedy_clique(rows: tuple[int, ...], n: int, cand: int) -> int:
    """Greedy max-degree clique inside ``cand``; returns a vertex mask."""
    clique = 0
    while cand:
        best_v, best_deg = -1, -1
        for v in bits(cand):
            dv = (rows[v] & cand).bit_count()
            if dv > best_deg:
                best_v, best_deg = v, dv
        clique |= 1 << best_v
        cand &= rows[best_v]
    return clique


def _improve_swaps(rows: tuple[int, ...], n: int, clique: int, full: int) -> int:
    """(1,2)-swap local search: drop one clique vertex, add two outsiders."""
    improved = True
    while improved:
        improved = False
        for v in bits(clique):
            rest = clique & ~(1 << v)
            # candidates adjacent to every remaining clique vertex
            cand = full & ~clique
            for w in bits(rest):
                cand &= rows[w]
            cand &= ~(1 << v)
            for a in bits(cand):
                second = cand & rows[a]
                if second:
                    b = (second & -second).bit_length() - 1
                    clique = rest | (1 << a) | (1 << b)
                    improved = True
                    break
            if improved:
                break
    return clique


def _max_clique_core(rows: tuple[int, ...], n: int, budget: int) -> Tagged:
    """Branch-and-bound maximum clique with greedy-coloring pruning."""
    full = (1 << n) - 1
    if n == 0:
        return Tagged(0, (), TAG_EXACT, 0)
    incumbent = _improve_swaps(rows, n, _greedy_clique(rows, n, full), full)
    best_size = incumbent.bit_count()
    best_mask = incumbent
    nodes = 0
    exhausted = True

    def color_sort(cand: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        colors: list[int] = []
        uncolored = cand
        c = 0
        while uncolored:
            c += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append(v)
                colors.append(c)
                avail &= ~rows[v]
                avail ^= low
                uncolored ^= low
        return order, colors

    def expand(rmask: int, rsize: int, cand: int) -> None:
        nonlocal best_size, best_mask, nodes, exhausted
        nodes += 1
        if nodes > budget:
            exhausted = False
            return
        order, colors = color_sort(cand)
        prefix = 0
        prefixes = []
        for v in order:
            prefixes.append(prefix)
            prefix |= 1 << v
        for i in range(len(order) - 1, -1, -1):
            if not exhausted:
                return
            if rsize + colors[i] <= best_size:
                return
            v = order[i]
            new_cand = prefixes[i] & rows[v]
            if rsize + 1 > best_size:
                best_size = rsize + 1
                best_mask = rmask | (1 << v)
            if new_cand:
                expand(rmask | (1 << v), rsize + 1, new_cand)

    expand(0, 0, full)
    tag = TAG_EXACT if exhausted else TAG_HEURISTIC
    return Tagged(best_size, tuple(bits(best_mask)), tag, nodes)


def greedy_clique_lower(g: Graph) -> Tagged:
    """Cheap clique witness; always a sound chromatic lower bound."""
    mask = _greedy_clique(g.rows, g.n, g.full_mask()) if g.n else 0
    mask = _improve_swaps(g.rows, g.n, mask, g.full_mask()) if mask else mask
    return Tagged(mask.bit_count(), tuple(bits(mask)), TAG_HEURISTIC)


def alpha_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> Tagged:
    """Independence number with witness; heuristic lower bound on budget exhaustion."""
    return _max_clique_core(complement(g).rows, g.n, budget)


def omega_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> Tagged:
    """Clique number with witness; independence oracle applied to the complement."""
    return _max_clique_core(g.rows, g.n, budget)


def dsatur_upper(g: Graph) -> tuple[int, tuple[int, ...]]:
    """DSATUR coloring: proper, count >= chi(g); exact on bipartite inputs."""
    n = g.n
    if n == 0:
        return 0, ()
    color = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    used = 0
    for _ in range(n):
        best = -1
        key = (-1, -1, 0)
        for v in range(n):
            if color[v] >= 0:
                continue
            cand = (len(neighbor_colors[v]), g.degree(v), -v)
            if cand > key:
                key = cand
                best = v
        c = 0
        while c in neighbor_colors[best]:
            c += 1
        color[best] = c
        used = max(used, c + 1)
        for w in g.neighbors(best):
            neighbor_colors[w].add(c)
    return used, tuple(color)


@dataclass(frozen=True)
class ColoringResult:
    chi_lower: int
    chi_upper: int
    coloring: tuple[int, ...]
    tag: str
    nodes: int = 0

    @property
    def exact(self) -> bool:
        return self.tag == TAG_EXACT and self.chi_lower == self.chi_upper

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError("chromatic number not exact; check the tag")
        return self.chi_lower


def _try_k_coloring(g: Graph, k: int, budget: list[int]) -> Optional[tuple[int, ...]] | str:
    """Backtracking k-colorability with dynamic saturation order.

    Returns a coloring, None if proven impossible, or "exceeded".
    """
    n = g.n
    color = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]

    def pick() -> int:
        best, key = -1, (-1, -1, 0)
        for v in range(n):
            if color[v] < 0:
                cand = (len(neighbor_colors[v]), g.degree(v), -v)
                if cand > key:
                    key, best = cand, v
        return best

    def assign(depth: int, max_used: int):
        if depth == n:
            return tuple(color)
        v = pick()
        if len(neighbor_colors[v]) >= k:
            return None
        # allow at most one brand-new color index (class symmetry breaking)
        limit = min(k, max_used + 1)
        for c in range(limit):
            if c in neighbor_colors[v]:
                continue
            budget[0] -= 1
            if budget[0] < 0:
                return "exceeded"
            color[v] = c
            added = [w for w in g.neighbors(v) if c not in neighbor_colors[w]]
            for w in added:
                neighbor_colors[w].add(c)
            res = assign(depth + 1, max(max_used, c + 1))
            for w in added:
                neighbor_colors[w].discard(c)
            color[v] = -1
            if res is not None:
                return res
        return None

    return assign(0, 0)


def chi_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> ColoringResult:
    """Exact chromatic number for small graphs (intended n <= ~20).

    Proves optimality by exhausting (k-1)-colorability; on budget
    exhaustion returns a flagged [chi_lower, chi_upper] interval.
    """
    n = g.n
    if n == 0:
        return ColoringResult(0, 0, (), TAG_EXACT)
    ub, coloring = dsatur_upper(g)
    clique = _max_clique_core(g.rows, n, min(budget, 200_000))
    lb = clique.value
    spent = [budget]
    k = lb
    while k < ub:
        res = _try_k_coloring(g, k, spent)
        if res == "exceeded":
            return ColoringResult(k, ub, coloring, TAG_EXCEEDED, budget - spent[0])
        if res is not None:
            return ColoringResult(k, k, res, TAG_EXACT, budget - spent[0])
        k += 1
    return ColoringResult(ub, ub, coloring, TAG_EXACT, budget - spent[0])


# ---------------------------------------------------------------------------
# exact subdivision search at tiny scale


@dataclass(frozen=True)
class SigmaSearchResult:
    status: str  # "yes" | "no" | "exceeded"
    certificate: Optional[SubdivisionCertificate] = None
    nodes: int = 0


def _paths_fixed_length(g: Graph, u: int, v: int, avail: int, length: int):
    """Yield simple u-v paths with exactly ``length`` edges, interiors in avail,
    in lexicographic interior order."""
    interior_len = length - 1

    def extend(prev: int, path: list[int], remaining: int, used: int):
        if remaining == 0:
            if g.has_edge(prev, v):
                yield tuple(path) + (v,)
            return
        cand = g.rows[prev] & avail & ~used
        for w in bits(cand):
            path.append(w)
            yield from extend(w, path, remaining - 1, used | (1 << w))
            path.pop()

    yield from extend(u, [u], interior_len, 0)


def sigma_exact_tiny(g: Graph, t: int, budget: int = DEFAULT_BUDGET) -> SigmaSearchResult:
    """Decide whether g contains a t-clique subdivision (intended n <= ~12).

    Positive answers carry a checkable certificate; negative answers mean
    the search over branch sets and path packings was exhausted.
    """
    if t < 1:
        raise ValueError("subdivision order must be >= 1")
    n = g.n
    if t > n:
        return SigmaSearchResult("no")
    if t == 1:
        cert = SubdivisionCertificate(branch=(0,), paths={})
        return SigmaSearchResult("yes", cert)
    # a branch vertex of K_t needs degree >= t-1
    eligible = [v for v in range(n) if g.degree(v) >= t - 1]
    if len(eligible) < t:
        return SigmaSearchResult("no")
    eligible.sort(key=lambda v: (-g.degree(v), v))
    nodes = 0

    def pack(pairs: list[tuple[int, int]], idx: int, avail: int, chosen: dict):
        nonlocal nodes
        if idx == len(pairs):
            return True
        u, v = pairs[idx]
        max_len = avail.bit_count() + 1
        for length in range(2, max_len + 1):
            for path in _paths_fixed_length(g, u, v, avail, length):
                nodes += 1
                if nodes > budget:
                    return "exceeded"
                interior = 0
                for w in path[1:-1]:
                    interior |= 1 << w
                chosen[(u, v)] = path
                res = pack(pairs, idx + 1, avail & ~interior, chosen)
                if res is True or res == "exceeded":
                    return res
                del chosen[(u, v)]
        return False

    full = g.full_mask()
    for S in combinations(eligible, t):
        nodes += 1
        if nodes > budget:
            return SigmaSearchResult("exceeded", nodes=nodes)
        smask = 0
        for v in S:
            smask |= 1 << v
        pairs = [
            (a, b)
            for a, b in combinations(sorted(S), 2)
            if not g.has_edge(a, b)
        ]
        chosen: dict = {}
        res = pack(pairs, 0, full & ~smask, chosen)
        if res == "exceeded":
            return SigmaSearchResult("exceeded", nodes=nodes)
        if res is True:
            cert = SubdivisionCertificate(
                branch=tuple(sorted(S)),
                paths={p: chosen[p] for p in sorted(chosen)},
            )
            return SigmaSearchResult("yes", cert, nodes)
    return SigmaSearchResult("no", nodes=nodes)


def sigma_exact_value(
    g: Graph, budget: int = DEFAULT_BUDGET
) -> tuple[Tagged, Optional[SubdivisionCertificate]]:
    """Largest certified subdivision order, scanning t upward until refuted."""
    if g.n == 0:
        return Tagged(0, (), TAG_EXACT), None
    best = 1
    best_cert = SubdivisionCertificate(branch=(0,), paths={})
    cap = max(g.degree(v) for v in range(g.n)) + 1 if g.n else 0
    spent = 0
    for t in range(2, min(g.n, cap) + 1):
        res = sigma_exact_tiny(g, t, budget - spent)
        spent += res.nodes
        if res.status == "exceeded":
            return Tagged(best, best_cert.branch, TAG_EXCEEDED, spent), best_cert
        if res.status == "no":
            return Tagged(best, best_cert.branch, TAG_EXACT, spent), best_cert
        best, best_cert = t, res.certificate
    return Tagged(best, best_cert.branch, TAG_EXACT, spent), best_cert


# ---------------------------------------------------------------------------
# counting-based upper certificate and the Turan density floor


@dataclass(frozen=True)
class SigmaUpperCert:
    """Witness that sigma(g) < t: every t-subset spans >= t(t-w)/(2w)
    nonadjacent pairs (complement Turan with clique number w), and each
    such pair consumes a private interior vertex, forcing > n vertices."""

    t: int
    omega_used: int
    forced_internal: int
    total_required: int
    n: int

    def explain(self) -> str:
        return (
            f"t={self.t}, omega={self.omega_used}: {self.t} branch vertices + "
            f"{self.forced_internal} forced interior vertices = "
            f"{self.total_required} > n={self.n}"
        )


def sigma_upper_cert(g: Graph, omega: Tagged | int) -> Optional[SigmaUpperCert]:
    """Smallest certified t with sigma(g) < t, or None if no t <= n certifies.

    Requires an exact clique number; a Tagged value must carry the exact tag.
    """
    if isinstance(omega, Tagged):
        if not omega.exact:
            raise ValueError("sigma_upper_cert needs an exact clique number")
        w = omega.value
    else:
        w = int(omega)
    n = g.n
    if w < 1 or w > n:
        raise ValueError(f"clique number {w} out of range for n={n}")
    for t in range(w + 1, n + 1):
        forced = max(0, -((-t * (t - w)) // (2 * w)))
        if t + forced > n:
            return SigmaUpperCert(t, w, forced, t + forced, n)
    return None


def turan_density_bound(n: int, alpha: int) -> tuple[Fraction, Fraction]:
    """Minimum edge density forced by independence number <= alpha.

    Returns ``(exact, simplified)`` where exact is (n/alpha - 1)/(n - 1)
    and simplified is the weaker 1/(2*alpha) floor.
    """
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    if 2 * alpha > n:
        raise ValueError(f"alpha={alpha} > n/2 with n={n}: bound hypothesis fails")
    if n <= 1:
        raise ValueError("need n >= 2")
    exact = Fraction(n - alpha, alpha * (n - 1))
    return exact, Fraction(1, 2 * alpha)


# ---------------------------------------------------------------------------
# aggregated stats


@dataclass
class GraphStats:
    n: int
    m: int
    density: Fraction
    alpha: Optional[Tagged] = None
    omega: Optional[Tagged] = None
    chi: Optional[ColoringResult] = None
    dsatur: Optional[int] = None
    notes: list[str] = field(default_factory=list)


def graph_stats(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    with_chi: bool | None = None,
) -> GraphStats:
    """Oracle bounds for a graph; chi search only at small n unless forced."""
    stats = GraphStats(n=g.n, m=g.m, density=edge_density(g).fraction)
    stats.alpha = alpha_exact(g, budget)
    stats.omega = omega_exact(g, budget)
    k, _ = dsatur_upper(g)
    stats.dsatur = k
    if with_chi is None:
        with_chi = g.n <= 20
    if with_chi:
        stats.chi = chi_exact(g, budget)
    if stats.alpha.exact and stats.omega.exact:
        # consistency: omega <= dsatur and n <= alpha * dsatur
        if stats.omega.value > stats.dsatur:
            stats.notes.append("omega exceeds dsatur bound (bug)")
        if stats.alpha.value * stats.dsatur < g.n:
            stats.notes.append("covering bound violated (bug)")
    return stats


def chi_lower_from_alpha(n: int, alpha: Tagged) -> tuple[int, str]:
    """Sound chromatic lower bound: ceil(n/alpha) when alpha is exact."""
    if alpha.exact:
        return -(-n // alpha.value), TAG_EXACT
    raise ValueError("ceil(n/alpha) is only a valid chi lower bound for exact alpha")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)
