"""Independent sets, cliques, matchings, cuts and connectivity."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from . import config
from .errors import CapExceeded, InvalidInput, NotBipartite
from .graph import Graph, bits, complement, popcount


def _check_mis_cap(g: Graph, cap: int | None):
    limit = config.cap("mis_vertices", cap)
    if g.n > limit:
        raise CapExceeded("independent set enumeration", g.n, limit)


def _maximal_cliques(adj: tuple[int, ...], n: int) -> list[int]:
    """Bron-Kerbosch with Tomita pivoting on bitmask adjacency."""
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        # pivot maximises |P & N(u)|
        pux = p | x
        best, pivot = -1, 0
        while pux:
            low = pux & -pux
            u = low.bit_length() - 1
            c = popcount(p & adj[u])
            if c > best:
                best, pivot = c, u
            pux ^= low
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & adj[v], x & adj[v])
            p &= ~low
            x |= low
            cand ^= low

    expand(0, (1 << n) - 1, 0)
    return sorted(out)


@lru_cache(maxsize=256)
def _mis_cached(g: Graph) -> tuple[int, ...]:
    return tuple(_maximal_cliques(complement(g).adj, g.n))


def maximal_independent_sets(g: Graph, cap: int | None = None) -> list[int]:
    """All inclusion-maximal independent sets as bitmasks, sorted by value."""
    _check_mis_cap(g, cap)
    return list(_mis_cached(g))


@lru_cache(maxsize=256)
def _cliques_cached(g: Graph) -> tuple[int, ...]:
    return tuple(_maximal_cliques(g.adj, g.n))


def maximal_cliques(g: Graph, cap: int | None = None) -> list[int]:
    _check_mis_cap(g, cap)
    return list(_cliques_cached(g))


def max_weight_independent_set(g: Graph, w, cap: int | None = None) -> tuple[int, float]:
    """Exact maximum-weight independent set by branch and bound.

    Vertices with non-positive weight are never included. The bound is the
    sum over a greedy clique cover of the candidates of the largest weight in
    each clique.
    """
    _check_mis_cap(g, cap)
    w = [float(x) for x in w]
    if len(w) != g.n:
        raise InvalidInput(f"weight vector has length {len(w)}, expected {g.n}")
    if any(x != x or x in (float("inf"), float("-inf")) for x in w):
        raise InvalidInput("weights must be finite")
    adj = g.adj
    # heaviest first keeps the incumbent strong early
    order = sorted((v for v in range(g.n) if w[v] > 0), key=lambda v: (-w[v], v))
    best_mask, best_weight = 0, 0.0

    def bound(cand: int) -> float:
        total = 0.0
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            clique = low
            top = w[v]
            others = rest & adj[v]
            while others:
                lo = others & -others
                u = lo.bit_length() - 1
                if adj[u] & clique == clique:
                    clique |= lo
                    top = max(top, w[u])
                others ^= lo
            total += top
            rest &= ~clique
        return total

    rank = {v: i for i, v in enumerate(order)}

    def first(cand: int) -> int:
        return min(bits(cand), key=rank.__getitem__)

    def search(chosen: int, weight: float, cand: int):
        nonlocal best_mask, best_weight
        if not cand:
            if weight > best_weight:
                best_mask, best_weight = chosen, weight
            return
        if weight + bound(cand) <= best_weight:
            return
        v = first(cand)
        search(chosen | 1 << v, weight + w[v], cand & ~adj[v] & ~(1 << v))
        search(chosen, weight, cand & ~(1 << v))

    search(0, 0.0, sum(1 << v for v in order))
    return best_mask, best_weight


def independence_number(g: Graph) -> int:
    mask, _ = max_weight_independent_set(g, [1.0] * g.n)
    return popcount(mask)


def clique_number(g: Graph) -> int:
    return independence_number(complement(g))


# ---------------------------------------------------------------- bipartite

@dataclass(frozen=True)
class BipartitionWitness:
    part_a: int
    part_b: int


def bipartition(g: Graph) -> BipartitionWitness | None:
    """BFS 2-colouring; None when the graph has an odd cycle."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    a = sum(1 << v for v in range(g.n) if side[v] == 0)
    return BipartitionWitness(a, g.full & ~a)


def maximum_bipartite_matching(g: Graph, part_a: int) -> dict[int, int]:
    """Maximum matching by augmenting paths; maps each matched A-vertex to its partner."""
    match_b: dict[int, int] = {}

    def augment(v: int, seen: set[int]) -> bool:
        for u in g.neighbors(v):
            if u in seen:
                continue
            seen.add(u)
            if u not in match_b or augment(match_b[u], seen):
                match_b[u] = v
                return True
        return False

    for v in bits(part_a):
        augment(v, set())
    return {v: u for u, v in match_b.items()}


def _require_bipartite(g: Graph) -> BipartitionWitness:
    bp = bipartition(g)
    if bp is None:
        raise NotBipartite("graph is not bipartite")
    return bp


def has_perfect_matching_bipartite(g: Graph) -> bool:
    bp = _require_bipartite(g)
    if g.n % 2:
        return False
    return len(maximum_bipartite_matching(g, bp.part_a)) == g.n // 2


def hall_violator(g: Graph, part_a: int, matching: dict[int, int]) -> int:
    """A set D within one side with |N(D)| < |D|, found from a maximum matching.

    Uses the side with more vertices when the parts are unbalanced; otherwise
    an unmatched A-vertex and everything reachable by alternating paths.
    """
    part_b = g.full & ~part_a
    if popcount(part_a) != popcount(part_b):
        return part_a if popcount(part_a) > popcount(part_b) else part_b
    matched_b = {u: v for v, u in matching.items()}
    free = [v for v in bits(part_a) if v not in matching]
    if not free:
        raise InvalidInput("matching is perfect; no Hall violator exists")
    reach_a = {free[0]}
    queue = deque([free[0]])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            w = matched_b.get(u)
            if w is not None and w not in reach_a:
                reach_a.add(w)
                queue.append(w)
    return sum(1 << v for v in reach_a)


# ---------------------------------------------------------------- cuts

def boundary(g: Graph, u: int) -> int:
    """|delta(U)|: number of edges with exactly one end in U."""
    outside = g.full & ~u
    return sum(popcount(g.adj[v] & outside) for v in bits(u))


def induced_edges(g: Graph, u: int) -> int:
    """|E[U]|: number of edges with both ends in U."""
    return sum(popcount(g.adj[v] & u) for v in bits(u)) // 2


def is_k_regular(g: Graph, k: int) -> bool:
    return all(d == k for d in g.degrees())


def regular_degree(g: Graph) -> int | None:
    degs = set(g.degrees())
    return degs.pop() if len(degs) == 1 else None


def components(g: Graph) -> list[int]:
    """Connected components as bitmasks, sorted by value."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = g.neighborhood(frontier) & ~comp
            comp |= nxt
            frontier = nxt
        seen |= comp
        out.append(comp)
    return sorted(out)


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Bridges ``(u, v)``, ``u < v``, via DFS low-link."""
    disc = [-1] * g.n
    low = [0] * g.n
    out = []
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    continue
                if disc[u] < 0:
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    out.append((min(v, parent), max(v, parent)))
    return sorted(out)
