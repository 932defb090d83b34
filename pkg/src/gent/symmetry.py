"""Is the uniform distribution a maximiser of graph entropy?

Maximal graph entropy is log chi_f(G), so G is *symmetric* exactly when
H_k(G, U) = log chi_f(G). Three structural criteria decide this for
bipartite graphs, perfect graphs and line graphs of regular graphs; each
verdict also carries the numeric gap log chi_f(G) - H_k(G, U) when the
solvers can reach it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import config
from .combinatorics import (
    bipartition,
    clique_number,
    has_perfect_matching_bipartite,
    hall_violator,
    max_weight_independent_set,
    maximal_cliques,
    maximum_bipartite_matching,
    regular_degree,
)
from .corner import entropy_fw
from .errors import CapExceeded, InvalidInput, NotBipartite
from .fractional import format_rational, fractional_chromatic_number, is_k_graph
from .graph import Graph, bits, complement, line_graph, popcount
from .prob import uniform

NUMERIC_TOL = 1e-4


@dataclass
class SymmetryVerdict:
    symmetric: bool | None
    criterion: str
    certificate: dict = field(default_factory=dict)
    numeric_gap: float | None = None
    ambiguous: bool = False

    def to_json(self) -> dict:
        return {
            "symmetric": self.symmetric,
            "criterion": self.criterion,
            "certificate": self.certificate,
            "numeric_gap_bits": self.numeric_gap,
            "ambiguous": self.ambiguous,
        }


def uniform_gap(g: Graph, tol: float = NUMERIC_TOL) -> float:
    """log2 chi_f(G) - H_k(G, U), with the entropy solved to tol/4."""
    chi_f = fractional_chromatic_number(g).value
    h = entropy_fw(g, uniform(g.n), tol / 4).value
    return math.log2(chi_f) - h


def _gap_or_none(g: Graph) -> float | None:
    try:
        return uniform_gap(g)
    except CapExceeded:
        return None


def numeric_symmetry_check(g: Graph, tol: float = NUMERIC_TOL) -> SymmetryVerdict:
    """Symmetric iff log chi_f(G) - H_k(G, U) <= tol."""
    if tol <= 0:
        raise InvalidInput("tolerance must be positive")
    gap = uniform_gap(g, tol)
    chi_f = fractional_chromatic_number(g).value
    return SymmetryVerdict(gap <= tol, "numeric-only", {"chi_f": format_rational(chi_f)}, gap)


# ------------------------------------------------------------ bipartite

def check_bipartite_symmetric(g: Graph) -> SymmetryVerdict:
    """A bipartite graph without isolated vertices is symmetric iff it has a perfect matching.

    The certificate is the matching (as edges) or a Hall violator D, a set
    within one side with |N(D)| < |D|.
    """
    if any(d == 0 for d in g.degrees()):
        raise InvalidInput("graph has an isolated vertex")
    bp = bipartition(g)
    if bp is None:
        raise NotBipartite("graph is not bipartite")
    matching = maximum_bipartite_matching(g, bp.part_a)
    gap = _gap_or_none(g)
    if has_perfect_matching_bipartite(g):
        edges = sorted((min(a, b), max(a, b)) for a, b in matching.items())
        return SymmetryVerdict(True, "bipartite-matching", {"matching": edges}, gap)
    d = hall_violator(g, bp.part_a, matching)
    cert = {"hall_violator": bits(d), "neighbourhood": bits(g.neighborhood(d))}
    return SymmetryVerdict(False, "bipartite-matching", cert, gap)


# ------------------------------------------------------------ perfect graphs

def _independent_table(g: Graph) -> np.ndarray:
    """Boolean array over all vertex subsets: is the subset independent?"""
    size = 1 << g.n
    ok = np.ones(size, dtype=bool)
    idx = np.arange(size, dtype=np.int64)
    for v in range(g.n):
        has_v = (idx >> v) & 1 == 1
        ok &= ~(has_v & ((idx & g.adj[v]) != 0))
    return ok


def _perfect_by_definition(g: Graph) -> bool:
    """chi(H) = omega(H) for every induced subgraph H, by subset DP."""
    n = g.n
    size = 1 << n
    indep = _independent_table(g)
    omega = [0] * size
    chi = [0] * size
    independent_sets = [s for s in range(1, size) if indep[s]]
    by_low: dict[int, list[int]] = {v: [] for v in range(n)}
    for s in independent_sets:
        by_low[(s & -s).bit_length() - 1].append(s)
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        omega[s] = max(omega[s ^ low], 1 + omega[s & g.adj[v]])
        # some colour class contains the lowest vertex
        best = n
        for ind in by_low[v]:
            if ind & s == ind:
                c = chi[s ^ ind] + 1
                if c < best:
                    best = c
        chi[s] = best
        if chi[s] != omega[s]:
            return False
    return True


def _has_odd_hole(g: Graph) -> bool:
    """Induced cycle of odd length >= 5, found by growing chordless paths from their least vertex."""
    adj = g.adj

    def grow(start: int, path: list[int], inside: int) -> bool:
        last = path[-1]
        for u in bits(adj[last]):
            if u <= start or inside >> u & 1:
                continue
            # u may touch only the path's last vertex, except the start when closing
            touches = adj[u] & inside & ~(1 << last)
            if touches & ~(1 << start):
                continue
            if touches:
                if len(path) + 1 >= 5 and (len(path) + 1) % 2 == 1:
                    return True
                continue
            if grow(start, path + [u], inside | 1 << u):
                return True
        return False

    for s in range(g.n):
        for u in bits(adj[s]):
            if u > s and grow(s, [s, u], 1 << s | 1 << u):
                return True
    return False


def is_perfect(g: Graph) -> bool:
    """Perfection test.

    Up to ``perfect_definition_vertices`` (12) vertices the definition is
    checked over every induced subgraph; up to ``perfect_vertices`` (16) the
    graph and its complement are searched for odd holes instead.
    """
    if g.n <= config.cap("perfect_definition_vertices"):
        return _perfect_by_definition(g)
    limit = config.cap("perfect_vertices")
    if g.n > limit:
        raise CapExceeded("perfection test", g.n, limit)
    return not (_has_odd_hole(g) or _has_odd_hole(complement(g)))


def max_clique_partition(g: Graph) -> list[int] | None:
    """Partition V into cliques of size omega(G) by exact-cover backtracking, or None."""
    limit = config.cap("clique_partition_vertices")
    if g.n > limit:
        raise CapExceeded("clique partition search", g.n, limit)
    if g.n == 0:
        return []
    omega = clique_number(g)
    if g.n % omega:
        return None
    cliques = [c for c in maximal_cliques(g) if popcount(c) == omega]
    containing: dict[int, list[int]] = {v: [c for c in cliques if c >> v & 1] for v in range(g.n)}
    chosen: list[int] = []

    def cover(done: int) -> bool:
        if done == g.full:
            return True
        rest = g.full & ~done
        v = (rest & -rest).bit_length() - 1
        for c in containing[v]:
            if not c & done:
                chosen.append(c)
                if cover(done | c):
                    return True
                chosen.pop()
        return False

    return sorted(chosen) if cover(0) else None


def perfect_proof_bound(n: int, s: int, omega: int) -> float:
    """Entropy bound from the feasible point t on S, (1-t)/(omega-1) elsewhere, t = |S|/n."""
    t = s / n
    if omega == 1:
        return 0.0
    value = -t * math.log2(t)
    if t < 1:
        value -= (1 - t) * math.log2((1 - t) / (omega - 1))
    return value


def check_perfect_symmetric(g: Graph) -> SymmetryVerdict:
    """A perfect graph is symmetric iff V splits into disjoint cliques of size omega.

    Without such a partition, a maximum independent set S has |S| > n/omega
    and the certificate records it together with the entropy bound that it
    yields (strictly below log omega). If the maximum cliques cover V with
    overlaps but admit no partition, ``ambiguous`` is set.
    """
    if not is_perfect(g):
        raise InvalidInput("graph is not perfect")
    partition = max_clique_partition(g)
    gap = _gap_or_none(g)
    omega = clique_number(g)
    if partition is not None:
        return SymmetryVerdict(True, "perfect-clique-partition",
                               {"cliques": [bits(c) for c in partition], "omega": omega}, gap)
    s_mask, _ = max_weight_independent_set(g, [1.0] * g.n)
    s = popcount(s_mask)
    covered = 0
    for c in maximal_cliques(g):
        if popcount(c) == omega:
            covered |= c
    cert = {
        "independent_set": bits(s_mask),
        "omega": omega,
        "size_exceeds": str(Fraction(g.n, omega)),
        "entropy_bound_bits": perfect_proof_bound(g.n, s, omega),
    }
    return SymmetryVerdict(False, "perfect-clique-partition", cert, gap,
                           ambiguous=covered == g.full)


# ------------------------------------------------------------ line graphs

def check_line_graph_symmetric(g1: Graph) -> SymmetryVerdict:
    """Verdict on L(g1) for k-regular g1, k >= 3: symmetric iff g1 is a k-graph.

    The certificate is the point x* = 1/k on every edge or an odd set U with
    |delta(U)| < k.
    """
    k = regular_degree(g1)
    if k is None:
        raise InvalidInput("graph is not regular")
    if k < 3:
        raise InvalidInput(f"degree {k} is below 3")
    ok, u = is_k_graph(g1, k)
    lg, _ = line_graph(g1)
    gap = _gap_or_none(lg)
    if ok:
        return SymmetryVerdict(True, "k-graph-line", {"k": k, "x_star": f"1/{k}"}, gap)
    return SymmetryVerdict(False, "k-graph-line", {"k": k, "odd_set": bits(u)}, gap)
