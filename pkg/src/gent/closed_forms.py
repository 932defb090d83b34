"""Closed-form graph entropies: complete, complete multipartite, bipartite, by components."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import config
from .combinatorics import bipartition, components
from .corner import entropy_fw
from .errors import CapExceeded, ConsistencyError, InvalidInput, NotBipartite
from .graph import Graph, bits, popcount
from .prob import binary_entropy, distribution, entropy

RATIO_TOL = 1e-12
CROSS_CHECK_TOL = 1e-5


def entropy_complete(p) -> float:
    """H_k(K_n, P) = H(P)."""
    return entropy(p)


def entropy_complete_multipartite(sizes, p) -> float:
    """Entropy of the part masses; parts are consecutive vertex blocks of the given sizes."""
    p = distribution(p)
    sizes = [int(s) for s in sizes]
    if any(s < 1 for s in sizes) or sum(sizes) != p.size:
        raise InvalidInput(f"part sizes {sizes} do not partition {p.size} vertices")
    edges = np.cumsum([0] + sizes)
    return entropy([p[edges[i]:edges[i + 1]].sum() for i in range(len(sizes))])


@dataclass
class BipartiteEntropyReport:
    condition_holds: bool
    value: float
    part_a: int
    part_b: int
    partition: list[tuple[int, int]] = field(default_factory=list)  # (D_i, U_i) bitmasks
    solver_value: float | None = None

    def to_json(self) -> dict:
        return {
            "condition_holds": self.condition_holds,
            "value_bits": self.value,
            "part_a": bits(self.part_a),
            "part_b": bits(self.part_b),
            "partition": [{"D": bits(d), "U": bits(u)} for d, u in self.partition],
            "solver_value_bits": self.solver_value,
        }


def _mass(p: np.ndarray, mask: int) -> float:
    return float(sum(p[v] for v in bits(mask)))


def _best_ratio_set(g: Graph, p: np.ndarray, a_rem: int, b_rem: int) -> tuple[int, float]:
    """D within a_rem maximising P(D)/P(a_rem) * P(b_rem)/P(N(D) & b_rem); smallest mask on ties."""
    pa, pb = _mass(p, a_rem), _mass(p, b_rem)
    best_d, best_r = 0, -1.0
    members = bits(a_rem)
    for k in range(1, 1 << len(members)):
        d = sum(1 << members[i] for i in range(len(members)) if k >> i & 1)
        pd = _mass(p, d)
        pn = _mass(p, g.neighborhood(d) & b_rem)
        if pn == 0:
            ratio = np.inf if pd > 0 else 0.0
        else:
            ratio = (pd / pa) * (pb / pn)
        if ratio > best_r + RATIO_TOL or (abs(ratio - best_r) <= RATIO_TOL and d < best_d):
            best_d, best_r = d, ratio
    return best_d, best_r


def _hall_ratio_holds(g: Graph, p: np.ndarray, part_a: int, part_b: int) -> bool:
    pa, pb = _mass(p, part_a), _mass(p, part_b)
    members = bits(part_a)
    for k in range(1, 1 << len(members)):
        d = sum(1 << members[i] for i in range(len(members)) if k >> i & 1)
        if _mass(p, d) / pa > _mass(p, g.neighborhood(d)) / pb + RATIO_TOL:
            return False
    return True


def bipartite_entropy(g: Graph, p, part_a: int | None = None, cross_check: bool = True,
                      tol: float = config.DEFAULT_TOL) -> BipartiteEntropyReport:
    """Korner-Marton formula for a bipartite graph without isolated vertices.

    If P(D)/P(A) <= P(N(D))/P(B) for every D within A the entropy is h(P(A));
    otherwise A and B are peeled greedily into blocks (D_i, U_i) and the
    entropy is sum P(D_i + U_i) h(P(D_i)/P(D_i + U_i)). By default A is the
    smaller side of a BFS bipartition. With ``cross_check`` the value is
    compared against Frank-Wolfe within 1e-5.
    """
    p = distribution(p)
    if p.size != g.n:
        raise InvalidInput(f"distribution has {p.size} entries, graph has {g.n} vertices")
    if any(g.degree(v) == 0 for v in range(g.n)):
        raise InvalidInput("graph has an isolated vertex")
    limit = config.cap("bipartite_vertices")
    if g.n > limit:
        raise CapExceeded("bipartite subset enumeration", g.n, limit)
    if part_a is None:
        bp = bipartition(g)
        if bp is None:
            raise NotBipartite("graph is not bipartite")
        a, b = bp.part_a, bp.part_b
        if popcount(b) < popcount(a) or (popcount(b) == popcount(a) and b < a):
            a, b = b, a
    else:
        a, b = part_a, g.full & ~part_a
        if not (g.is_independent(a) and g.is_independent(b)):
            raise NotBipartite("given part does not induce a bipartition")
    pa = _mass(p, a)
    pb = _mass(p, b)
    holds = pa > 0 and pb > 0 and _hall_ratio_holds(g, p, a, b)
    if holds:
        report = BipartiteEntropyReport(True, binary_entropy(min(max(pa, 0.0), 1.0)), a, b)
    else:
        blocks = []
        a_rem, b_rem = a, b
        while a_rem:
            d, _ = _best_ratio_set(g, p, a_rem, b_rem) if _mass(p, a_rem) > 0 else (a_rem, 0.0)
            u = g.neighborhood(d) & b_rem
            blocks.append((d, u))
            a_rem &= ~d
            b_rem &= ~u
        if b_rem:
            # B-vertices whose mass-free neighbours were all peeled; they can share the last block
            d, u = blocks[-1]
            blocks[-1] = (d, u | b_rem)
        value = 0.0
        for d, u in blocks:
            tot = _mass(p, d | u)
            if tot > 0:
                value += tot * binary_entropy(min(max(_mass(p, d) / tot, 0.0), 1.0))
        report = BipartiteEntropyReport(False, value, a, b, blocks)
    if cross_check:
        solved = entropy_fw(g, p, tol).value
        report.solver_value = solved
        if abs(solved - report.value) > CROSS_CHECK_TOL:
            raise ConsistencyError(f"bipartite formula {report.value:.9f} vs solver {solved:.9f}")
    return report


def entropy_by_components(g: Graph, p, tol: float = config.DEFAULT_TOL) -> float:
    """Sum over components of P(V_i) * H_k(G_i, P restricted and renormalised)."""
    p = distribution(p)
    if p.size != g.n:
        raise InvalidInput(f"distribution has {p.size} entries, graph has {g.n} vertices")
    total = 0.0
    for comp in components(g):
        mass = _mass(p, comp)
        if mass <= 0:
            continue
        sub, keep = g.induced(comp)
        if sub.n == 1:
            continue
        total += mass * entropy_fw(sub, p[keep] / mass, tol).value
    return total
