"""Exact rational LP, fractional (edge) chromatic numbers, matching polytope.

Rationals are :class:`fractions.Fraction`; the simplex never touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

import numpy as np

from . import config
from .combinatorics import maximal_cliques, maximal_independent_sets
from .errors import CapExceeded, ConsistencyError, InvalidInput
from .graph import Graph, bits, line_graph

Rational = Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def rational(x) -> Fraction:
    """Exact conversion; floats keep their binary value."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    return Fraction(float(x))


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass
class LpProblem:
    """``sense`` the objective over x >= 0 subject to ``rows[i] . x  senses[i]  rhs[i]``.

    ``upper`` optionally bounds individual variables from above.
    """

    objective: list
    rows: list
    senses: list
    rhs: list
    sense: str = "min"
    upper: list | None = None

    def __post_init__(self):
        k = len(self.objective)
        if not (len(self.rows) == len(self.senses) == len(self.rhs)):
            raise InvalidInput("rows, senses and rhs must have equal length")
        if any(len(r) != k for r in self.rows):
            raise InvalidInput("every constraint row needs one entry per variable")
        if any(s not in ("<=", ">=", "==") for s in self.senses):
            raise InvalidInput("constraint senses must be '<=', '>=' or '=='")
        if self.sense not in ("min", "max"):
            raise InvalidInput("sense must be 'min' or 'max'")
        if self.upper is not None and len(self.upper) != k:
            raise InvalidInput("upper bounds need one entry per variable")


@dataclass
class LpResult:
    status: str
    value: Fraction | None = None
    x: list[Fraction] = field(default_factory=list)
    pivots: int = 0


def _pivot(t: list[list[Fraction]], r: int, c: int):
    row = t[r]
    piv = row[c]
    if piv != 1:
        row[:] = [v / piv for v in row]
    for i, other in enumerate(t):
        if i != r:
            f = other[c]
            if f:
                other[:] = [a - f * b for a, b in zip(other, row)]


def _bland(t, basis, cost, allowed) -> tuple[str, int]:
    """Minimise ``cost . x`` on tableau ``t`` with Bland's rule. Returns (status, pivots)."""
    pivots = 0
    ncols = len(t[0]) - 1
    while True:
        entering = None
        for j in range(ncols):
            if not allowed[j] or j in basis:
                continue
            reduced = cost[j] - sum(cost[basis[i]] * t[i][j] for i in range(len(t)) if t[i][j])
            if reduced < 0:
                entering = j
                break
        if entering is None:
            return OPTIMAL, pivots
        leave = None
        best = None
        for i, row in enumerate(t):
            a = row[entering]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return UNBOUNDED, pivots
        _pivot(t, leave, entering)
        basis[leave] = entering
        pivots += 1


def lp_solve(problem: LpProblem, cap: int | None = None) -> LpResult:
    """Two-phase primal simplex in exact rationals with Bland's anti-cycling rule."""
    limit = config.cap("lp_columns", cap)
    nvar = len(problem.objective)
    if nvar > limit:
        raise CapExceeded("LP columns", nvar, limit)
    rows = [[rational(a) for a in r] for r in problem.rows]
    senses = list(problem.senses)
    rhs = [rational(b) for b in problem.rhs]
    if problem.upper is not None:
        for j, u in enumerate(problem.upper):
            if u is not None:
                rows.append([Fraction(int(i == j)) for i in range(nvar)])
                senses.append("<=")
                rhs.append(rational(u))
    c = [rational(a) for a in problem.objective]
    if problem.sense == "max":
        c = [-a for a in c]
    # normalise to b >= 0
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-a for a in rows[i]]
            rhs[i] = -rhs[i]
            senses[i] = {"<=": ">=", ">=": "<=", "==": "=="}[senses[i]]
    m = len(rows)
    n_slack = sum(s != "==" for s in senses)
    n_art = sum(s != "<=" for s in senses)
    ncols = nvar + n_slack + n_art
    t: list[list[Fraction]] = []
    basis: list[int] = []
    s_col, a_col = nvar, nvar + n_slack
    art_cols = []
    for i in range(m):
        row = rows[i] + [Fraction(0)] * (n_slack + n_art) + [rhs[i]]
        if senses[i] == "<=":
            row[s_col] = Fraction(1)
            basis.append(s_col)
            s_col += 1
        else:
            if senses[i] == ">=":
                row[s_col] = Fraction(-1)
                s_col += 1
            row[a_col] = Fraction(1)
            basis.append(a_col)
            art_cols.append(a_col)
            a_col += 1
        t.append(row)
    total = 0
    if art_cols:
        phase1 = [Fraction(0)] * ncols
        for j in art_cols:
            phase1[j] = Fraction(1)
        status, piv = _bland(t, basis, phase1, [True] * ncols)
        total += piv
        infeas = sum(t[i][-1] for i in range(m) if basis[i] in art_cols)
        if infeas > 0:
            return LpResult(INFEASIBLE, pivots=total)
        art = set(art_cols)
        # drive zero-level artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(t):
            if basis[i] in art:
                j = next((j for j in range(nvar + n_slack) if t[i][j] != 0), None)
                if j is None:
                    del t[i]
                    del basis[i]
                    continue
                _pivot(t, i, j)
                basis[i] = j
                total += 1
            i += 1
    allowed = [j < nvar + n_slack for j in range(ncols)]
    cost = c + [Fraction(0)] * (n_slack + n_art)
    status, piv = _bland(t, basis, cost, allowed)
    total += piv
    if status == UNBOUNDED:
        return LpResult(UNBOUNDED, pivots=total)
    x = [Fraction(0)] * nvar
    for i, b in enumerate(basis):
        if b < nvar:
            x[b] = t[i][-1]
    value = sum((rational(a) * v for a, v in zip(problem.objective, x)), Fraction(0))
    return LpResult(OPTIMAL, value, x, total)


# ---------------------------------------------------------------- chi_f

@dataclass(frozen=True)
class FractionalColoring:
    value: Fraction
    weights: dict  # independent-set bitmask -> Fraction


@lru_cache(maxsize=128)
def _chi_f_cached(g: Graph, cap: int | None) -> FractionalColoring:
    sets = maximal_independent_sets(g)
    limit = config.cap("lp_columns", cap)
    if len(sets) > limit:
        raise CapExceeded("maximal independent sets (LP columns)", len(sets), limit)
    rows = [[int(s >> v & 1) for s in sets] for v in range(g.n)]
    res = lp_solve(LpProblem([1] * len(sets), rows, [">="] * g.n, [1] * g.n), cap=cap)
    if res.status != OPTIMAL:
        raise ConsistencyError(f"fractional colouring LP returned {res.status}")
    weights = {s: w for s, w in zip(sets, res.x) if w}
    return FractionalColoring(res.value, weights)


def fractional_chromatic_number(g: Graph, cap: int | None = None) -> FractionalColoring:
    """chi_f(G) with a feasible weighting of maximal independent sets."""
    return _chi_f_cached(g, cap)


@lru_cache(maxsize=128)
def _clique_weights_cached(g: Graph, cap: int | None) -> tuple[Fraction, tuple[Fraction, ...]]:
    sets = maximal_independent_sets(g)
    limit = config.cap("lp_columns", cap)
    if g.n > limit:
        raise CapExceeded("LP columns", g.n, limit)
    rows = [[int(s >> v & 1) for v in range(g.n)] for s in sets]
    res = lp_solve(LpProblem([1] * g.n, rows, ["<="] * len(sets), [1] * len(sets), sense="max"), cap=cap)
    if res.status != OPTIMAL:
        raise ConsistencyError(f"fractional clique LP returned {res.status}")
    return res.value, tuple(res.x)


def fractional_clique_weights(g: Graph, cap: int | None = None) -> tuple[Fraction, list[Fraction]]:
    """Optimal solution of the dual LP: vertex weights y with y(S) <= 1 on independent sets.

    ``y / chi_f`` is a distribution maximising graph entropy.
    """
    value, y = _clique_weights_cached(g, cap)
    return value, list(y)


def fvp_max(g: Graph, w: Sequence, cliques: Sequence[int] | None = None) -> tuple[list[Fraction], Fraction]:
    """Maximise w.x over FVP(G) = {x >= 0 : x(K) <= 1 for every maximal clique K}.

    Weights are converted exactly to rationals; returns a basic optimal vertex.
    """
    if cliques is None:
        cliques = maximal_cliques(g)
    rows = [[int(k >> v & 1) for v in range(g.n)] for k in cliques]
    res = lp_solve(LpProblem([rational(a) for a in w], rows, ["<="] * len(rows), [1] * len(rows), sense="max"))
    if res.status != OPTIMAL:
        raise ConsistencyError(f"FVP LP returned {res.status}")
    return res.x, res.value


# ---------------------------------------------------------------- odd sets

def _subset_tables(g: Graph, limit: int) -> tuple[np.ndarray, np.ndarray]:
    """Vertex count and induced edge count of every subset, indexed by bitmask."""
    if g.n > limit:
        raise CapExceeded("odd-set enumeration", g.n, limit)
    size = np.zeros(1, dtype=np.int64)
    edges = np.zeros(1, dtype=np.int64)
    for k in range(g.n):
        idx = np.arange(1 << k, dtype=np.int64)
        below = g.adj[k] & ((1 << k) - 1)
        new_edges = edges + np.bitwise_count(idx & below).astype(np.int64)
        size = np.concatenate([size, size + 1])
        edges = np.concatenate([edges, new_edges])
    return size, edges


def _edge_weight_table(g: Graph, xs: dict[tuple[int, int], int]) -> np.ndarray:
    """x(E[U]) for every subset U with integer edge weights ``xs``."""
    total = np.zeros(1, dtype=object if sum(xs.values()) > 2**60 else np.int64)
    for k in range(g.n):
        idx = np.arange(1 << k, dtype=np.int64)
        add = np.zeros(1 << k, dtype=total.dtype)
        for u in bits(g.adj[k] & ((1 << k) - 1)):
            add = add + xs[(u, k)] * ((idx >> u) & 1)
        total = np.concatenate([total, total + add])
    return total


def fractional_edge_chromatic_witness(g: Graph, cap: int | None = None) -> tuple[Fraction, int | None]:
    """Edmonds' formula; the witness is the maximising odd set (None if Delta wins)."""
    if g.m == 0:
        return Fraction(0), None
    size, edges = _subset_tables(g, config.cap("odd_set_vertices", cap))
    best = Fraction(g.max_degree())
    witness = None
    odd = (size >= 3) & (size % 2 == 1)
    if odd.any():
        cand = np.nonzero(odd)[0]
        half = size[cand] // 2
        # compare e/h across subsets exactly via cross-multiplication against the incumbent
        ratio = edges[cand] / half
        top = ratio.max()
        for u in cand[ratio >= top - 1e-9]:
            r = Fraction(int(edges[u]), int(size[u] // 2))
            if r > best or (r == best and witness is not None and u < witness):
                best, witness = r, int(u)
    return best, witness


def fractional_edge_chromatic(g: Graph, cap: int | None = None, cross_check: bool = True) -> Fraction:
    """chi_f'(G) = max(Delta, max |E(U)| / floor(|U|/2) over odd |U| >= 3).

    With ``cross_check`` the value is compared to chi_f of the line graph
    whenever that LP fits within the caps.
    """
    value, _ = fractional_edge_chromatic_witness(g, cap)
    if cross_check and g.m:
        lg, _ = line_graph(g)
        try:
            lp_value = fractional_chromatic_number(lg).value
        except CapExceeded:
            return value
        if lp_value != value:
            raise ConsistencyError(f"Edmonds formula gives {value}, line-graph LP gives {lp_value}")
    return value


@dataclass(frozen=True)
class MatchingViolation:
    kind: str  # "nonnegativity" | "degree" | "odd_set"
    where: int  # edge index, vertex, or odd-set bitmask
    lhs: Fraction
    bound: Fraction


def matching_polytope_member(g: Graph, x: Sequence, cap: int | None = None) -> tuple[bool, MatchingViolation | None]:
    """Exact membership of x (indexed like ``g.edges()``) in the matching polytope.

    The reported odd-set witness is the most violated set, smallest bitmask on ties.
    """
    limit = config.cap("odd_set_vertices", cap)
    if g.n > limit:
        raise CapExceeded("odd-set enumeration", g.n, limit)
    edge_list = g.edges()
    if len(x) != len(edge_list):
        raise InvalidInput(f"x has {len(x)} entries, graph has {len(edge_list)} edges")
    xr = [rational(v) for v in x]
    for e, v in enumerate(xr):
        if v < 0:
            return False, MatchingViolation("nonnegativity", e, v, Fraction(0))
    for v in range(g.n):
        load = sum(xr[e] for e, (a, b) in enumerate(edge_list) if v in (a, b))
        if load > 1:
            return False, MatchingViolation("degree", v, load, Fraction(1))
    denom = lcm(*(v.denominator for v in xr)) if xr else 1
    xs = {edge: int(v * denom) for edge, v in zip(edge_list, xr)}
    weight = _edge_weight_table(g, xs)
    size, _ = _subset_tables(g, limit)
    odd = (size >= 3) & (size % 2 == 1)
    bound = (size // 2) * denom
    excess = np.where(odd, weight - bound, -1)
    worst = excess.max() if excess.size else -1
    if worst <= 0:
        return True, None
    u = int(np.nonzero(excess == worst)[0][0])
    return False, MatchingViolation("odd_set", u, Fraction(int(weight[u]), denom), Fraction(int(size[u] // 2)))


def is_k_graph(g: Graph, k: int, cap: int | None = None) -> tuple[bool, int | None]:
    """For k-regular g: True iff every odd U has |delta(U)| >= k.

    A failing answer carries the odd set with the smallest cut (smallest bitmask on ties).
    """
    if any(d != k for d in g.degrees()):
        raise InvalidInput(f"graph is not {k}-regular")
    size, edges = _subset_tables(g, config.cap("odd_set_vertices", cap))
    cut = k * size - 2 * edges
    odd = size % 2 == 1
    cut_odd = np.where(odd, cut, np.iinfo(np.int64).max)
    low = cut_odd.min()
    if low >= k:
        return True, None
    return False, int(np.nonzero(cut_odd == low)[0][0])
