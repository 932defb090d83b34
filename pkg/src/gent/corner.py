"""Entropy of convex corners and of probabilistic graphs.

Two independent solvers compute the graph entropy
``H_k(G, P) = min_{a in VP(G)} sum_i p_i log2(1/a_i)``:

* :func:`entropy_fw` -- pairwise Frank-Wolfe over the vertex packing
  polytope, with an exact maximum-weight independent set as linear oracle.
* :func:`entropy_am` -- alternating minimisation of the mutual information
  between a vertex and a maximal independent set containing it.

Both report a certified gap: the Frank-Wolfe linearisation gap at the returned
point, which bounds ``value - H_k(G, P)`` from above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import config
from .combinatorics import max_weight_independent_set, maximal_cliques, maximal_independent_sets
from .errors import InvalidInput, NonConvergence
from .graph import Graph, complement
from .prob import distribution, entropy

LN2 = math.log(2.0)
FLOOR = 1e-300
LINE_SEARCH_TOL = 1e-12
# above this many maximal independent sets the FW oracle falls back to branch and bound
TABLE_ORACLE_LIMIT = 20_000


@dataclass
class EntropyResult:
    value: float
    minimizer: np.ndarray
    iterations: int
    gap: float
    method: str
    weights: list = field(default_factory=list)  # [(independent set or corner vertex, lambda)]
    suspect: bool = False

    def to_json(self) -> dict:
        out = {
            "value_bits": self.value,
            "minimizer": [float(x) for x in self.minimizer],
            "iterations": self.iterations,
            "gap_bits": self.gap,
            "method": self.method,
        }
        if self.suspect:
            out["suspect"] = True
        return out


# ---------------------------------------------------------------- corners

class ConvexCorner:
    dim: int

    def contains(self, x, tol: float = 1e-9) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class UnitCorner(ConvexCorner):
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidInput("corner dimension must be >= 1")

    def contains(self, x, tol: float = 1e-9) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= -tol) and x.sum() <= 1 + tol)


@dataclass(frozen=True)
class VertexPacking(ConvexCorner):
    graph: Graph

    @property
    def dim(self) -> int:
        return self.graph.n

    def contains(self, x, tol: float = 1e-9) -> bool:
        """x is dominated by a convex combination of independent sets."""
        from scipy.optimize import linprog

        x = np.asarray(x, dtype=float)
        if np.any(x < -tol):
            return False
        sets = maximal_independent_sets(self.graph)
        m = _set_matrix(sets, self.graph.n)
        res = linprog(np.ones(len(sets)), A_ub=-m.T, b_ub=-np.clip(x, 0, None), bounds=(0, None), method="highs")
        return bool(res.status == 0 and res.fun <= 1 + tol)


@dataclass(frozen=True)
class FractionalVertexPacking(ConvexCorner):
    graph: Graph

    @property
    def dim(self) -> int:
        return self.graph.n

    def contains(self, x, tol: float = 1e-9) -> bool:
        x = np.asarray(x, dtype=float)
        if np.any(x < -tol):
            return False
        return all(x[_members(k, self.graph.n)].sum() <= 1 + tol for k in maximal_cliques(self.graph))


def _members(mask: int, n: int) -> np.ndarray:
    return np.array([bool(mask >> v & 1) for v in range(n)])


def _set_matrix(sets, n: int) -> np.ndarray:
    return np.array([[s >> v & 1 for v in range(n)] for s in sets], dtype=float).reshape(len(sets), n)


# ---------------------------------------------------------------- helpers

def _objective(p: np.ndarray, a: np.ndarray) -> tuple[float, bool]:
    """sum p_i log2(1/a_i) over the support of p, and whether the floor fired."""
    support = p > 0
    aa = a[support]
    floored = bool(np.any(aa < FLOOR))
    return float(-np.sum(p[support] * np.log2(np.maximum(aa, FLOOR)))), floored


def _gradient_weights(p: np.ndarray, a: np.ndarray) -> np.ndarray:
    w = np.zeros_like(p)
    support = p > 0
    w[support] = p[support] / np.maximum(a[support], FLOOR)
    return w


def _line_search(p: np.ndarray, a: np.ndarray, d: np.ndarray, gmax: float) -> float:
    """argmin over [0, gmax] of -sum p log(a + g d).

    Newton's method on the derivative, safeguarded by a shrinking bracket
    (bisection whenever the Newton point leaves it); stops once the step or
    the bracket is below ``LINE_SEARCH_TOL``.
    """
    support = (p > 0) & (d != 0)
    if not support.any():
        return gmax
    pp, aa, dd = p[support], a[support], d[support]

    def derivatives(g: float) -> tuple[float, float]:
        denom = aa + g * dd
        if (denom <= 0).any():
            return math.inf, math.inf
        r = dd / denom
        return -float(pp @ r), float(pp @ (r * r))

    if derivatives(gmax)[0] <= 0:
        return gmax
    g = 0.0
    slope, curv = derivatives(g)
    if slope >= 0:
        return 0.0
    lo, hi = 0.0, gmax
    for _ in range(200):
        cand = g - slope / curv
        if not lo < cand < hi:
            cand = 0.5 * (lo + hi)
        step = abs(cand - g)
        g = cand
        slope, curv = derivatives(g)
        if slope > 0:
            hi = g
        elif slope < 0:
            lo = g
        else:
            break
        if step <= LINE_SEARCH_TOL or hi - lo <= LINE_SEARCH_TOL:
            break
    return g


def _check_inputs(g: Graph, p, tol: float) -> np.ndarray:
    p = distribution(p)
    if p.size != g.n:
        raise InvalidInput(f"distribution has {p.size} entries, graph has {g.n} vertices")
    if not tol > 0:
        raise InvalidInput("tol must be positive")
    return p


class _IndependentSetOracle:
    """Maximum-weight independent set for nonnegative weights.

    Uses the table of maximal independent sets when it is small, which is
    exact because an optimum can always be extended to a maximal set.
    """

    def __init__(self, g: Graph):
        self.g = g
        sets = maximal_independent_sets(g)
        if len(sets) <= TABLE_ORACLE_LIMIT:
            self.sets = sets
            self.table = _set_matrix(sets, g.n)
        else:
            self.sets = None
            self.table = None

    def __call__(self, w: np.ndarray) -> tuple[int, float]:
        if self.table is not None:
            scores = self.table @ w
            k = int(np.argmax(scores))
            return self.sets[k], float(scores[k])
        return max_weight_independent_set(self.g, w)


def _vec(mask: int, n: int) -> np.ndarray:
    return _members(mask, n).astype(float)


# ---------------------------------------------------------------- Frank-Wolfe

def _pairwise_fw(p, start, oracle, to_vec, tol, budget, method) -> EntropyResult:
    """Pairwise Frank-Wolfe on f(a) = -sum p log2 a over a polytope given by ``oracle``.

    ``start`` is a list of (key, lambda) with keys understood by ``to_vec``.
    """
    weights: dict = {}
    vecs: dict = {}
    for key, lam in start:
        weights[key] = weights.get(key, 0.0) + lam
        vecs[key] = to_vec(key)
    a = sum(lam * vecs[k] for k, lam in weights.items())
    best = None

    def snapshot(it, value, gap, floored):
        return EntropyResult(value, a.copy(), it, gap, method, sorted(weights.items()), floored)

    for it in range(budget + 1):
        if it % 100 == 0:
            a = sum(lam * vecs[k] for k, lam in weights.items())
        value, floored = _objective(p, a)
        w = _gradient_weights(p, a)
        s_key, s_score = oracle(w)
        gap = max(0.0, (s_score - float(w @ a)) / LN2)
        if gap <= tol:
            return snapshot(it, value, gap, floored)
        if best is None or value < best.value:
            best = snapshot(it, value, gap, floored)
        if it == budget:
            break
        if s_key not in vecs:
            vecs[s_key] = to_vec(s_key)
        # away atom: the active atom with the smallest gradient score
        v_key = min(weights, key=lambda k: float(vecs[k] @ w))
        if v_key == s_key:
            break
        d = vecs[s_key] - vecs[v_key]
        gmax = weights[v_key]
        step = _line_search(p, a, d, gmax)
        if step <= 0:
            break
        a = a + step * d
        weights[s_key] = weights.get(s_key, 0.0) + step
        if step >= gmax:
            del weights[v_key]
        else:
            weights[v_key] -= step
    raise NonConvergence(f"{method}: gap {best.gap:.3g} above tol {tol:.3g} after {best.iterations} iterations", best)


def entropy_fw(g: Graph, p, tol: float = config.DEFAULT_TOL, budget: int = config.DEFAULT_BUDGET) -> EntropyResult:
    """Graph entropy by pairwise Frank-Wolfe over VP(G).

    Starts from the barycentre of the maximal independent sets. ``weights``
    holds the final convex combination as (independent-set bitmask, lambda).
    """
    p = _check_inputs(g, p, tol)
    sets = maximal_independent_sets(g)
    start = [(s, 1.0 / len(sets)) for s in sets]
    oracle = _IndependentSetOracle(g)
    return _pairwise_fw(p, start, oracle, lambda s: _vec(s, g.n), tol, budget, "fw")


def _fvp_entropy(g: Graph, p, tol: float, budget: int) -> EntropyResult:
    from .fractional import fvp_max

    cliques = maximal_cliques(g)
    sets = maximal_independent_sets(g)

    def oracle(w):
        x, val = fvp_max(g, w, cliques)
        return tuple(x), float(val)

    def to_vec(key):
        if isinstance(key, tuple):
            return np.array([float(v) for v in key])
        return _vec(key, g.n)

    start = [(tuple(Fraction(int(s >> v & 1)) for v in range(g.n)), 1.0 / len(sets)) for s in sets]
    return _pairwise_fw(p, start, oracle, to_vec, tol, budget, "fw-fvp")


def corner_entropy(c: ConvexCorner, p, tol: float = config.DEFAULT_TOL, budget: int = config.DEFAULT_BUDGET) -> EntropyResult:
    """H_A(P) = min over a in the corner of sum p_i log2(1/a_i)."""
    p = distribution(p)
    if p.size != c.dim:
        raise InvalidInput(f"distribution has {p.size} entries, corner has dimension {c.dim}")
    if not tol > 0:
        raise InvalidInput("tol must be positive")
    if isinstance(c, UnitCorner):
        return EntropyResult(entropy(p), p.copy(), 0, 0.0, "unit")
    if isinstance(c, VertexPacking):
        return entropy_fw(c.graph, p, tol, budget)
    if isinstance(c, FractionalVertexPacking):
        return _fvp_entropy(c.graph, p, tol, budget)
    raise InvalidInput(f"unsupported corner {type(c).__name__}")


# ---------------------------------------------------------------- alternating minimisation

@dataclass
class AmState:
    """Conditional q(F|i) over (vertex, maximal independent set) and the marginal r(F)."""

    sets: list[int]
    q_cond: np.ndarray
    r: np.ndarray


def _am_state(p: np.ndarray, sets, table: np.ndarray, r: np.ndarray) -> AmState:
    a = table.T @ r
    q = np.where(table.T > 0, r[None, :] / np.maximum(a, FLOOR)[:, None], 0.0)
    q[p == 0] = 0.0
    return AmState(list(sets), q, r)


def mutual_information_of(p: np.ndarray, state: AmState) -> float:
    """I(X;Y) for the joint p_i q(F|i), measured against its own Y-marginal."""
    joint = p[:, None] * state.q_cond
    r = joint.sum(axis=0)
    nz = joint > 0
    ratio = state.q_cond[nz] / np.broadcast_to(r[None, :], joint.shape)[nz]
    return float(np.sum(joint[nz] * np.log2(ratio)))


def entropy_am(g: Graph, p, tol: float = config.DEFAULT_TOL, budget: int = config.DEFAULT_BUDGET,
               return_state: bool = False):
    """Graph entropy as min I(X;Y) by alternating minimisation.

    Alternates q(F|i) = r(F) / sum_{F' contains i} r(F') and
    r(F) = sum_i p_i q(F|i) from r uniform over maximal independent sets.
    Stops once the linearisation gap at a_i = sum_{F contains i} r(F) is at
    most ``tol``; the successive change of I is then below ``tol`` as well.
    """
    p = _check_inputs(g, p, tol)
    sets = maximal_independent_sets(g)
    table = _set_matrix(sets, g.n)
    r = np.full(len(sets), 1.0 / len(sets))
    best = None
    for it in range(budget + 1):
        a = table.T @ r
        value, floored = _objective(p, a)
        w = _gradient_weights(p, a)
        scores = table @ w
        gap = max(0.0, (float(scores.max()) - float(w @ a)) / LN2)
        result = EntropyResult(value, a, it, gap, "am", [], floored)
        if best is None or value < best.value:
            best = result
        if gap <= tol:
            result.weights = [(s, float(x)) for s, x in zip(sets, r) if x > 0]
            if return_state:
                return result, _am_state(p, sets, table, r)
            return result
        # r(F) <- sum_i p_i q(F|i) with q(F|i) = r(F)/a_i
        r = r * scores
        r /= r.sum()
    raise NonConvergence(f"am: gap {best.gap:.3g} above tol {tol:.3g} after {budget} iterations", best)


def graph_entropy(g: Graph, p, tol: float = config.DEFAULT_TOL, method: str = "fw",
                  budget: int = config.DEFAULT_BUDGET) -> EntropyResult:
    if method == "fw":
        return entropy_fw(g, p, tol, budget)
    if method == "am":
        return entropy_am(g, p, tol, budget)
    raise InvalidInput(f"unknown method {method!r}")


# ---------------------------------------------------------------- derived quantities

@dataclass
class MaxEntropyResult:
    distribution: np.ndarray
    value: float
    log_chi_f: float
    chi_f: Fraction
    ascent_value: float
    ascent_iterations: int
    source: str  # "ascent" or "lp-dual"

    def to_json(self) -> dict:
        return {
            "distribution": [float(x) for x in self.distribution],
            "value_bits": self.value,
            "log_chi_f_bits": self.log_chi_f,
            "chi_f": f"{self.chi_f.numerator}/{self.chi_f.denominator}",
            "ascent_value_bits": self.ascent_value,
            "ascent_iterations": self.ascent_iterations,
            "source": self.source,
        }


def max_entropy_distribution(g: Graph, tol: float = config.DEFAULT_TOL, max_steps: int = 2000,
                             patience: int = 200, inner_tol: float | None = None) -> MaxEntropyResult:
    """Maximise P -> H_k(G, P) over the simplex.

    Runs multiplicative-weights supergradient ascent (supergradient
    log2(1/a*_i), step 1/sqrt(t)) until the best value stalls for ``patience``
    steps, then compares the best iterate with the normalised optimal dual
    solution of the fractional chromatic LP and keeps the better one. The
    returned value must match log2 chi_f(G) within ``tol``.
    """
    from .fractional import fractional_chromatic_number, fractional_clique_weights

    if not tol > 0:
        raise InvalidInput("tol must be positive")
    inner = inner_tol if inner_tol is not None else tol / 4
    chi_f = fractional_chromatic_number(g).value
    target = math.log2(chi_f)
    p = np.full(g.n, 1.0 / g.n)
    best_p, best_val = p, -math.inf
    stall = 0
    steps = 0
    for t in range(1, max_steps + 1):
        steps = t
        res = entropy_fw(g, p, inner)
        if res.value > best_val + tol:
            stall = 0
        else:
            stall += 1
        if res.value > best_val:
            best_p, best_val = p, res.value
        if stall >= patience or best_val >= target - tol:
            break
        grad = -np.log2(np.maximum(res.minimizer, FLOOR))
        logits = np.log(p) + grad / math.sqrt(t)
        logits -= logits.max()
        p = np.exp(logits)
        p /= p.sum()
    ascent_val = best_val
    source = "ascent"
    if best_val < target - tol:
        total, y = fractional_clique_weights(g)
        dual_p = np.array([float(v / total) for v in y])
        res = entropy_fw(g, dual_p, inner)
        if res.value > best_val:
            best_p, best_val, source = dual_p, res.value, "lp-dual"
    result = MaxEntropyResult(best_p, best_val, target, chi_f, ascent_val, steps, source)
    if not (target - tol <= best_val <= target + tol):
        raise NonConvergence(f"max entropy {best_val:.9f} not within {tol:g} of log chi_f = {target:.9f}", result)
    return result


def splitting_gap(g: Graph, p, tol: float = config.DEFAULT_TOL) -> float:
    """H_k(G,P) + H_k(complement,P) - H(P); zero for every P exactly when G is perfect."""
    p = _check_inputs(g, p, tol)
    return entropy_fw(g, p, tol).value + entropy_fw(complement(g), p, tol).value - entropy(p)


def antiblocker_identity_check(g: Graph, p, tol: float = config.DEFAULT_TOL) -> bool:
    """|H(p) - H_VP(G)(p) - H_FVP(complement)(p)| <= tol; VP(G) and FVP(complement) antiblock."""
    p = _check_inputs(g, p, tol)
    vp = corner_entropy(VertexPacking(g), p, tol / 2)
    fvp = corner_entropy(FractionalVertexPacking(complement(g)), p, tol / 2)
    return abs(entropy(p) - vp.value - fvp.value) <= tol
