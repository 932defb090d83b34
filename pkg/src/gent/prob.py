"""Distributions and Shannon functionals, all in bits."""

from __future__ import annotations

import json
import math
from typing import Sequence

import numpy as np

from .errors import InvalidInput
from .graph import bits

SUM_TOL = 1e-9


def distribution(p, normalize: bool = False) -> np.ndarray:
    """Validate ``p`` as a probability vector and return it as a float array.

    With ``normalize=True`` a nonnegative vector with positive sum is rescaled;
    otherwise the sum must already be 1 within ``SUM_TOL``.
    """
    p = np.asarray(p, dtype=float).reshape(-1)
    if p.size == 0:
        raise InvalidInput("empty distribution")
    if not np.all(np.isfinite(p)) or np.any(p < 0):
        raise InvalidInput("probabilities must be finite and nonnegative")
    total = p.sum()
    if normalize:
        if total <= 0:
            raise InvalidInput("cannot normalise a zero vector")
        return p / total
    if abs(total - 1.0) > SUM_TOL:
        raise InvalidInput(f"probabilities sum to {total!r}, not 1")
    return p


def uniform(n: int) -> np.ndarray:
    return np.full(n, 1.0 / n)


def joint(q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    if q.ndim != 2:
        raise InvalidInput("joint distribution must be a matrix")
    if not np.all(np.isfinite(q)) or np.any(q < 0):
        raise InvalidInput("joint entries must be finite and nonnegative")
    if abs(q.sum() - 1.0) > SUM_TOL:
        raise InvalidInput(f"joint entries sum to {q.sum()!r}, not 1")
    return q


def _plogp(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = x[pos] * np.log2(x[pos])
    return out


def entropy(p) -> float:
    """H(p) = -sum p log2 p with 0 log 0 = 0."""
    return float(-_plogp(distribution(p)).sum())


def binary_entropy(x: float) -> float:
    if not 0.0 <= x <= 1.0:
        raise InvalidInput(f"binary entropy argument {x} outside [0, 1]")
    if x in (0.0, 1.0):
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def kl_divergence(p, q) -> float:
    p = distribution(p)
    q = distribution(q)
    if p.shape != q.shape:
        raise InvalidInput("distributions have different lengths")
    support = p > 0
    if np.any(q[support] == 0):
        return math.inf
    return float(np.sum(p[support] * (np.log2(p[support]) - np.log2(q[support]))))


def joint_entropy(j) -> float:
    return float(-_plogp(joint(j)).sum())


def conditional_entropy(j) -> float:
    """H(Y|X) for a joint matrix indexed by (x, y)."""
    j = joint(j)
    px = j.sum(axis=1)
    return joint_entropy(j) - float(-_plogp(px).sum())


def mutual_information(j) -> float:
    """I(X;Y) as the divergence of the joint from the product of its marginals."""
    j = joint(j)
    px = j.sum(axis=1)
    py = j.sum(axis=0)
    support = j > 0
    prod = np.outer(px, py)
    return float(np.sum(j[support] * np.log2(j[support] / prod[support])))


def substitute_distribution(p, v: int, q) -> np.ndarray:
    """P_{v<-Q}: vertex v's mass split by Q over the appended copy of F.

    Vertex order matches :func:`gent.graph.substitute`.
    """
    p = distribution(p)
    q = distribution(q)
    rest = np.delete(p, v)
    return np.concatenate([rest, p[v] * q])


def random_distribution(n: int, rng: np.random.Generator) -> np.ndarray:
    """Dirichlet(1) sample, i.e. uniform on the simplex."""
    return rng.dirichlet(np.ones(n))


def load_distribution(text: str, n: int) -> np.ndarray:
    """Parse a JSON array, or the keyword ``uniform`` for a graph of order n."""
    if text.strip() == "uniform":
        return uniform(n)
    try:
        values = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"distribution is not valid JSON: {exc}") from None
    if not isinstance(values, list):
        raise InvalidInput("distribution JSON must be an array of numbers")
    p = distribution(values)
    if p.size != n:
        raise InvalidInput(f"distribution has {p.size} entries, graph has {n} vertices")
    return p


def masses(p: Sequence[float], blocks) -> list[float]:
    """Total probability of each block (bitmask) of a partition."""
    return [float(sum(p[v] for v in bits(b))) for b in blocks]
