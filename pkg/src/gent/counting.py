"""Counting bounds proved by the entropy method: Shearer's projections and Bregman's permanent bound."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import config
from .combinatorics import bipartition
from .errors import CapExceeded, InvalidInput, NotBipartite
from .graph import Graph, bits

BREGMAN_SLACK = 1e-9


@dataclass(frozen=True)
class PointSet3D:
    points: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise InvalidInput("points must be distinct")
        if any(len(p) != 3 for p in self.points):
            raise InvalidInput("points must be triples")

    @classmethod
    def parse(cls, text: str) -> PointSet3D:
        """One ``x y z`` triple per line; blank lines and ``#`` comments are skipped."""
        pts = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise InvalidInput(f"line {lineno}: expected three integers")
            try:
                pts.append(tuple(int(x) for x in parts))
            except ValueError:
                raise InvalidInput(f"line {lineno}: expected three integers") from None
        return cls(tuple(pts))


@dataclass(frozen=True)
class ShearerReport:
    n: int
    n1: int
    n2: int
    n3: int

    @property
    def holds(self) -> bool:
        return self.n * self.n <= self.n1 * self.n2 * self.n3

    def to_json(self) -> dict:
        return {"n": self.n, "n1": self.n1, "n2": self.n2, "n3": self.n3, "holds": self.holds}


def shearer_check(pts: PointSet3D) -> ShearerReport:
    """n^2 <= n1 n2 n3, where n_i counts the projections dropping coordinate i."""
    if not pts.points:
        raise InvalidInput("point set is empty")
    arr = np.array(pts.points, dtype=np.int64)
    counts = [len({tuple(r) for r in np.delete(arr, i, axis=1).tolist()}) for i in range(3)]
    return ShearerReport(len(arr), *counts)


def _balanced_parts(g: Graph, part_a: int | None = None) -> tuple[list[int], list[int]]:
    if part_a is None:
        bp = bipartition(g)
        if bp is None:
            raise NotBipartite("graph is not bipartite")
        part_a = bp.part_a
    part_b = g.full & ~part_a
    if not (g.is_independent(part_a) and g.is_independent(part_b)):
        raise NotBipartite("given part does not induce a bipartition")
    a, b = bits(part_a), bits(part_b)
    if len(a) != len(b):
        raise InvalidInput(f"parts have sizes {len(a)} and {len(b)}")
    limit = config.cap("matching_part")
    if len(a) > limit:
        raise CapExceeded("permanent", len(a), limit)
    return a, b


def biadjacency(g: Graph, part_a: int | None = None) -> tuple[np.ndarray, list[int], list[int]]:
    """Biadjacency matrix with rows for the first part; by default the BFS side holding vertex 0."""
    a, b = _balanced_parts(g, part_a)
    m = np.array([[1 if g.has_edge(u, v) else 0 for v in b] for u in a], dtype=np.int64)
    return m, a, b


def permanent(m: np.ndarray) -> int:
    """Ryser's formula with Gray-code updates, in exact integers."""
    m = np.asarray(m, dtype=object)
    n = m.shape[0]
    if n == 0:
        return 1
    rows = [0] * n
    total = 0
    subset = 0
    for k in range(1, 1 << n):
        # Gray code: flip the column given by the lowest set bit of k
        j = (k & -k).bit_length() - 1
        subset ^= 1 << j
        sign = 1 if subset >> j & 1 else -1
        for i in range(n):
            rows[i] += sign * m[i, j]
        prod = 1
        for r in rows:
            prod *= r
            if not prod:
                break
        size = bin(subset).count("1")
        total += -prod if (n - size) % 2 else prod
    return int(total)


def count_perfect_matchings(g: Graph, part_a: int | None = None) -> int:
    """Number of perfect matchings of a balanced bipartite graph (parts <= 14)."""
    if g.n == 0:
        return 1
    m, _, _ = biadjacency(g, part_a)
    return permanent(m)


@dataclass(frozen=True)
class BregmanReport:
    count: int
    bound: float

    @property
    def holds(self) -> bool:
        return self.count <= self.bound + BREGMAN_SLACK

    def to_json(self) -> dict:
        return {"count": self.count, "bound": self.bound, "holds": self.holds}


def bregman_bound(g: Graph, part_a: int | None = None) -> BregmanReport:
    """Perfect matchings against prod over the first part of (d(v)!)^(1/d(v)).

    The first part is ``part_a`` or else the BFS side containing vertex 0. A
    vertex of degree zero there leaves the bound undefined and is rejected.
    """
    m, _, _ = biadjacency(g, part_a)
    degrees = m.sum(axis=1)
    if np.any(degrees == 0):
        raise InvalidInput("isolated vertex in the first part")
    log_bound = sum(math.lgamma(d + 1) / d for d in degrees.tolist())
    return BregmanReport(permanent(m), math.exp(log_bound))
