"""Exact colorings: chromatic number, Grundy number and minimum-entropy colorings.

Every search here works on vertex bitmasks. The minimum-entropy search relies
on one structural fact: some optimal coloring, listed by nonincreasing class
mass, has each class maximal independent in the vertices not yet coloured
(moving positive mass into a heavier class strictly lowers entropy). Such a
sequence is automatically a Grundy coloring, so both prunings come for free:
only Grundy-extendable prefixes are generated, and a prefix whose most
optimistic completion is no better than the incumbent is cut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import config
from .combinatorics import max_weight_independent_set
from .corner import entropy_fw
from .errors import CapExceeded, InvalidInput
from .graph import Graph, bits, complement, popcount
from .prob import distribution, entropy

TIE_TOL = 1e-9
WITNESS_EPSILONS = (1 / 4, 1 / 8, 1 / 16)


@dataclass(frozen=True)
class Coloring:
    """Proper coloring as a tuple of class bitmasks."""

    classes: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    def color_of(self, n: int) -> list[int]:
        out = [-1] * n
        for c, cls in enumerate(self.classes):
            for v in bits(cls):
                out[v] = c
        return out

    def is_proper(self, g: Graph) -> bool:
        covered = 0
        for cls in self.classes:
            if not cls or cls & covered or not g.is_independent(cls):
                return False
            covered |= cls
        return covered == g.full

    def is_grundy(self, g: Graph) -> bool:
        """Each vertex of colour i sees every colour j < i."""
        for i, cls in enumerate(self.classes):
            for v in bits(cls):
                if any(not g.adj[v] & self.classes[j] for j in range(i)):
                    return False
        return True

    def sequence(self, p) -> ColorSequence:
        p = distribution(p)
        return ColorSequence(tuple(sorted((float(p[list(bits(c))].sum()) for c in self.classes),
                                          reverse=True)))

    def entropy(self, p) -> float:
        return self.sequence(p).entropy()

    def to_json(self, p=None) -> dict:
        out: dict = {"classes": [bits(c) for c in self.classes]}
        if p is not None:
            out["color_sequence"] = list(self.sequence(p).c)
        return out


@dataclass(frozen=True)
class ColorSequence:
    """Nonincreasing vector of class masses."""

    c: tuple[float, ...]

    def __post_init__(self):
        c = self.c
        if any(x < 0 for x in c) or abs(sum(c) - 1.0) > 1e-9:
            raise InvalidInput("colour sequence must be nonnegative and sum to 1")
        if any(c[i] < c[i + 1] for i in range(len(c) - 1)):
            raise InvalidInput("colour sequence must be nonincreasing")

    def entropy(self) -> float:
        return entropy(np.array(self.c))

    def dominates(self, other: ColorSequence) -> bool:
        """Majorisation: every prefix sum of self is at least that of other."""
        a = np.cumsum(self.c)
        b = np.cumsum(other.c)
        m = max(a.size, b.size)
        a = np.pad(a, (0, m - a.size), constant_values=1.0)
        b = np.pad(b, (0, m - b.size), constant_values=1.0)
        return bool(np.all(a >= b - 1e-12))


def _check_cap(name: str, what: str, g: Graph):
    limit = config.cap(name)
    if g.n > limit:
        raise CapExceeded(what, g.n, limit)


def _maximal_independent_within(cadj: tuple[int, ...], region: int) -> list[int]:
    """Maximal independent sets of G[region], given the complement adjacency."""
    out: list[int] = []
    cadj = tuple(a & region for a in cadj)

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pux = p | x
        pivot = max(bits(pux), key=lambda u: popcount(p & cadj[u]))
        cand = p & ~cadj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & cadj[v], x & cadj[v])
            p &= ~low
            x |= low
            cand ^= low

    expand(0, region, 0)
    return sorted(out)


class _MisTable:
    """Memoised maximal independent sets of induced subgraphs."""

    def __init__(self, g: Graph):
        self.cadj = complement(g).adj
        self.memo: dict[int, list[int]] = {}

    def __call__(self, region: int) -> list[int]:
        got = self.memo.get(region)
        if got is None:
            got = self.memo[region] = _maximal_independent_within(self.cadj, region)
        return got


# ------------------------------------------------------------ chromatic number

def _dsatur_greedy(g: Graph) -> list[int]:
    n, adj = g.n, g.adj
    color = [-1] * n
    sat = [0] * n
    uncolored = g.full
    while uncolored:
        v = max(bits(uncolored), key=lambda u: (popcount(sat[u]), popcount(adj[u] & uncolored), -u))
        c = 0
        while sat[v] >> c & 1:
            c += 1
        color[v] = c
        uncolored &= ~(1 << v)
        for u in bits(adj[v]):
            sat[u] |= 1 << c
    return color


def chromatic_lower_bound(g: Graph) -> int:
    """max(greedy clique, ceil(n / alpha)); alpha is skipped above the independent-set cap."""
    clique = 0
    for v in sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        if g.adj[v] & clique == clique:
            clique |= 1 << v
    lower = popcount(clique)
    try:
        mask, _ = max_weight_independent_set(g, [1.0] * g.n)
        lower = max(lower, -(-g.n // popcount(mask)))
    except CapExceeded:
        pass
    return lower


def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    """Exact chromatic number by DSATUR branch and bound.

    The incumbent starts from greedy DSATUR; the search stops as soon as it
    meets the lower bound of :func:`chromatic_lower_bound`. Returns
    ``(chi, coloring)`` with classes listed in order of first use.
    """
    _check_cap("chromatic_vertices", "chromatic number search", g)
    n = g.n
    if n == 0:
        return 0, Coloring(())
    adj = g.adj
    lower = chromatic_lower_bound(g)
    best = _dsatur_greedy(g)
    best_k = max(best) + 1

    color = [-1] * n
    sat = [0] * n
    count = [[0] * n for _ in range(n)]  # count[v][c]: neighbours of v coloured c

    def paint(v: int, c: int):
        color[v] = c
        for u in bits(adj[v]):
            count[u][c] += 1
            sat[u] |= 1 << c

    def unpaint(v: int, c: int):
        color[v] = -1
        for u in bits(adj[v]):
            count[u][c] -= 1
            if not count[u][c]:
                sat[u] &= ~(1 << c)

    def search(used: int, uncolored: int):
        nonlocal best_k, best
        if not uncolored:
            best_k, best = used, color.copy()
            return
        v = max(bits(uncolored), key=lambda u: (popcount(sat[u]), popcount(adj[u] & uncolored), -u))
        rest = uncolored & ~(1 << v)
        for c in range(used):
            if sat[v] >> c & 1:
                continue
            paint(v, c)
            search(used, rest)
            unpaint(v, c)
            if best_k <= lower:
                return
        if used + 1 < best_k:
            paint(v, used)
            search(used + 1, rest)
            unpaint(v, used)

    if best_k > lower:
        search(0, g.full)
    classes: list[int] = []
    relabel: dict[int, int] = {}
    for v in range(n):
        c = relabel.setdefault(best[v], len(relabel))
        if c == len(classes):
            classes.append(0)
        classes[c] |= 1 << v
    return best_k, Coloring(tuple(classes))


# ------------------------------------------------------------ Grundy number

def grundy_number(g: Graph) -> tuple[int, Coloring]:
    """Largest number of colours in a Grundy coloring, with a witness.

    A Grundy coloring is a sequence of classes each maximal independent in
    the vertices left after removing the earlier ones; the longest such
    sequence is found by memoised recursion over the remaining vertex set.
    """
    _check_cap("grundy_vertices", "Grundy number search", g)
    table = _MisTable(g)

    @lru_cache(maxsize=None)
    def longest(region: int) -> int:
        if not region:
            return 0
        return 1 + max(longest(region & ~s) for s in table(region))

    classes = []
    region = g.full
    while region:
        target = longest(region) - 1
        s = next(s for s in table(region) if longest(region & ~s) == target)
        classes.append(s)
        region &= ~s
    return len(classes), Coloring(tuple(classes))


# ------------------------------------------------------------ minimum entropy

def _plogp(x: float) -> float:
    return -x * math.log2(x) if x > 0 else 0.0


def _completion_bound(cap_mass: float, rest: float) -> float:
    """Least entropy contribution of masses <= cap_mass summing to rest.

    The sequence (cap, cap, ..., remainder) majorises every such completion,
    so by Schur concavity its entropy is a lower bound.
    """
    if rest <= 1e-15:
        return 0.0
    if cap_mass <= 0:
        return math.inf
    full = math.floor(rest / cap_mass + 1e-12)
    tail = max(rest - full * cap_mass, 0.0)
    return full * _plogp(cap_mass) + _plogp(tail)


@dataclass
class MinEntropyColoring:
    coloring: Coloring
    value: float
    chi_h: int
    nodes: int

    def to_json(self, p) -> dict:
        out = self.coloring.to_json(p)
        out.update({"value_bits": self.value, "chi_H": self.chi_h})
        return out


def _min_entropy_search(g: Graph, p: np.ndarray) -> MinEntropyColoring:
    table = _MisTable(g)
    mass = [float(x) for x in p]

    def m(mask: int) -> float:
        return sum(mass[v] for v in bits(mask))

    best_val = math.inf
    best_k = g.n + 1
    best_classes: tuple[int, ...] = ()
    nodes = 0
    chosen: list[int] = []

    def search(region: int, prev: float, acc: float, rest: float):
        nonlocal best_val, best_k, best_classes, nodes
        nodes += 1
        if not region:
            k = len(chosen)
            if acc < best_val - TIE_TOL:
                best_k, best_classes = k, tuple(chosen)
            elif acc <= best_val + TIE_TOL and k < best_k:
                best_k, best_classes = k, tuple(chosen)
            best_val = min(best_val, acc)
            return
        options = []
        for s in table(region):
            ms = m(s)
            if ms <= prev + 1e-12:
                options.append((-ms, s))
        options.sort()
        for neg, s in options:
            ms = -neg
            left = rest - ms
            gain = acc + _plogp(ms)
            if gain + _completion_bound(ms, left) > best_val + TIE_TOL:
                continue
            chosen.append(s)
            search(region & ~s, ms, gain, left)
            chosen.pop()

    search(g.full, math.inf, 0.0, 1.0)
    # classes come out in nonincreasing mass order by construction
    value = sum(_plogp(m(c)) for c in best_classes)
    return MinEntropyColoring(Coloring(best_classes), value, best_k, nodes)


def min_entropy_coloring(g: Graph, p) -> tuple[Coloring, float]:
    """Exact chromatic entropy H_chi(G, P) with an optimal coloring.

    Classes are returned in nonincreasing mass order; the coloring is a
    Grundy coloring in that order. Among colorings within 1e-9 of the
    optimum the one with fewest classes is returned.
    """
    res = min_entropy_details(g, p)
    return res.coloring, res.value


def min_entropy_details(g: Graph, p) -> MinEntropyColoring:
    p = distribution(p)
    if p.size != g.n:
        raise InvalidInput(f"distribution has {p.size} entries, graph has {g.n} vertices")
    _check_cap("coloring_vertices", "minimum-entropy coloring search", g)
    return _min_entropy_search(g, p)


def chi_H(g: Graph, p) -> int:
    """Fewest colours among the minimum-entropy colorings (ties within 1e-9)."""
    return min_entropy_details(g, p).chi_h


def exhaustive_min_entropy(g: Graph, p) -> tuple[float, int]:
    """Reference search over every partition into independent sets, no pruning.

    Returns ``(H_chi, chi_H)``. Intended for n <= 8 (Bell(8) = 4140 partitions).
    """
    p = distribution(p)
    if g.n > 10:
        raise CapExceeded("exhaustive coloring enumeration", g.n, 10)
    best = [math.inf, g.n + 1]

    def rec(v: int, classes: list[int]):
        if v == g.n:
            h = sum(_plogp(float(sum(p[u] for u in bits(c)))) for c in classes)
            k = len(classes)
            if h < best[0] - TIE_TOL:
                best[:] = [h, k]
            elif h <= best[0] + TIE_TOL and k < best[1]:
                best[1] = k
            return
        for i, c in enumerate(classes):
            if not g.adj[v] & c:
                classes[i] = c | 1 << v
                rec(v + 1, classes)
                classes[i] = c
        classes.append(1 << v)
        rec(v + 1, classes)
        classes.pop()

    rec(0, [])
    return best[0], best[1]


@dataclass
class MaxChiHReport:
    value: int
    grundy_coloring: Coloring
    witness: list[float] | None
    epsilon: float | None
    verified: bool

    def to_json(self) -> dict:
        return {
            "max_chi_H": self.value,
            "grundy_coloring": [bits(c) for c in self.grundy_coloring.classes],
            "witness": self.witness,
            "epsilon": self.epsilon,
            "witness_verified": self.verified,
        }


def max_chi_H(g: Graph) -> MaxChiHReport:
    """max over P of chi_H(G, P), which equals the Grundy number.

    A witness distribution is attempted by giving class t of a maximum
    Grundy coloring total mass proportional to eps**t (spread evenly inside
    the class) for eps in 1/4, 1/8, 1/16; it counts as verified when exact
    search returns that coloring's class count as chi_H.
    """
    gamma, col = grundy_number(g)
    for eps in WITNESS_EPSILONS:
        p = np.zeros(g.n)
        for t, cls in enumerate(col.classes, start=1):
            members = bits(cls)
            p[members] = eps ** t / len(members)
        p /= p.sum()
        if chi_H(g, p) == gamma:
            return MaxChiHReport(gamma, col, [float(x) for x in p], eps, True)
    return MaxChiHReport(gamma, col, None, None, False)


# ------------------------------------------------------------ entropy bounds

def clique_entropy(g: Graph, p, tol: float = config.DEFAULT_TOL) -> float:
    """H_omega(G, P) = H(P) - H_k(complement of G, P)."""
    p = distribution(p)
    return entropy(p) - entropy_fw(complement(g), p, tol).value


def chromatic_entropy_lower_bound(g: Graph) -> float:
    """log2(n / alpha(G)), a lower bound on H_chi(G, U)."""
    if g.n == 0:
        raise InvalidInput("empty graph")
    mask, _ = max_weight_independent_set(g, [1.0] * g.n)
    return math.log2(g.n / popcount(mask))
