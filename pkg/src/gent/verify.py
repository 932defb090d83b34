"""The acceptance checks, shared by ``gent verify`` and the test-suite.

Each ``criterion_*`` function runs one check and returns a :class:`Check`.
Randomised checks draw from ``numpy.random.default_rng([seed, number])`` so
every criterion is reproducible on its own.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from .coloring import (
    chi_H,
    chromatic_number,
    exhaustive_min_entropy,
    grundy_number,
    max_chi_H,
    min_entropy_coloring,
)
from .combinatorics import bipartition, max_weight_independent_set
from .corner import entropy_am, entropy_fw, splitting_gap
from .counting import PointSet3D, bregman_bound, shearer_check
from .fractional import fractional_chromatic_number, fractional_edge_chromatic
from .graph import (
    Graph,
    complete,
    complete_multipartite,
    conormal_power,
    cycle,
    disjoint_union,
    fig51,
    fig52,
    kneser,
    line_graph,
    path,
    petersen,
    star,
)
from .prob import entropy, uniform
from .symmetry import check_bipartite_symmetric, is_perfect, numeric_symmetry_check

LINE_GRAPH_VALUE = 1.75712


@dataclass
class Check:
    criterion: int
    name: str
    passed: bool
    expected: Any
    actual: Any
    tolerance: float | None
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "name": self.name,
            "passed": self.passed,
            "expected": self.expected,
            "actual": self.actual,
            "tolerance": self.tolerance,
            "detail": self.detail,
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} [{self.criterion:2d}] {self.name}: actual={self.actual} expected={self.expected} tol={self.tolerance} {self.detail}".rstrip()


def _rng(seed: int, criterion: int) -> np.random.Generator:
    return np.random.default_rng([seed, criterion])


def random_graph(rng: np.random.Generator, n: int, density: float | None = None) -> Graph:
    if density is None:
        density = rng.uniform(0.15, 0.85)
    upper = np.triu(rng.random((n, n)) < density, 1)
    return Graph.from_matrix(upper | upper.T)


def random_bipartite(rng: np.random.Generator, na: int, nb: int, covered: bool = True) -> Graph:
    """Random bipartite graph on parts 0..na-1 and na..na+nb-1; with ``covered`` no vertex is isolated."""
    m = rng.random((na, nb)) < rng.uniform(0.2, 0.8)
    if covered:
        for i in range(na):
            if not m[i].any():
                m[i, rng.integers(nb)] = True
        for j in range(nb):
            if not m[:, j].any():
                m[rng.integers(na), j] = True
    return Graph.from_edges(na + nb, [(i, na + j) for i in range(na) for j in range(nb) if m[i, j]])


def atlas_graphs(max_n: int = 7) -> list[Graph]:
    """Every graph on 1..max_n vertices up to isomorphism (networkx atlas, max_n <= 7)."""
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() <= max_n:
            out.append(Graph.from_edges(h.number_of_nodes(), list(h.edges())))
    return out


# ------------------------------------------------------------------ criteria

def criterion_1(seed: int = 0) -> Check:
    rng = _rng(seed, 1)
    worst = 0.0
    for n in range(2, 9):
        g = complete(n)
        for _ in range(20):
            p = rng.dirichlet(np.ones(n))
            h = entropy(p)
            worst = max(worst, abs(entropy_fw(g, p).value - h), abs(entropy_am(g, p).value - h))
    return Check(1, "complete graph entropy equals H(P), both solvers", worst <= 1e-6, 0.0, worst, 1e-6,
                 "max deviation over n=2..8, 20 distributions each")


def criterion_2(seed: int = 0) -> Check:
    target = math.log2(2.5)
    c5 = entropy_fw(cycle(5), uniform(5)).value
    pet = entropy_fw(petersen(), uniform(10)).value
    chi_c5 = fractional_chromatic_number(cycle(5)).value
    chi_pet = fractional_chromatic_number(petersen()).value
    alpha_pet = bin(max_weight_independent_set(petersen(), [1.0] * 10)[0]).count("1")
    exact = chi_c5 == Fraction(5, 2) == chi_pet == Fraction(10, alpha_pet)
    dev = max(abs(c5 - target), abs(pet - target), abs(c5 - math.log2(chi_c5)))
    return Check(2, "vertex-transitive uniform entropies equal log chi_f", dev <= 1e-6 and exact,
                 {"value_bits": target, "chi_f": "5/2"},
                 {"C5": c5, "petersen": pet, "chi_f_C5": str(chi_c5), "chi_f_petersen": str(chi_pet)}, 1e-6)


def criterion_3(seed: int = 0) -> Check:
    lg, _ = line_graph(fig52())
    h = entropy_fw(lg, uniform(lg.n)).value
    chi_edge = fractional_edge_chromatic(fig52())
    chi_line = fractional_chromatic_number(lg).value
    gap = math.log2(chi_line) - h
    reference_gap = math.log2(3.5) - LINE_GRAPH_VALUE
    ok = abs(h - LINE_GRAPH_VALUE) <= 1e-3 and chi_edge == Fraction(7, 2) and abs(gap - reference_gap) <= 1e-3
    return Check(3, "line graph of the bridged cubic graph", ok,
                 {"value_bits": LINE_GRAPH_VALUE, "chi_f_edge": "7/2", "gap": reference_gap},
                 {"value_bits": h, "chi_f_edge": str(chi_edge), "gap": gap}, 1e-3)


def bipartite_corpus(seed: int = 0) -> list[Graph]:
    """Bipartite graphs without isolated vertices, n <= 12."""
    graphs = [g for g in atlas_graphs(7) if bipartition(g) is not None and min(g.degrees()) > 0]
    graphs += [cycle(n) for n in range(4, 13, 2)]
    graphs += [path(n) for n in range(8, 13)]
    graphs += [star(k) for k in range(7, 12)]
    graphs += [complete_multipartite(a, b) for a in range(1, 12) for b in range(a, 13 - a) if a + b > 7]
    graphs += [disjoint_union(cycle(4), cycle(6)), disjoint_union(path(4), star(3), cycle(4))]
    rng = _rng(seed, 4)
    for _ in range(20):
        na = int(rng.integers(2, 7))
        graphs.append(random_bipartite(rng, na, int(rng.integers(na, 13 - na))))
    return graphs


def criterion_4(seed: int = 0) -> Check:
    mismatches = []
    worst = 0.0
    corpus = bipartite_corpus(seed)
    for g in corpus:
        structural = check_bipartite_symmetric(g)
        numeric = numeric_symmetry_check(g, 1e-4)
        if structural.symmetric != numeric.symmetric:
            mismatches.append(g.edges())
        if structural.symmetric:
            worst = max(worst, abs(entropy_fw(g, uniform(g.n)).value - 1.0))
    ok = not mismatches and worst <= 1e-5
    return Check(4, "bipartite symmetry: perfect matching iff numeric symmetry", ok,
                 {"mismatches": 0, "value_bits": 1.0}, {"mismatches": len(mismatches), "max_deviation": worst},
                 1e-5, f"{len(corpus)} graphs")


def criterion_5(seed: int = 0) -> Check:
    c5 = cycle(5)
    _, h_u = min_entropy_coloring(c5, uniform(5))
    p = [0.3, 0.2, 0.2, 0.1, 0.2]
    _, h_p = min_entropy_coloring(c5, p)
    _, h_star = min_entropy_coloring(star(7), [0.5] + [1 / 14] * 7)
    ref_u, ref_p = entropy([0.4, 0.4, 0.2]), entropy([0.5, 0.4, 0.1])
    ex_u, ex_p = exhaustive_min_entropy(c5, uniform(5))[0], exhaustive_min_entropy(c5, p)[0]
    ok = (abs(h_u - ref_u) <= 1e-9 and abs(h_p - ref_p) <= 1e-9 and abs(h_u - ex_u) <= 1e-9
          and abs(h_p - ex_p) <= 1e-9 and abs(h_u - 1.52193) <= 1e-5 and abs(h_p - 1.36096) <= 1e-5
          and abs(h_star - 1.0) <= 1e-12)
    return Check(5, "chromatic entropy of the 5-cycle and the 7-star", ok,
                 {"C5_uniform": ref_u, "C5_p": ref_p, "star7": 1.0},
                 {"C5_uniform": h_u, "C5_p": h_p, "star7": h_star}, 1e-9)


def criterion_6(seed: int = 0) -> Check:
    rng = _rng(seed, 6)
    worst = -math.inf
    for _ in range(200):
        n = int(rng.integers(1, 11))
        g = random_graph(rng, n)
        p = rng.dirichlet(np.ones(n))
        _, alpha_p = max_weight_independent_set(g, p)
        hk = entropy_fw(g, p).value
        _, hchi = min_entropy_coloring(g, p)
        chi, _ = chromatic_number(g)
        chain = [-math.log2(alpha_p), hk, hchi, math.log2(chi)]
        worst = max(worst, *(chain[i] - chain[i + 1] for i in range(3)))
    return Check(6, "sandwich -log alpha(G,P) <= H_k <= H_chi <= log chi", worst <= 1e-5,
                 "all differences <= 0", worst, 1e-5, "200 random (G,P), n <= 10")


def criterion_7(seed: int = 0, sample: int | None = 50) -> Check:
    """Splitting gap vanishes exactly on perfect graphs; ``sample=None`` runs every graph with n <= 7."""
    rng = _rng(seed, 7)
    graphs = atlas_graphs(7)
    if sample is not None and sample < len(graphs):
        idx = np.sort(rng.choice(len(graphs), size=sample, replace=False))
        graphs = [graphs[i] for i in idx]
    perfect_worst = 0.0
    weakest_imperfect = math.inf
    n_imperfect = 0
    for g in graphs:
        gaps = [abs(splitting_gap(g, rng.dirichlet(np.ones(g.n)))) for _ in range(10)]
        if is_perfect(g):
            perfect_worst = max(perfect_worst, max(gaps))
        else:
            n_imperfect += 1
            weakest_imperfect = min(weakest_imperfect, max(gaps))
    ok = perfect_worst <= 1e-5 and (n_imperfect == 0 or weakest_imperfect > 1e-3)
    return Check(7, "splitting gap vanishes exactly on perfect graphs", ok,
                 {"perfect_max_gap": "<= 1e-5", "imperfect_min_of_max_gap": "> 1e-3"},
                 {"perfect_max_gap": perfect_worst,
                  "imperfect_min_of_max_gap": None if n_imperfect == 0 else weakest_imperfect},
                 1e-5, f"{len(graphs)} graphs, {n_imperfect} imperfect")


def grundy_corpus() -> list[tuple[str, Graph]]:
    out = [(f"path{n}", path(n)) for n in range(1, 11)]
    out += [(f"cycle{n}", cycle(n)) for n in range(3, 11)]
    out += [(f"star{k}", star(k)) for k in range(1, 10)]
    out += [("petersen", petersen()), ("fig51", fig51())]
    return out


def criterion_8(seed: int = 0) -> Check:
    rng = _rng(seed, 8)
    failures = []
    for name, g in grundy_corpus():
        gamma, _ = grundy_number(g)
        report = max_chi_H(g)
        if not report.verified or chi_H(g, report.witness) != gamma:
            failures.append(f"{name}: witness")
        for _ in range(50):
            if chi_H(g, rng.dirichlet(np.ones(g.n))) > gamma:
                failures.append(f"{name}: random exceeds")
                break
    return Check(8, "max over P of chi_H equals the Grundy number", not failures, [], failures, None,
                 f"{len(grundy_corpus())} graphs")


def criterion_9(seed: int = 0) -> Check:
    actual, expected = {}, {}
    for v, r in [(4, 2), (5, 2), (6, 2)]:
        g, _ = kneser(v, r)
        actual[f"K({v}:{r})"] = chi_H(g, uniform(g.n))
        expected[f"K({v}:{r})"] = chromatic_number(g)[0]
    return Check(9, "Kneser graphs: chi_H(U) equals chi", actual == expected, expected, actual, None)


def criterion_10(seed: int = 0) -> Check:
    ok = True
    actual = {}
    for name, g in [("K2", complete(2)), ("K3", complete(3)), ("C5", cycle(5)), ("C4", cycle(4))]:
        log_chi_f = math.log2(fractional_chromatic_number(g).value)
        seq = [math.log2(chromatic_number(conormal_power(g, k))[0]) / k for k in (1, 2)]
        ok &= all(s >= log_chi_f - 1e-9 for s in seq) and seq[1] <= seq[0] + 1e-12
        actual[name] = {"seq": seq, "log_chi_f": log_chi_f}
    return Check(10, "(1/n) log chi of conormal powers bounds log chi_f and decreases", ok,
                 "seq >= log chi_f, nonincreasing", actual, 1e-9)


def criterion_11(seed: int = 0) -> Check:
    rng = _rng(seed, 11)
    worst = 0.0
    for _ in range(500):
        n = int(rng.integers(1, 11))
        g = random_graph(rng, n)
        p = rng.dirichlet(np.ones(n))
        worst = max(worst, abs(entropy_fw(g, p, 1e-7).value - entropy_am(g, p, 1e-7).value))
    return Check(11, "Frank-Wolfe and alternating minimisation agree", worst <= 2e-7, 0.0, worst, 2e-7,
                 "500 random (G,P), n <= 10")


def criterion_12(seed: int = 0) -> Check:
    rng = _rng(seed, 12)
    shearer_ok = bregman_ok = True
    for _ in range(1000):
        size = int(rng.integers(1, 60))
        raw = {tuple(int(c) for c in rng.integers(0, 6, size=3)) for _ in range(size)}
        shearer_ok &= shearer_check(PointSet3D(tuple(sorted(raw)))).holds
    for _ in range(1000):
        k = int(rng.integers(1, 8))
        bregman_ok &= bregman_bound(random_bipartite(rng, k, k), part_a=(1 << k) - 1).holds
    k33 = bregman_bound(complete_multipartite(3, 3))
    equality = k33.count == 6 and abs(k33.bound - 6) <= 1e-9
    return Check(12, "Shearer and Bregman bounds hold; K_{3,3} is tight", shearer_ok and bregman_ok and equality,
                 {"shearer": True, "bregman": True, "K33": [6, 6.0]},
                 {"shearer": shearer_ok, "bregman": bregman_ok, "K33": [k33.count, k33.bound]}, 1e-9)


CRITERIA: dict[int, Callable[..., Check]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5, 6: criterion_6,
    7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10, 11: criterion_11, 12: criterion_12,
}

SUITES = {
    "paper": (2, 3, 5, 9),
    "properties": (1, 4, 6, 7, 8, 10, 11, 12),
    "all": tuple(range(1, 13)),
}


def run_suite(suite: str, seed: int = 0, full: bool = False) -> list[Check]:
    """Run a named suite in criterion order; ``full`` makes criterion 7 cover every small graph."""
    if suite not in SUITES:
        raise KeyError(suite)
    out = []
    for number in SUITES[suite]:
        if number == 7:
            out.append(criterion_7(seed, sample=None if full else 50))
        else:
            out.append(CRITERIA[number](seed))
    return out


__all__ = ["Check", "CRITERIA", "SUITES", "run_suite", "atlas_graphs", "random_graph", "random_bipartite",
           "bipartite_corpus", "grundy_corpus"]
