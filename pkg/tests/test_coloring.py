from __future__ import annotations

import math

import networkx as nx
import numpy as np
import pytest
from conftest import graph_and_dist, graphs, to_nx
from hypothesis import given

from gent.coloring import (
    Coloring,
    ColorSequence,
    chi_H,
    chromatic_entropy_lower_bound,
    chromatic_lower_bound,
    chromatic_number,
    clique_entropy,
    exhaustive_min_entropy,
    grundy_number,
    max_chi_H,
    min_entropy_coloring,
    min_entropy_details,
)
from gent.combinatorics import clique_number
from gent.corner import entropy_fw
from gent.errors import CapExceeded, InvalidInput
from gent.graph import (
    complete,
    conormal_power,
    cycle,
    empty,
    kneser,
    mask_of,
    path,
    petersen,
    star,
)
from gent.prob import entropy, uniform


@pytest.mark.parametrize(
    "g, expected",
    [(cycle(5), 3), (petersen(), 3), (complete(4), 4), (empty(3), 1), (cycle(6), 2)],
)
def test_chromatic_number_examples(g, expected):
    k, col = chromatic_number(g)
    assert k == expected and col.k == k and col.is_proper(g)


def test_chromatic_number_of_c5_square():
    k, col = chromatic_number(conormal_power(cycle(5), 2))
    assert k == 8 and col.is_proper(conormal_power(cycle(5), 2))


@given(graphs(max_n=8))
def test_chromatic_number_against_brute_force(g):
    k, col = chromatic_number(g)
    assert col.is_proper(g)
    assert chromatic_lower_bound(g) <= k
    assert clique_number(g) <= k
    # no proper colouring with k-1 colours exists
    nxg = to_nx(g)
    assert k - 1 < 1 or not _colourable(nxg, k - 1)


def _colourable(h: nx.Graph, k: int) -> bool:
    nodes = list(h.nodes)
    colour: dict[int, int] = {}

    def rec(i: int) -> bool:
        if i == len(nodes):
            return True
        v = nodes[i]
        for c in range(k):
            if all(colour.get(u) != c for u in h[v]):
                colour[v] = c
                if rec(i + 1):
                    return True
                del colour[v]
        return False

    return rec(0)


@pytest.mark.parametrize(
    "g, expected",
    [(path(4), 3), (complete(5), 5), (empty(4), 1), (cycle(6), 3), (star(3), 2)],
)
def test_grundy_examples(g, expected):
    gamma, col = grundy_number(g)
    assert gamma == expected
    assert col.is_proper(g) and col.is_grundy(g)


@given(graphs(max_n=7))
def test_grundy_at_least_chromatic(g):
    gamma, col = grundy_number(g)
    assert chromatic_number(g)[0] <= gamma <= max(g.degrees(), default=0) + 1
    assert col.is_grundy(g)


def test_min_entropy_examples():
    col, h = min_entropy_coloring(cycle(5), uniform(5))
    assert h == pytest.approx(entropy([0.4, 0.4, 0.2]), abs=1e-12)
    assert sorted(len(c) for c in col.to_json()["classes"]) == [1, 2, 2]
    col, h = min_entropy_coloring(star(7), uniform(8))
    assert h == pytest.approx(entropy([7 / 8, 1 / 8]), abs=1e-12)
    _, h = min_entropy_coloring(complete(3), [0.5, 0.25, 0.25])
    assert h == pytest.approx(1.5)


def test_not_every_grundy_coloring_is_optimal():
    g = cycle(6)
    p = np.array([0.4, 0.05, 0.4, 0.05, 0.05, 0.05])
    two = Coloring((mask_of([0, 2, 4]), mask_of([1, 3, 5])))
    three = Coloring((mask_of([0, 3]), mask_of([2, 5]), mask_of([1, 4])))
    for col in (two, three):
        assert col.is_proper(g) and col.is_grundy(g)
    assert two.entropy(p) == pytest.approx(entropy([0.85, 0.15]), abs=1e-12)
    assert three.entropy(p) == pytest.approx(entropy([0.45, 0.45, 0.1]), abs=1e-12)
    assert two.entropy(p) < three.entropy(p)
    assert min_entropy_coloring(g, p)[1] == pytest.approx(two.entropy(p), abs=1e-12)


def test_chi_h_can_exceed_chi():
    # heavy ends of path 4 want one shared class, which forces three classes
    p = np.array([0.45, 0.05, 0.05, 0.45])
    assert chromatic_number(path(4))[0] == 2
    assert chi_H(path(4), p) == 3
    assert min_entropy_coloring(path(4), p)[1] == pytest.approx(entropy([0.9, 0.05, 0.05]), abs=1e-12)


@pytest.mark.parametrize("v, r, chi", [(4, 1, 4), (5, 2, 3), (6, 2, 4)])
def test_kneser_chi_h_equals_chi(v, r, chi):
    g, _ = kneser(v, r)
    assert chi_H(g, uniform(g.n)) == chi


@given(graph_and_dist(max_n=8))
def test_pruned_search_matches_exhaustive(gp):
    g, p = gp
    details = min_entropy_details(g, p)
    h, k = exhaustive_min_entropy(g, p)
    assert details.value == pytest.approx(h, abs=1e-9)
    assert details.chi_h == k
    col = details.coloring
    assert col.is_proper(g) and col.is_grundy(g)
    assert col.entropy(p) == pytest.approx(details.value, abs=1e-12)


@given(graph_and_dist(max_n=8))
def test_entropy_sandwich(gp):
    g, p = gp
    h_chi = min_entropy_coloring(g, p)[1]
    hk = entropy_fw(g, p).value
    assert clique_entropy(g, p) <= hk + 2e-7
    assert hk <= h_chi + 2e-7
    assert h_chi <= entropy(p) + 1e-12


@given(graph_and_dist(max_n=8))
def test_chi_h_at_most_max_degree_plus_one(gp):
    g, p = gp
    assert chi_H(g, p) <= max(g.degrees(), default=0) + 1
    assert chi_H(g, p) <= grundy_number(g)[0]


@pytest.mark.parametrize("g", [cycle(6), complete(3), path(4), star(3)])
def test_max_chi_h_witness(g):
    rep = max_chi_H(g)
    assert rep.value == grundy_number(g)[0]
    assert rep.verified
    assert chi_H(g, rep.witness) == rep.value


def test_chromatic_entropy_lower_bound():
    assert chromatic_entropy_lower_bound(cycle(5)) == pytest.approx(math.log2(2.5))
    assert chromatic_entropy_lower_bound(complete(4)) == pytest.approx(2.0)
    g, _ = kneser(5, 2)
    assert chromatic_entropy_lower_bound(g) <= min_entropy_coloring(g, uniform(10))[1]


def test_color_sequence_validation_and_majorisation():
    a = ColorSequence((0.5, 0.5))
    b = ColorSequence((0.4, 0.4, 0.2))
    assert a.dominates(b) and not b.dominates(a)
    assert a.entropy() < b.entropy()
    with pytest.raises(InvalidInput):
        ColorSequence((0.2, 0.8))
    with pytest.raises(InvalidInput):
        ColorSequence((0.5, 0.4))


def test_caps():
    with pytest.raises(CapExceeded):
        min_entropy_coloring(cycle(17), uniform(17))
    with pytest.raises(CapExceeded):
        grundy_number(cycle(13))
