from __future__ import annotations

import math

import numpy as np
import pytest
from conftest import graph_and_dist
from hypothesis import given
from hypothesis import strategies as st

from gent.closed_forms import (
    bipartite_entropy,
    entropy_by_components,
    entropy_complete,
    entropy_complete_multipartite,
)
from gent.corner import entropy_fw
from gent.errors import CapExceeded, InvalidInput, NotBipartite
from gent.graph import (
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty,
    path,
    star,
)
from gent.prob import binary_entropy, uniform
from gent.verify import random_bipartite


def test_complete_graph_closed_form():
    assert entropy_complete(uniform(4)) == pytest.approx(2.0)
    assert entropy_complete([0.5, 0.25, 0.25]) == pytest.approx(1.5)
    assert entropy_complete([1.0, 0.0, 0.0]) == 0.0


def test_complete_multipartite_closed_form():
    assert entropy_complete_multipartite([2, 2], uniform(4)) == pytest.approx(1.0)
    assert entropy_complete_multipartite([1, 2], [0.5, 0.25, 0.25]) == pytest.approx(1.0)
    assert entropy_complete_multipartite([2, 3], uniform(5)) == pytest.approx(binary_entropy(0.4))
    with pytest.raises(InvalidInput):
        entropy_complete_multipartite([2, 2], uniform(5))


@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.data())
def test_complete_multipartite_matches_solver(sizes, data):
    n = sum(sizes)
    w = np.array(data.draw(st.lists(st.floats(0.05, 1.0), min_size=n, max_size=n)))
    p = w / w.sum()
    g = complete_multipartite(*sizes)
    assert entropy_complete_multipartite(sizes, p) == pytest.approx(entropy_fw(g, p).value, abs=2e-7)


def test_bipartite_examples():
    r = bipartite_entropy(cycle(6), uniform(6))
    assert r.condition_holds and r.value == pytest.approx(1.0)
    r = bipartite_entropy(star(3), uniform(4))
    assert r.condition_holds and r.value == pytest.approx(binary_entropy(0.25))
    # orientation does not matter: the leaves as A give the same value
    r2 = bipartite_entropy(star(3), uniform(4), part_a=0b1110)
    assert r2.value == pytest.approx(r.value)
    r = bipartite_entropy(cycle(4), [1 / 8, 1 / 4, 3 / 8, 1 / 4])
    assert r.value == pytest.approx(1.0)


def test_bipartite_peeling_when_condition_fails():
    # heavy ends against a light middle: path 4 splits into two edges
    r = bipartite_entropy(path(4), [0.4, 0.1, 0.1, 0.4])
    assert not r.condition_holds
    assert r.partition == [(0b0001, 0b0010), (0b0100, 0b1000)]
    assert r.value == pytest.approx(binary_entropy(0.2), abs=1e-12)
    assert r.solver_value == pytest.approx(r.value, abs=1e-6)


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_bipartite_formula_matches_solver(na, nb, seed):
    rng = np.random.default_rng(seed)
    g = random_bipartite(rng, na, nb)
    p = rng.dirichlet(np.ones(g.n))
    r = bipartite_entropy(g, p, cross_check=False)
    assert r.value == pytest.approx(entropy_fw(g, p).value, abs=1e-6)
    r_other = bipartite_entropy(g, p, part_a=(1 << na) - 1, cross_check=False)
    assert r_other.value == pytest.approx(r.value, abs=1e-9)


def test_bipartite_errors():
    with pytest.raises(NotBipartite):
        bipartite_entropy(cycle(5), uniform(5))
    with pytest.raises(InvalidInput):
        bipartite_entropy(disjoint_union(path(2), empty(1)), uniform(3))
    with pytest.raises(NotBipartite):
        bipartite_entropy(cycle(4), uniform(4), part_a=0b0011)
    with pytest.raises(CapExceeded):
        bipartite_entropy(cycle(26), uniform(26))


def test_components_examples():
    assert entropy_by_components(disjoint_union(cycle(4), cycle(6)), uniform(10)) == pytest.approx(1.0, abs=2e-7)
    g = disjoint_union(complete(3), empty(1))
    assert entropy_by_components(g, uniform(4)) == pytest.approx(0.75 * math.log2(3), abs=2e-7)
    assert entropy_by_components(g, uniform(4)) == pytest.approx(entropy_fw(g, uniform(4)).value, abs=2e-7)


@given(graph_and_dist(max_n=8))
def test_components_match_solver(gp):
    g, p = gp
    assert entropy_by_components(g, p) == pytest.approx(entropy_fw(g, p).value, abs=5e-7)
