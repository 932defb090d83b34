from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gent.counting import (
    PointSet3D,
    bregman_bound,
    count_perfect_matchings,
    permanent,
    shearer_check,
)
from gent.errors import CapExceeded, InvalidInput, NotBipartite
from gent.graph import Graph, complete_multipartite, cycle, path
from gent.verify import random_bipartite


def test_shearer_examples():
    cube = PointSet3D(tuple(itertools.product((0, 1), repeat=3)))
    r = shearer_check(cube)
    assert (r.n, r.n1, r.n2, r.n3) == (8, 4, 4, 4) and r.holds
    r = shearer_check(PointSet3D(((1, 2, 3),)))
    assert (r.n, r.n1, r.n2, r.n3) == (1, 1, 1, 1) and r.holds


@given(st.sets(st.tuples(*[st.integers(0, 4)] * 3), min_size=1, max_size=100))
def test_shearer_always_holds(points):
    pts = PointSet3D(tuple(sorted(points)))
    r = shearer_check(pts)
    assert r.holds
    assert r.n1 == len({(y, z) for _, y, z in points})


def test_point_parsing():
    pts = PointSet3D.parse("# cube corner\n0 0 0\n\n1 0 0  # x\n")
    assert pts.points == ((0, 0, 0), (1, 0, 0))
    with pytest.raises(InvalidInput, match="line 2"):
        PointSet3D.parse("0 0 0\n1 2\n")
    with pytest.raises(InvalidInput, match="line 1"):
        PointSet3D.parse("a b c\n")
    with pytest.raises(InvalidInput):
        PointSet3D.parse("0 0 0\n0 0 0\n")
    with pytest.raises(InvalidInput):
        shearer_check(PointSet3D(()))


@pytest.mark.parametrize("g, count", [(complete_multipartite(3, 3), 6), (cycle(6), 2), (path(4), 1)])
def test_matching_counts(g, count):
    assert count_perfect_matchings(g) == count


def test_permanent_against_brute_force():
    rng = np.random.default_rng(5)
    for n in range(1, 6):
        m = rng.integers(0, 3, size=(n, n))
        brute = sum(math.prod(m[i, s[i]] for i in range(n)) for s in itertools.permutations(range(n)))
        assert permanent(m) == brute
    assert permanent(np.zeros((0, 0))) == 1


def test_bregman_examples():
    r = bregman_bound(complete_multipartite(3, 3))
    assert r.count == 6 and r.bound == pytest.approx(6.0) and r.holds
    r = bregman_bound(cycle(6))
    assert r.count == 2 and r.bound == pytest.approx(2 ** 1.5) and r.holds


def test_errors():
    # the first part {0, 1} holds vertex 1 with no neighbours
    g = Graph.from_edges(4, [(0, 2), (0, 3)])
    with pytest.raises(InvalidInput, match="isolated vertex"):
        bregman_bound(g, part_a=0b0011)
    with pytest.raises(InvalidInput):
        count_perfect_matchings(path(3))
    with pytest.raises(NotBipartite):
        count_perfect_matchings(cycle(5))
    with pytest.raises(NotBipartite):
        count_perfect_matchings(cycle(4), part_a=0b0011)
    with pytest.raises(CapExceeded):
        count_perfect_matchings(cycle(30))


@given(st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_bregman_always_holds(k, seed):
    rng = np.random.default_rng(seed)
    g = random_bipartite(rng, k, k)
    r = bregman_bound(g, part_a=(1 << k) - 1)
    assert r.holds
