from __future__ import annotations

import math

import numpy as np
import pytest
from conftest import graph_and_dist, graphs
from hypothesis import given

from gent.corner import (
    FractionalVertexPacking,
    UnitCorner,
    VertexPacking,
    antiblocker_identity_check,
    corner_entropy,
    entropy_am,
    entropy_fw,
    graph_entropy,
    max_entropy_distribution,
    mutual_information_of,
    splitting_gap,
)
from gent.errors import InvalidInput, NonConvergence
from gent.graph import (
    complement,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty,
    fig51,
    fig52,
    line_graph,
    petersen,
    star,
    substitute,
)
from gent.prob import binary_entropy, entropy, substitute_distribution, uniform

LOG25 = math.log2(2.5)


def test_unit_corner_is_shannon_entropy():
    res = corner_entropy(UnitCorner(3), [0.4, 0.4, 0.2])
    assert res.value == pytest.approx(entropy([0.4, 0.4, 0.2]), abs=1e-12)
    assert res.minimizer.tolist() == [0.4, 0.4, 0.2]


@pytest.mark.parametrize(
    "g, p, expected",
    [
        (complete(3), uniform(3), math.log2(3)),
        (cycle(5), uniform(5), LOG25),
        (complete_multipartite(2, 2), uniform(4), 1.0),
        (petersen(), uniform(10), LOG25),
        (complete(2), [0.5, 0.5], 1.0),
        (empty(4), [0.1, 0.2, 0.3, 0.4], 0.0),
        (star(3), uniform(4), binary_entropy(0.25)),
    ],
)
def test_known_values_both_solvers(g, p, expected):
    fw = entropy_fw(g, p)
    am = entropy_am(g, p)
    assert fw.value == pytest.approx(expected, abs=2e-7)
    assert am.value == pytest.approx(expected, abs=2e-7)
    assert fw.gap <= 1e-7 and am.gap <= 1e-7


def test_c5_minimizer_is_symmetric_point():
    res = entropy_fw(cycle(5), uniform(5))
    assert np.allclose(res.minimizer, 0.4, atol=1e-6)


def test_line_graph_of_fig52():
    lg, _ = line_graph(fig52())
    assert entropy_fw(lg, uniform(15)).value == pytest.approx(1.75712, abs=1e-3)


@given(graph_and_dist(max_n=8))
def test_solvers_agree_and_certify(gp):
    g, p = gp
    fw = entropy_fw(g, p)
    am = entropy_am(g, p)
    assert abs(fw.value - am.value) <= 2e-7
    # result invariants: minimizer in VP(G), value equals the objective there
    assert VertexPacking(g).contains(fw.minimizer, 1e-9)
    assert fw.value == pytest.approx(-np.sum(p * np.log2(fw.minimizer)), abs=1e-10)
    assert fw.gap >= 0
    # the convex combination reproduces the minimizer
    recon = sum(lam * np.array([m >> v & 1 for v in range(g.n)]) for m, lam in fw.weights)
    assert np.allclose(recon, fw.minimizer, atol=1e-9)


@given(graph_and_dist(max_n=7))
def test_entropy_bounds(gp):
    g, p = gp
    h = entropy_fw(g, p).value
    assert -1e-9 <= h <= entropy(p) + 2e-7


@given(graph_and_dist(max_n=7))
def test_am_state_is_a_valid_channel(gp):
    g, p = gp
    res, state = entropy_am(g, p, return_state=True)
    q = state.q_cond
    sets = state.sets
    for i in range(g.n):
        for j, s in enumerate(sets):
            if not s >> i & 1:
                assert q[i, j] == 0
        if p[i] > 0:
            assert q[i].sum() == pytest.approx(1.0)
    assert mutual_information_of(p, state) == pytest.approx(res.value, abs=1e-6)


@given(graph_and_dist(max_n=4), graph_and_dist(max_n=4))
def test_disjoint_union_is_mass_weighted(gp1, gp2):
    (g1, p1), (g2, p2) = gp1, gp2
    u = disjoint_union(g1, g2)
    p = np.concatenate([0.3 * p1, 0.7 * p2])
    expected = 0.3 * entropy_fw(g1, p1).value + 0.7 * entropy_fw(g2, p2).value
    assert entropy_fw(u, p).value == pytest.approx(expected, abs=5e-7)


@given(graph_and_dist(min_n=2, max_n=5), graph_and_dist(max_n=3))
def test_substitution_lemma(gp, fq):
    g, p = gp
    f, q = fq
    v = 0
    sub = substitute(g, v, f)
    ps = substitute_distribution(p, v, q)
    expected = entropy_fw(g, p).value + p[v] * entropy_fw(f, q).value
    assert entropy_fw(sub, ps).value == pytest.approx(expected, abs=5e-7)


@given(graph_and_dist(max_n=6))
def test_subadditivity_under_union_with_complement(gp):
    g, p = gp
    assert splitting_gap(g, p) >= -2e-7


def test_splitting_gap_examples():
    assert abs(splitting_gap(cycle(4), uniform(4))) <= 2e-7
    assert abs(splitting_gap(complete(3), [0.2, 0.3, 0.5])) <= 2e-7
    # both summands are log 2.5 because C5 is self-complementary
    assert splitting_gap(cycle(5), uniform(5)) == pytest.approx(2 * LOG25 - math.log2(5), abs=2e-7)


@pytest.mark.parametrize("g", [cycle(5), complete(4), fig51(), star(3)])
def test_antiblocker_identity(g):
    rng = np.random.default_rng(g.n)
    assert antiblocker_identity_check(g, uniform(g.n), 1e-6)
    assert antiblocker_identity_check(g, rng.dirichlet(np.ones(g.n)), 1e-6)


def test_fvp_corner_equals_vp_on_perfect_graph():
    g = complement(cycle(6))
    p = np.random.default_rng(0).dirichlet(np.ones(6))
    vp = corner_entropy(VertexPacking(g), p)
    fvp = corner_entropy(FractionalVertexPacking(g), p)
    assert vp.value == pytest.approx(fvp.value, abs=2e-7)


def test_fvp_corner_is_smaller_for_c5():
    # FVP(C5) = VP(C5) because C5 has only edge cliques and its VP facets are richer
    fvp = corner_entropy(FractionalVertexPacking(cycle(5)), uniform(5))
    assert fvp.value <= entropy_fw(cycle(5), uniform(5)).value + 2e-7


def test_max_entropy_distribution():
    res = max_entropy_distribution(cycle(5), 1e-6)
    assert res.value == pytest.approx(LOG25, abs=1e-6)
    assert np.allclose(res.distribution, 0.2, atol=1e-3)
    res = max_entropy_distribution(star(3), 1e-6)
    assert res.value == pytest.approx(1.0, abs=1e-6)
    lg, _ = line_graph(fig52())
    res = max_entropy_distribution(lg, 1e-5)
    assert res.value == pytest.approx(math.log2(3.5), abs=1e-5)


def test_errors_and_budget():
    with pytest.raises(InvalidInput):
        entropy_fw(cycle(5), uniform(4))
    with pytest.raises(InvalidInput):
        entropy_fw(cycle(5), uniform(5), tol=0)
    with pytest.raises(InvalidInput):
        graph_entropy(cycle(5), uniform(5), method="newton")
    lg, _ = line_graph(fig52())
    with pytest.raises(NonConvergence) as info:
        entropy_fw(lg, uniform(15), budget=3)
    assert info.value.best is not None and info.value.best.value >= 1.75
    with pytest.raises(NonConvergence):
        entropy_am(lg, uniform(15), budget=3)


@given(graphs(max_n=6))
def test_graph_entropy_dispatch(g):
    p = uniform(g.n)
    assert graph_entropy(g, p, method="am").value == pytest.approx(graph_entropy(g, p).value, abs=2e-7)
