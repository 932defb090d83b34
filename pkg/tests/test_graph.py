from __future__ import annotations

import networkx as nx
import numpy as np
import pytest
from conftest import graphs, to_nx
from hypothesis import given

from gent.errors import CapExceeded, GraphParseError, InvalidInput
from gent.graph import (
    Graph,
    complement,
    complete,
    complete_multipartite,
    conormal_power,
    cycle,
    disjoint_union,
    empty,
    fig51,
    fig52,
    format_dimacs,
    generate,
    iter_subsets,
    kneser,
    line_graph,
    normal_power,
    or_product,
    parse_graph,
    path,
    petersen,
    relabel,
    star,
    substitute,
    union_graphs,
)


def test_petersen_matches_networkx():
    assert nx.is_isomorphic(to_nx(petersen()), nx.petersen_graph())


def test_kneser_5_2_is_petersen():
    g, subsets = kneser(5, 2)
    assert len(subsets) == 10 and subsets[0] == (0, 1)
    assert nx.is_isomorphic(to_nx(g), nx.petersen_graph())


def test_kneser_4_2_is_perfect_matching():
    g, _ = kneser(4, 2)
    assert g.m == 3 and g.degrees() == [1] * 6


def test_fig51_is_bridgeless_cubic_prism():
    g = fig51()
    assert g.degrees() == [3] * 6
    assert not list(nx.bridges(to_nx(g)))
    assert nx.is_isomorphic(to_nx(g), nx.circular_ladder_graph(3))


def test_fig52_is_cubic_with_one_bridge():
    g = fig52()
    assert g.degrees() == [3] * 10
    assert list(nx.bridges(to_nx(g))) in ([(4, 5)], [(5, 4)])


@pytest.mark.parametrize("n", [3, 4, 7])
def test_small_families(n):
    assert nx.is_isomorphic(to_nx(cycle(n)), nx.cycle_graph(n))
    assert nx.is_isomorphic(to_nx(path(n)), nx.path_graph(n))
    assert complete(n).m == n * (n - 1) // 2
    assert empty(n).m == 0
    assert star(n).degree(0) == n


def test_complete_multipartite_sizes():
    g = complete_multipartite(2, 3)
    assert nx.is_isomorphic(to_nx(g), nx.complete_bipartite_graph(2, 3))


def test_generate_dispatch_and_errors():
    assert generate("kneser", 5, 2) == kneser(5, 2)[0]
    assert generate("petersen") == petersen()
    with pytest.raises(InvalidInput):
        generate("nope")
    with pytest.raises(InvalidInput):
        generate("cycle")
    with pytest.raises(InvalidInput):
        kneser(3, 2)


def test_graph_validation():
    with pytest.raises(InvalidInput):
        Graph(2, (0b10, 0b00))
    with pytest.raises(InvalidInput):
        Graph(1, (0b1,))
    with pytest.raises(InvalidInput):
        Graph.from_edges(0, [])


def test_dimacs_roundtrip():
    g = petersen()
    assert parse_graph(format_dimacs(g, "petersen")) == g


@pytest.mark.parametrize(
    "text, line",
    [
        ("p edge 3 1\ne 1 4\n", 2),
        ("e 1 2\n", 1),
        ("c hi\np edge 3 1\ne 2 2\n", 3),
        ("p edge 3 1\nx 1 2\n", 2),
        ("p edge three 1\n", 1),
    ],
)
def test_dimacs_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_dimacs_requires_problem_line():
    with pytest.raises(GraphParseError):
        parse_graph("c only a comment\n")


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


@given(graphs(min_n=2, max_n=7))
def test_line_graph_matches_networkx(g):
    if g.m == 0:
        with pytest.raises(InvalidInput):
            line_graph(g)
        return
    lg, edges = line_graph(g)
    assert edges == g.edges()
    assert nx.is_isomorphic(to_nx(lg), nx.line_graph(to_nx(g)))


@given(graphs(max_n=4))
def test_conormal_square_is_complement_of_strong_product_of_complements(g):
    c = to_nx(complement(g))
    expected = nx.complement(nx.strong_product(c, c))
    assert nx.is_isomorphic(to_nx(conormal_power(g, 2)), expected)
    assert or_product(g, g) == conormal_power(g, 2)


@given(graphs(max_n=4))
def test_normal_square_is_strong_product(g):
    h = to_nx(g)
    assert nx.is_isomorphic(to_nx(normal_power(g, 2)), nx.strong_product(h, h))


def test_power_of_one_is_identity_and_cap():
    assert conormal_power(cycle(5), 1) == cycle(5)
    assert normal_power(cycle(5), 1) == cycle(5)
    with pytest.raises(CapExceeded):
        conormal_power(cycle(5), 6)
    with pytest.raises(InvalidInput):
        normal_power(cycle(5), 0)


def test_substitute_keeps_order_and_joins():
    g = substitute(path(3), 1, complete(2))
    # vertices: 0, 2 of the path, then the two copies of K2
    assert g.n == 4
    assert sorted(g.edges()) == [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_unions():
    assert union_graphs(path(3), complete(3)) == complete(3)
    d = disjoint_union(cycle(4), cycle(6))
    assert d.n == 10 and d.m == 10 and nx.number_connected_components(to_nx(d)) == 2


@given(graphs(max_n=6))
def test_relabel_preserves_isomorphism_class(g):
    order = list(reversed(range(g.n)))
    assert nx.is_isomorphic(to_nx(relabel(g, order)), to_nx(g))


def test_matrix_roundtrip_and_queries():
    g = petersen()
    assert Graph.from_matrix(g.matrix()) == g
    assert np.array_equal(g.matrix(), nx.to_numpy_array(to_nx(g), dtype=bool))
    assert g.is_independent(0b0000000101) and not g.is_independent(0b11)
    assert complete(3).is_clique(0b111)
    sub, keep = g.induced(0b11111)
    assert keep == [0, 1, 2, 3, 4] and sub == cycle(5)
    assert list(iter_subsets(0b101)) == [0, 1, 4, 5]
