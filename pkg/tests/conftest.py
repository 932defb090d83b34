from __future__ import annotations

import networkx as nx
import numpy as np
from hypothesis import settings
from hypothesis import strategies as st

from gent.graph import Graph

settings.register_profile("default", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def graph_and_dist(draw, min_n: int = 1, max_n: int = 8):
    g = draw(graphs(min_n, max_n))
    weights = draw(st.lists(st.floats(0.01, 1.0), min_size=g.n, max_size=g.n))
    p = np.array(weights)
    return g, p / p.sum()


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
