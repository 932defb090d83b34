"""Simple undirected graphs stored as adjacency bitrows.

Vertex sets are plain Python ints used as bitmasks over ``0..n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import config
from .errors import CapExceeded, GraphParseError, InvalidInput


def bits(mask: int) -> list[int]:
    """Sorted list of the indices set in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``; ``adj[v]`` is the neighbour mask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise InvalidInput("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidInput(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise InvalidInput(f"self-loop at {v}")
        a = self.matrix()
        if not np.array_equal(a, a.T):
            u, v = np.argwhere(a != a.T)[0]
            raise InvalidInput(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInput(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, a) -> "Graph":
        a = np.asarray(a, dtype=bool)
        packed = np.packbits(a, axis=1, bitorder="little")
        return cls(a.shape[0], tuple(int.from_bytes(row.tobytes(), "little") for row in packed))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees())

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def neighborhood(self, mask: int) -> int:
        """Union of neighbour masks of the vertices in ``mask``."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def is_clique(self, mask: int) -> bool:
        return all((self.adj[v] | 1 << v) & mask == mask for v in bits(mask))

    def induced(self, mask: int) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``mask`` plus the list of original vertex ids."""
        keep = bits(mask)
        if not keep:
            raise InvalidInput("induced subgraph on the empty set")
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(mask_of(index[u] for u in bits(self.adj[v] & mask)))
        return Graph(len(keep), tuple(rows)), keep

    def matrix(self) -> np.ndarray:
        nbytes = (self.n + 7) // 8
        raw = b"".join(row.to_bytes(nbytes, "little") for row in self.adj)
        packed = np.frombuffer(raw, dtype=np.uint8).reshape(self.n, nbytes)
        return np.unpackbits(packed, axis=1, count=self.n, bitorder="little").astype(bool)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------- DIMACS I/O

def parse_graph(text: str) -> Graph:
    """Parse DIMACS edge format (``c``, ``p edge n m``, ``e u v``; 1-indexed)."""
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphParseError(f"expected 'p edge n m', got {line!r}", lineno)
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise GraphParseError(f"non-integer size in {line!r}", lineno) from None
            if n < 1:
                raise GraphParseError("vertex count must be >= 1", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise GraphParseError(f"expected 'e u v', got {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(f"non-integer endpoint in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"endpoint out of range 1..{n} in {line!r}", lineno)
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u}", lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise GraphParseError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise GraphParseError("missing 'p edge n m' line")
    return Graph.from_edges(n, sorted(edges))


def format_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- generators

# Fig. 5.1 (triangular prism) and Fig. 5.2 (two K4-minus-an-edge blocks joined
# by the bridge v5v6), transcribed from the figure drawings with v_i -> i-1.
_FIG51_EDGES = [(1, 2), (2, 3), (3, 1), (1, 4), (4, 6), (6, 5), (5, 4), (5, 2), (6, 3)]
_FIG52_EDGES = [
    (1, 3), (1, 2), (1, 4), (3, 2), (3, 4), (2, 5), (4, 5), (5, 6),
    (6, 7), (6, 8), (7, 9), (8, 9), (9, 10), (7, 10), (8, 10),
]


def _one_based(n: int, edges) -> Graph:
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInput("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidInput("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidInput("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    if n < 1:
        raise InvalidInput("empty graph needs n >= 1")
    return Graph(n, (0,) * n)


def complete_multipartite(*sizes: int) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise InvalidInput("complete_multipartite needs part sizes >= 1")
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    if k < 1:
        raise InvalidInput("star needs k >= 1")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def kneser(v: int, r: int) -> tuple[Graph, list[tuple[int, ...]]]:
    """K_{v:r}; vertices are the r-subsets of range(v) in lexicographic order."""
    if r < 1 or v < 2 * r:
        raise InvalidInput(f"kneser needs r >= 1 and v >= 2r (got v={v}, r={r})")
    subsets = list(combinations(range(v), r))
    masks = [mask_of(s) for s in subsets]
    edges = [(i, j) for i, j in combinations(range(len(subsets)), 2) if not masks[i] & masks[j]]
    return Graph.from_edges(len(subsets), edges), subsets


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def fig51() -> Graph:
    return _one_based(6, _FIG51_EDGES)


def fig52() -> Graph:
    return _one_based(10, _FIG52_EDGES)


_FAMILIES = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "empty": (empty, 1),
    "complete_multipartite": (complete_multipartite, None),
    "star": (star, 1),
    "kneser": (lambda v, r: kneser(v, r)[0], 2),
    "petersen": (petersen, 0),
    "fig51": (fig51, 0),
    "fig52": (fig52, 0),
}

FAMILIES = tuple(_FAMILIES)


def generate(family: str, *params: int) -> Graph:
    """Build a named graph, e.g. ``generate("kneser", 5, 2)``."""
    try:
        fn, arity = _FAMILIES[family]
    except KeyError:
        raise InvalidInput(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    if arity is not None and len(params) != arity:
        raise InvalidInput(f"{family} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*(int(p) for p in params))


# ---------------------------------------------------------------- operations

def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def union_graphs(f: Graph, g: Graph) -> Graph:
    if f.n != g.n:
        raise InvalidInput(f"vertex count mismatch: {f.n} vs {g.n}")
    return Graph(f.n, tuple(a | b for a, b in zip(f.adj, g.adj)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def substitute(g: Graph, v: int, f: Graph) -> Graph:
    """Replace vertex ``v`` of ``g`` by a copy of ``f`` joined to v's neighbours.

    The result keeps the other vertices of ``g`` in order and appends the
    vertices of ``f`` at the end.
    """
    if not 0 <= v < g.n:
        raise InvalidInput(f"vertex {v} out of range for n={g.n}")
    keep = [u for u in range(g.n) if u != v]
    index = {u: i for i, u in enumerate(keep)}
    base = len(keep)
    edges = [(index[a], index[b]) for a, b in g.edges() if v not in (a, b)]
    edges += [(base + a, base + b) for a, b in f.edges()]
    for u in g.neighbors(v):
        edges += [(index[u], base + x) for x in range(f.n)]
    return Graph.from_edges(base + f.n, edges)


def _check_power_size(size: int, cap: int | None):
    limit = config.cap("power_vertices", cap)
    if size > limit:
        raise CapExceeded("product graph vertices", size, limit)


def or_product(g1: Graph, g2: Graph, cap: int | None = None) -> Graph:
    """OR (co-normal) product; vertex ``(a, b)`` is ``a * g2.n + b``."""
    _check_power_size(g1.n * g2.n, cap)
    non1 = ~g1.matrix()
    non2 = ~g2.matrix()
    return Graph.from_matrix(~np.kron(non1, non2))


def conormal_power(g: Graph, k: int, cap: int | None = None) -> Graph:
    """k-th conormal power; tuples are flattened in row-major order."""
    if k < 1:
        raise InvalidInput("power needs k >= 1")
    _check_power_size(g.n ** k, cap)
    non = ~g.matrix()
    acc = non
    for _ in range(k - 1):
        acc = np.kron(acc, non)
    return Graph.from_matrix(~acc)


def normal_power(g: Graph, k: int, cap: int | None = None) -> Graph:
    """k-th normal (strong) power; distinct tuples adjacent when every coordinate is equal or adjacent."""
    if k < 1:
        raise InvalidInput("power needs k >= 1")
    _check_power_size(g.n ** k, cap)
    closed = g.matrix() | np.eye(g.n, dtype=bool)
    acc = closed
    for _ in range(k - 1):
        acc = np.kron(acc, closed)
    np.fill_diagonal(acc, False)
    return Graph.from_matrix(acc)


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph with vertices indexed by ``g.edges()`` (lexicographic)."""
    edge_list = g.edges()
    if not edge_list:
        raise InvalidInput("line graph of an edgeless graph")
    lg_edges = [
        (i, j)
        for i, j in combinations(range(len(edge_list)), 2)
        if set(edge_list[i]) & set(edge_list[j])
    ]
    return Graph.from_edges(len(edge_list), lg_edges), edge_list


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex i is vertex ``order[i]`` of g."""
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


def iter_subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0, in increasing order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask
