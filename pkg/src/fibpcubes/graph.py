"""Materialized gap-constrained subgraphs of the hypercube.

Vertices are the p-valid strings of length n; two are adjacent when they
differ in exactly one coordinate.  Adjacency is found by clearing each set
bit and looking the result up in the vertex index, so construction costs
O(|V| * n) lookups and never scans vertex pairs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import SizeLimitError
from .sequences import pfib
from .strings import PString, enumerate_pstrings

DEFAULT_GRAPH_CAP = 24

# (lower-weight endpoint id, higher-weight endpoint id, direction 1..n)
Edge = tuple[int, int, int]


@dataclass
class PCubeGraph:
    """Explicit vertex set and adjacency; treat as immutable once built."""

    p: int
    n: int
    vertices: list[PString]
    index: dict[int, int]  # packed bits -> vertex id
    adjacency: list[list[int]]
    edges: list[Edge]
    edges_by_direction: list[list[Edge]]  # slot 0 unused, directions are 1-based

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def vertex_id(self, u: PString) -> int:
        if u.n != self.n:
            raise ValueError(f"vertex length {u.n} does not match n = {self.n}")
        vid = self.index.get(u.bits)
        if vid is None:
            raise ValueError(f"{u!r} is not a vertex of this graph")
        return vid

    def contains_bits(self, bits: int) -> bool:
        return bits in self.index


def build(p: int, n: int, cap: int = DEFAULT_GRAPH_CAP) -> PCubeGraph:
    """Materialize the graph for (p, n); refuses n beyond cap."""
    if n > cap:
        raise SizeLimitError(f"n = {n} exceeds the graph cap {cap}")
    vertices = enumerate_pstrings(p, n, cap=max(cap, n))
    index = {v.bits: i for i, v in enumerate(vertices)}
    adjacency: list[list[int]] = [[] for _ in vertices]
    edges: list[Edge] = []
    edges_by_direction: list[list[Edge]] = [[] for _ in range(n + 1)]
    for hi_id, v in enumerate(vertices):
        bits = v.bits
        rest = bits
        while rest:  # each edge is discovered once, from its 1-endpoint
            low = rest & -rest
            rest ^= low
            lo_id = index.get(bits ^ low)
            if lo_id is not None:
                direction = n - low.bit_length() + 1
                edge = (lo_id, hi_id, direction)
                edges.append(edge)
                edges_by_direction[direction].append(edge)
                adjacency[lo_id].append(hi_id)
                adjacency[hi_id].append(lo_id)
    for neighbours in adjacency:
        neighbours.sort()
    edges.sort()
    for per_direction in edges_by_direction:
        per_direction.sort()
    return PCubeGraph(p, n, vertices, index, adjacency, edges, edges_by_direction)


def direction_edge_count(g: PCubeGraph, i: int) -> int:
    """Number of edges of g whose endpoints differ at coordinate i."""
    if not 1 <= i <= g.n:
        raise ValueError(f"direction {i} outside [1, {g.n}]")
    return len(g.edges_by_direction[i])


def direction_edge_count_closed(p: int, n: int, i: int) -> int:
    """Closed form F^p_i * F^p_{n-i+1} for the direction-i edge count."""
    if not 1 <= i <= n:
        raise ValueError(f"direction {i} outside [1, {n}]")
    return pfib(p, i) * pfib(p, n - i + 1)


def total_edges_closed(p: int, n: int) -> int:
    """Closed form for the size of the graph: sum of F^p_i F^p_{n-i+1}."""
    return sum(pfib(p, i) * pfib(p, n - i + 1) for i in range(1, n + 1))


def bfs_distances(g: PCubeGraph, source: int) -> list[int]:
    """Exact unweighted shortest-path distances from a vertex id."""
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for w in adjacency[v]:
            if dist[w] < 0:
                dist[w] = dv + 1
                queue.append(w)
    return dist


def hamming(a: PString, b: PString) -> int:
    return (a.bits ^ b.bits).bit_count()


def _label(v: PString) -> str:
    return v.to01() or "λ"


def to_dot(g: PCubeGraph) -> str:
    """DOT rendering with bit-string vertex labels, deterministic order."""
    lines = [f"graph pcube_p{g.p}_n{g.n} {{"]
    for v in g.vertices:
        lines.append(f'  "{_label(v)}";')
    for lo, hi, _ in g.edges:
        lines.append(f'  "{_label(g.vertices[lo])}" -- "{_label(g.vertices[hi])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json(g: PCubeGraph) -> dict:
    """Adjacency-list document; every number is a decimal string."""
    return {
        "p": str(g.p),
        "n": str(g.n),
        "vertices": [v.to01() for v in g.vertices],
        "adjacency": [[str(w) for w in nbrs] for nbrs in g.adjacency],
        "edges": [
            {"lo": str(lo), "hi": str(hi), "direction": str(d)}
            for lo, hi, d in g.edges
        ],
    }
