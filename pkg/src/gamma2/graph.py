"""Simple undirected graphs on contiguous integer vertices.

Vertices are always 0..n-1.  Adjacency is stored as one sorted tuple of
neighbours per vertex; ``Graph`` objects are immutable after construction
and safe to share between threads.  All other modules build on this one.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

#: A set of vertices of some host graph (plain frozenset of ints).
VertexSet = frozenset[int]


class Graph:
    """Immutable simple graph.

    Do not call the constructor with untrusted data; it assumes the
    adjacency is already symmetric and loop-free.  Use :func:`from_edges`
    to build a graph from an edge list with full validation.
    """

    __slots__ = ("n", "_adj", "_m")

    def __init__(self, n: int, adjacency: Iterable[Iterable[int]]):
        adj = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows, expected {n}")
        self.n = n
        self._adj = adj
        self._m = sum(len(row) for row in adj) // 2

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        # adjacency rows are short; linear scan beats bisect in practice
        return v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("minimum degree of the empty graph is undefined")
        return min(len(row) for row in self._adj)

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("maximum degree of the empty graph is undefined")
        return max(len(row) for row in self._adj)

    def adjacency_masks(self) -> list[int]:
        """Neighbourhoods as bitmasks, one int per vertex."""
        return [sum(1 << u for u in row) for row in self._adj]

    # -- dunder plumbing --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list.

    Duplicate edges (in either orientation) are collapsed.  Self-loops and
    out-of-range endpoints are rejected; the error message reports the
    position of the offending pair.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for idx, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(
                f"edge #{idx} ({u}, {v}) has an endpoint outside 0..{n - 1}"
            )
        if u == v:
            raise ValueError(f"edge #{idx} ({u}, {v}) is a self-loop")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``s``, relabelled to 0..|s|-1.

    Returns the subgraph together with the mapping from new labels back to
    the original vertices (``mapping[new] == old``), in sorted order.
    """
    mapping = sorted(set(s))
    for v in mapping:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    position = {old: new for new, old in enumerate(mapping)}
    adj = [
        [position[u] for u in g.neighbors(old) if u in position]
        for old in mapping
    ]
    return Graph(len(mapping), adj), mapping


def power(g: Graph, k: int) -> Graph:
    """k-th graph power: join vertices at distance 1..k (BFS per vertex)."""
    if k < 1:
        raise ValueError(f"power exponent must be >= 1, got {k}")
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for source in range(g.n):
        dist = {source: 0}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            if dist[v] == k:
                continue
            for u in g.neighbors(v):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        adj[source] = set(dist) - {source}
    return Graph(g.n, adj)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum."""
    seen = [False] * g.n
    out: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    """True iff no edge of ``g`` joins two vertices of ``s``."""
    ss = set(s)
    for v in ss:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    return all(u not in ss for v in ss for u in g.neighbors(v))
