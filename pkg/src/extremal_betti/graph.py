"""Simple graphs on the vertex universe [n] = {1, ..., n}.

Vertices are 1-indexed throughout. Edges are stored as sorted pairs
``(i, j)`` with ``i < j``. The support ``V(G)`` is the set of edge
endpoints, so a graph never has isolated vertices of its own; the rest of
``[n]`` is just the ambient universe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

INFINITY = math.inf

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


def _check_vertex(n: int, v: int) -> None:
    if not 1 <= v <= n:
        raise VertexOutOfRange(f"vertex {v} not in [1, {n}]")


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"n must be positive, got {self.n}")
        for i, j in self.edges:
            if i == j:
                raise LoopEdge(f"loop at vertex {i}")
            if i > j:
                raise GraphError(f"edge ({i}, {j}) is not normalized")
            _check_vertex(self.n, i)
            _check_vertex(self.n, j)

    def __contains__(self, pair) -> bool:
        i, j = pair
        return (min(i, j), max(i, j)) in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def vertices(self) -> frozenset[int]:
        """The support V(G): every endpoint of an edge."""
        return frozenset(v for e in self.edges for v in e)

    @cached_property
    def _adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(s) for v, s in adj.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjacency[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self._adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    @property
    def universe(self) -> range:
        return range(1, self.n + 1)

    def non_edges(self) -> Iterable[Edge]:
        for i, j in combinations(self.universe, 2):
            if (i, j) not in self.edges:
                yield (i, j)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> SimpleGraph:
        return new_graph(self.n, list(self.edges) + list(extra))

    def relabel(self, perm: dict[int, int]) -> SimpleGraph:
        """Image of the graph under the vertex map ``perm``."""
        return new_graph(self.n, [(perm[i], perm[j]) for i, j in self.edges])

    def bitmask(self) -> int:
        """Edge set encoded over the lexicographic list of all C(n, 2) pairs."""
        mask = 0
        for k, pair in enumerate(combinations(self.universe, 2)):
            if pair in self.edges:
                mask |= 1 << k
        return mask

    def __repr__(self) -> str:
        body = ",".join(f"{i}{j}" if self.n < 10 else f"{i}-{j}" for i, j in self.sorted_edges)
        return f"SimpleGraph(n={self.n}, {{{body}}})"


def new_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> SimpleGraph:
    """Build a graph on [n], normalizing and deduplicating the edge list."""
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    normalized = set()
    for i, j in edges:
        i, j = int(i), int(j)
        if i == j:
            raise LoopEdge(f"loop at vertex {i}")
        _check_vertex(n, i)
        _check_vertex(n, j)
        normalized.add((min(i, j), max(i, j)))
    return SimpleGraph(n, frozenset(normalized))


def graph_from_bitmask(n: int, mask: int) -> SimpleGraph:
    pairs = combinations(range(1, n + 1), 2)
    return SimpleGraph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def induced_subgraph(g: SimpleGraph, w: Iterable[int]) -> SimpleGraph:
    """G[W]: the edges of ``g`` with both endpoints in ``w``, same universe."""
    w = set(w)
    for v in w:
        _check_vertex(g.n, v)
    return SimpleGraph(g.n, frozenset(e for e in g.edges if e[0] in w and e[1] in w))


def connected_component_count(g: SimpleGraph) -> int:
    """Components of ``g`` on its support; isolated universe vertices are ignored."""
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    count = len(parent)
    for i, j in g.edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            count -= 1
    return count


def is_connected(g: SimpleGraph) -> bool:
    return connected_component_count(g) == 1


def is_disconnected(g: SimpleGraph) -> bool:
    return connected_component_count(g) >= 2


def girth(g: SimpleGraph) -> float:
    """Length of a shortest cycle, or ``INFINITY`` for a forest."""
    best = INFINITY
    for root in sorted(g.vertices):
        # BFS from every vertex; the first non-tree edge seen bounds the cycle through root
        dist = {root: 0}
        parent = {root: None}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for v in g.neighbors(u):
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        nxt.append(v)
                    elif parent[u] != v:
                        best = min(best, dist[u] + dist[v] + 1)
            frontier = nxt
    return int(best) if best != INFINITY else INFINITY


def count_triangles(g: SimpleGraph) -> int:
    count = 0
    for i, j in g.edges:
        # each triangle is seen once from each of its 3 edges
        count += len(g.neighbors(i) & g.neighbors(j))
    return count // 3


def count_4cycles(g: SimpleGraph) -> int:
    """Number of 4-cycles as subgraphs (not necessarily induced), each counted once."""
    total = 0
    verts = sorted(g.vertices)
    for a, b in combinations(verts, 2):
        common = len(g.neighbors(a) & g.neighbors(b))
        total += math.comb(common, 2)
    # every 4-cycle is counted once per diagonal pair, and it has two
    return total // 2


def max_degree(g: SimpleGraph) -> int:
    return max((g.degree(v) for v in g.vertices), default=0)


def is_matching(g: SimpleGraph) -> bool:
    """True when ``g`` is non-empty and every support vertex has degree 1."""
    return len(g.edges) > 0 and max_degree(g) == 1
