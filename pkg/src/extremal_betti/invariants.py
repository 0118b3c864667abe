"""Combinatorial invariants of the weight graph that feed the Betti formulas.

Pair classification works on ordered-free pairs of vertex-disjoint edges
``(ij, pq)``. Looking only at the four "cross" pairs between the two edges:

* no cross edge: disconnected;
* one cross edge: a path of length 3 (type 1);
* two cross edges sharing an endpoint: a triangle with a whisker (type 2);
* anything else contains a 4-cycle through both edges.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations

from .graph import (
    Edge,
    GraphError,
    SimpleGraph,
    connected_component_count,
    count_4cycles,
    count_triangles,
    girth,
    induced_subgraph,
    max_degree,
)

# Conventions for the two counts whose definition leaves room for reading.
# The defaults are the ones confirmed against the local-cohomology oracle
# (see README, "Conventions").
S_COUNTS_UNCOVERED_VERTICES = False
F_DEDUPLICATES_VERTEX_SETS = True


class PairClass(enum.Enum):
    DISCONNECTED = 0
    TYPE1 = 1
    TYPE2 = 2
    FOUR_CYCLE_BOUND = 4


class NotDisjoint(GraphError):
    pass


class EdgeAbsent(GraphError):
    pass


def _norm(e) -> Edge:
    i, j = e
    return (min(i, j), max(i, j))


def _cross_edges(g: SimpleGraph, e1: Edge, e2: Edge) -> list[Edge]:
    (i, j), (p, q) = e1, e2
    return [(a, b) for a in (i, j) for b in (p, q) if (a, b) in g]


def classify_pair(g: SimpleGraph, e1, e2) -> PairClass:
    e1, e2 = _norm(e1), _norm(e2)
    for e in (e1, e2):
        if e not in g.edges:
            raise EdgeAbsent(f"{e} is not an edge")
    if set(e1) & set(e2):
        raise NotDisjoint(f"{e1} and {e2} share a vertex")
    cross = _cross_edges(g, e1, e2)
    if not cross:
        return PairClass.DISCONNECTED
    if len(cross) == 1:
        return PairClass.TYPE1
    if len(cross) == 2:
        (a, b), (c, d) = cross
        if a == c or b == d:
            return PairClass.TYPE2
    return PairClass.FOUR_CYCLE_BOUND


def disjoint_edge_pairs(g: SimpleGraph):
    for e1, e2 in combinations(g.sorted_edges, 2):
        if not set(e1) & set(e2):
            yield e1, e2


def pair_counts(g: SimpleGraph) -> tuple[int, int, int]:
    counts = {c: 0 for c in PairClass}
    for e1, e2 in disjoint_edge_pairs(g):
        counts[classify_pair(g, e1, e2)] += 1
    return counts[PairClass.DISCONNECTED], counts[PairClass.TYPE1], counts[PairClass.TYPE2]


def a_invariant(g: SimpleGraph) -> int:
    """Sum of |N(i) & N(j)| over non-adjacent pairs {i, j} of [n]."""
    return sum(len(g.neighbors(i) & g.neighbors(j)) for i, j in g.non_edges())


def _missed_vertices(g: SimpleGraph, p: int, q: int) -> frozenset[int]:
    return g.vertices - (g.neighbors(p) | g.neighbors(q))


def b_invariant(g: SimpleGraph) -> int:
    """Sum over edges pq of the support vertices adjacent to neither p nor q."""
    return sum(len(_missed_vertices(g, p, q)) for p, q in g.edges)


def s_invariant(g: SimpleGraph, n: int | None = None, count_uncovered: bool | None = None) -> int:
    """Number of 5-subsets W of [n] for which G[W] is disconnected.

    With ``count_uncovered`` set, vertices of W touched by no edge of G[W]
    count as components of their own; otherwise only the support matters.
    """
    n = g.n if n is None else n
    if count_uncovered is None:
        count_uncovered = S_COUNTS_UNCOVERED_VERTICES
    total = 0
    for w in combinations(range(1, n + 1), 5):
        sub = induced_subgraph(g, w)
        comps = connected_component_count(sub)
        if count_uncovered:
            comps += 5 - len(sub.vertices)
        if comps >= 2:
            total += 1
    return total


def _type2_apex(g: SimpleGraph, e1: Edge, e2: Edge) -> int:
    # the shared endpoint of the two cross edges has degree 3 in G[i,j,p,q]
    (a, b), (c, d) = _cross_edges(g, e1, e2)
    return a if a == c else b


def _f2_witnesses(g: SimpleGraph):
    """Yield (type-2 pair, t) where t completes the (F1) on the pair to (F2)."""
    for e1, e2 in disjoint_edge_pairs(g):
        if classify_pair(g, e1, e2) is not PairClass.TYPE2:
            continue
        quad = set(e1) | set(e2)
        rim = quad - {_type2_apex(g, e1, e2)}
        for t in g.universe:
            if t not in quad and rim <= g.neighbors(t):
                yield (e1, e2), t


def f_invariant(g: SimpleGraph, n: int | None = None, dedupe: bool | None = None) -> int:
    """Number of 5-vertex sets {i, j, p, q, t} carrying an (F2) over a type-2 pair.

    One 5-set can arise from two different type-2 pairs; with ``dedupe``
    off every (pair, t) combination is counted separately.
    """
    if dedupe is None:
        dedupe = F_DEDUPLICATES_VERTEX_SETS
    witnesses = list(_f2_witnesses(g))
    if dedupe:
        return len({frozenset(e1 + e2 + (t,)) for (e1, e2), t in witnesses})
    return len(witnesses)


def r_invariant(g: SimpleGraph, n: int | None = None) -> Fraction:
    n = g.n if n is None else n
    universe = frozenset(range(1, n + 1))
    thirds = halves = whole = 0
    for p, q in g.edges:
        np_, nq = g.neighbors(p), g.neighbors(q)
        common = np_ & nq
        private = (np_ - g.closed_neighbors(q)) | (nq - g.closed_neighbors(p))
        for i in _missed_vertices(g, p, q):
            ni = g.neighbors(i)
            thirds += len(common - ni)
            halves += len(private - ni)
            whole += len(universe - (np_ | nq | g.closed_neighbors(i)))
    return Fraction(thirds, 3) + Fraction(halves, 2) + whole


def r_value(g: SimpleGraph, n: int | None = None) -> int:
    r = r_invariant(g, n)
    if r.denominator != 1:
        raise ArithmeticError(f"r(G) = {r} is not an integer for {g}")
    return int(r)


def sum_degree_choose2(g: SimpleGraph) -> int:
    return sum(math.comb(g.degree(v), 2) for v in g.vertices)


def type2_identity_sum(g: SimpleGraph, n: int | None = None) -> int:
    """Sum over edges pq and missed vertices i of (n-4) deg(i) - C(deg(i), 2)."""
    n = g.n if n is None else n
    return sum(
        (n - 4) * g.degree(i) - math.comb(g.degree(i), 2)
        for p, q in g.edges
        for i in _missed_vertices(g, p, q)
    )


# -- structural conditions -------------------------------------------------

def has_g1(g: SimpleGraph) -> bool:
    """Some pair of disjoint edges is not contained in a 4-cycle."""
    return any(classify_pair(g, e1, e2) is not PairClass.FOUR_CYCLE_BOUND
               for e1, e2 in disjoint_edge_pairs(g))


def disconnecting_non_edges(g: SimpleGraph) -> list[Edge]:
    return [e for e in g.non_edges() if connected_component_count(g.with_edges([e])) >= 2]


def has_g2(g: SimpleGraph) -> bool:
    return any(connected_component_count(g.with_edges([e])) >= 2 for e in g.non_edges())


def has_g3(g: SimpleGraph) -> bool:
    return all(classify_pair(g, e1, e2) in (PairClass.TYPE2, PairClass.FOUR_CYCLE_BOUND)
               for e1, e2 in disjoint_edge_pairs(g))


def has_g4(g: SimpleGraph) -> bool:
    for e1, e2 in disjoint_edge_pairs(g):
        if classify_pair(g, e1, e2) is not PairClass.TYPE2:
            continue
        quad = set(e1) | set(e2)
        rim = quad - {_type2_apex(g, e1, e2)}
        if not all(rim <= g.neighbors(t) for t in g.universe if t not in quad):
            return False
    return True


def has_g5(g: SimpleGraph) -> bool:
    for i, j in g.non_edges():
        for t in g.universe:
            if t in (i, j):
                continue
            if connected_component_count(g.with_edges([(i, j), (i, t), (t, j)])) != 1:
                return False
    return True


def conditions(g: SimpleGraph, n: int | None = None) -> tuple[bool, bool, bool, bool, bool]:
    return has_g1(g), has_g2(g), has_g3(g), has_g4(g), has_g5(g)


@dataclass(frozen=True)
class InvariantBundle:
    p0: int
    p1: int
    p2: int
    aG: int
    bG: int
    sG: int
    fG: int
    rG: Fraction
    c3: int
    c4: int
    girth: float
    nV: int
    nE: int
    sumDegChoose2: int
    maxDeg: int
    g1: bool
    g2: bool
    g3: bool
    g4: bool
    g5: bool

    def as_dict(self) -> dict:
        d = asdict(self)
        d["rG"] = int(self.rG) if self.rG.denominator == 1 else str(self.rG)
        d["girth"] = None if self.girth == math.inf else int(self.girth)
        return d


def compute_invariants(g: SimpleGraph, n: int | None = None) -> InvariantBundle:
    n = g.n if n is None else n
    p0, p1, p2 = pair_counts(g)
    g1, g2, g3, g4, g5 = conditions(g, n)
    return InvariantBundle(
        p0=p0, p1=p1, p2=p2,
        aG=a_invariant(g),
        bG=b_invariant(g),
        sG=s_invariant(g, n) if n >= 5 else 0,
        fG=f_invariant(g, n),
        rG=r_invariant(g, n),
        c3=count_triangles(g),
        c4=count_4cycles(g),
        girth=girth(g),
        nV=len(g.vertices),
        nE=len(g.edges),
        sumDegChoose2=sum_degree_choose2(g),
        maxDeg=max_degree(g),
        g1=g1, g2=g2, g3=g3, g4=g4, g5=g5,
    )
