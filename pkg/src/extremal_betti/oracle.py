"""Local cohomology of R/I from degree complexes (Takayama's formula).

For b in N^n the degree complex of I is the graph on [n] whose edges are
the pairs {i, j} with sigma_ij(b) = |b| - b_i - b_j < w_ij; it has no
higher faces and no vertex outside an edge. Then

    dim H^1_m(R/I)_b = dim H~_0(complex),  dim H^2_m(R/I)_b = dim H~_1(complex),

and the extremal Betti numbers are read off the top non-vanishing degrees.

Two evaluation paths are provided. ``local_cohomology_dim`` walks every
b in N^n of a given total degree in pure Python. ``profile`` does all
degrees at once with numpy, and skips multidegrees having a coordinate
b_i >= alpha: there every pair avoiding i has sigma >= alpha, so the
complex is a star at i (or empty) and carries no reduced homology.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .graph import SimpleGraph, connected_component_count, new_graph
from .instance import Instance
from .report import Corner, ExtremalReport

MINUS_INFINITY = None


class DimensionMismatch(ValueError):
    pass


class DegreeBoundViolation(AssertionError):
    """Nonzero cohomology was found above the proven degree bound."""


@dataclass(frozen=True)
class DegreeComplex:
    edges: frozenset[tuple[int, int]]
    non_void: bool

    def as_graph(self, n: int) -> SimpleGraph:
        return new_graph(n, self.edges)


@dataclass(frozen=True)
class CohomologyProfile:
    h1_by_degree: dict[int, int] = field(default_factory=dict)
    h2_by_degree: dict[int, int] = field(default_factory=dict)

    @property
    def a1(self) -> int | None:
        return max(self.h1_by_degree, default=MINUS_INFINITY)

    @property
    def a2(self) -> int | None:
        return max(self.h2_by_degree, default=MINUS_INFINITY)


def sigma(b: Sequence[int], i: int, j: int) -> int:
    """|b| - b_i - b_j for 1-indexed i, j."""
    return sum(b) - b[i - 1] - b[j - 1]


def multidegrees(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """All b in N^n with |b| = d, in lexicographic order (stars and bars)."""
    for bars in combinations(range(d + n - 1), n - 1):
        prev = -1
        b = []
        for bar in bars:
            b.append(bar - prev - 1)
            prev = bar
        b.append(d + n - 1 - prev - 1)
        yield tuple(b)


def degree_complex(inst: Instance, b: Sequence[int]) -> DegreeComplex:
    if len(b) != inst.n:
        raise DimensionMismatch(f"multidegree has {len(b)} entries, expected {inst.n}")
    if any(x < 0 for x in b):
        raise DimensionMismatch("only multidegrees in N^n are supported")
    edges = frozenset(p for p in inst.pairs() if sigma(b, *p) < inst.weight(*p))
    # x^b lies outside I exactly when some P_ij^{w_ij} misses it
    return DegreeComplex(edges, non_void=bool(edges))


def reduced_homology_dims(c: DegreeComplex) -> tuple[int, int]:
    if not c.edges:
        return 0, 0
    g = new_graph(max(max(e) for e in c.edges), c.edges)
    comps = connected_component_count(g)
    return comps - 1, len(g.edges) + comps - len(g.vertices)


def local_cohomology_dim(inst: Instance, i: int, d: int) -> int:
    """dim_K H^i_m(R/I)_d for i in {1, 2}, summed over b in N^n with |b| = d."""
    if i not in (1, 2):
        raise ValueError("only H^1 and H^2 can be nonzero here")
    if d < 0:
        return 0
    total = 0
    for b in multidegrees(inst.n, d):
        h0, h1 = reduced_homology_dims(degree_complex(inst, b))
        total += h0 if i == 1 else h1
    return total


# -- vectorized path --------------------------------------------------------

def h1_degree_bound(alpha: int) -> int:
    return 2 * alpha - 2


def h2_degree_bound(alpha: int) -> int:
    return 3 * alpha - 3


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=8)
def _box(n: int, alpha: int) -> tuple[np.ndarray, np.ndarray]:
    """Multidegrees in [0, alpha-1]^n with |b| <= 3 alpha - 2 and their totals."""
    top = h2_degree_bound(alpha) + 1
    rows = np.zeros((1, 0), dtype=np.int8)
    totals = np.zeros(1, dtype=np.int16)
    for _ in range(n):
        vals = np.arange(alpha, dtype=np.int16)
        new_totals = (totals[:, None] + vals[None, :]).ravel()
        keep = new_totals <= top
        rows = np.concatenate(
            [np.repeat(rows, alpha, axis=0), np.tile(vals.astype(np.int8), len(rows))[:, None]],
            axis=1,
        )[keep]
        totals = new_totals[keep]
    return rows, totals


# A sweep up to alpha = 8 touches 35 (alpha, w) keys; a smaller cache
# thrashes when the weight pairs are cycled per graph.
@lru_cache(maxsize=64)
def _pair_bits(n: int, alpha: int, w: int) -> np.ndarray:
    """Bitmask per multidegree of the pairs with sigma < w (bit k = k-th pair)."""
    rows, totals = _box(n, alpha)
    dtype = np.int32 if len(_pairs(n)) < 32 else np.int64
    bits = np.zeros(len(rows), dtype=dtype)
    for k, (i, j) in enumerate(_pairs(n)):
        s = totals - rows[:, i] - rows[:, j]
        bits |= (s < w).astype(dtype) << k
    return bits


def _homology_of_masks(n: int, masks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(h~0, h~1) of the graphs on n vertices encoded by ``masks``."""
    masks = np.asarray(masks, dtype=np.int64)
    labels = np.tile(np.arange(n, dtype=np.int8), (len(masks), 1))
    degree = np.zeros((len(masks), n), dtype=np.int8)
    present = []
    for k, (u, v) in enumerate(_pairs(n)):
        on = (masks >> k & 1).astype(bool)
        present.append((u, v, on))
        degree[on, u] += 1
        degree[on, v] += 1
    # min-label propagation settles within n - 1 sweeps
    for _ in range(n - 1):
        changed = False
        for u, v, on in present:
            m = np.minimum(labels[:, u], labels[:, v])
            upd = on & ((labels[:, u] != m) | (labels[:, v] != m))
            if upd.any():
                labels[upd, u] = m[upd]
                labels[upd, v] = m[upd]
                changed = True
        if not changed:
            break
    support = degree > 0
    roots = support & (labels == np.arange(n, dtype=np.int8))
    comps = roots.sum(axis=1)
    nv = support.sum(axis=1)
    ne = np.zeros(len(masks), dtype=np.int64)
    for _, _, on in present:
        ne += on
    has_edges = ne > 0
    h0 = np.where(has_edges, comps - 1, 0)
    h1 = np.where(has_edges, ne + comps - nv, 0)
    return h0.astype(np.int64), h1.astype(np.int64)


@lru_cache(maxsize=None)
def _homology_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    return _homology_of_masks(n, np.arange(1 << len(_pairs(n)), dtype=np.int64))


def _homology_lookup(n: int, masks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if n <= 7:
        h0, h1 = _homology_table(n)
        return h0[masks], h1[masks]
    uniq, inverse = np.unique(masks, return_inverse=True)
    h0, h1 = _homology_of_masks(n, uniq)
    return h0[inverse], h1[inverse]


def profile(inst: Instance, check_bounds: bool = True) -> CohomologyProfile:
    """Graded dimensions of H^1 and H^2 of R/I over all relevant degrees.

    Degrees are scanned one past each proven bound (2 alpha - 2 for H^1,
    3 alpha - 3 for H^2); with ``check_bounds`` a nonzero value there
    raises ``DegreeBoundViolation``.
    """
    n, alpha, beta = inst.n, inst.alpha, inst.beta
    _, totals = _box(n, alpha)
    gmask = 0
    for k, (i, j) in enumerate(_pairs(n)):
        if (i + 1, j + 1) in inst.graph:
            gmask |= 1 << k
    masks = _pair_bits(n, alpha, beta) | (_pair_bits(n, alpha, alpha) & gmask)
    h0, h1 = _homology_lookup(n, masks)
    top = h2_degree_bound(alpha) + 2
    by_deg0 = np.bincount(totals, weights=h0, minlength=top).astype(np.int64)
    by_deg1 = np.bincount(totals, weights=h1, minlength=top).astype(np.int64)
    if check_bounds:
        over1 = by_deg0[h1_degree_bound(alpha) + 1:]
        over2 = by_deg1[h2_degree_bound(alpha) + 1:]
        if over1.any() or over2.any():
            raise DegreeBoundViolation(
                f"cohomology above the degree bounds for {inst}: "
                f"H^1 {over1.tolist()}, H^2 {over2.tolist()}"
            )
    return CohomologyProfile(
        h1_by_degree={d: int(v) for d, v in enumerate(by_deg0) if v},
        h2_by_degree={d: int(v) for d, v in enumerate(by_deg1) if v},
    )


def report_from_profile(inst: Instance, prof: CohomologyProfile) -> ExtremalReport:
    n = inst.n
    a1, a2 = prof.a1, prof.a2
    if a2 is None:
        raise AssertionError(f"H^2 vanishes for {inst}, but dim R/I = 2")
    corners = []
    if a1 is not None:
        corners.append(Corner(n - 1, n + a1, prof.h1_by_degree[a1], "H1"))
    if a1 is None or a1 + 1 < a2 + 2:
        corners.append(Corner(n - 2, n + a2, prof.h2_by_degree[a2], "H2"))
    cm = a1 is None
    return ExtremalReport(
        corners=tuple(corners),
        a1=a1,
        a2=a2,
        cohen_macaulay=cm,
        pseudo_gorenstein=cm and corners[0].value == 1,
    )


def extremal_report_oracle(inst: Instance, check_bounds: bool = True) -> ExtremalReport:
    return report_from_profile(inst, profile(inst, check_bounds))


# -- general Takayama evaluation, for checking the N^n restriction -------------

def _laurent_in_localized_power(inst: Instance, b: Sequence[int], inverted: frozenset[int]) -> bool:
    """Whether x^b lies in I R_S, S = ``inverted`` (1-indexed)."""
    if any(b[l - 1] < 0 for l in range(1, inst.n + 1) if l not in inverted):
        return False  # not even in R_S
    for i, j in inst.pairs():
        if not inverted <= {i, j}:
            continue  # P_ij R_S is the unit ideal
        if sigma(b, i, j) < inst.weight(i, j):
            return False
    return True


def takayama_dim(inst: Instance, i: int, b: Sequence[int]) -> int:
    """dim H^i_m(R/I)_b for arbitrary b in Z^n, straight from the formula.

    Slow; meant for small n and tests only.
    """
    cs = frozenset(k + 1 for k, x in enumerate(b) if x < 0)
    if len(cs) > 2:  # faces of the radical's complex have at most 2 elements
        return 0
    rest = [v for v in range(1, inst.n + 1) if v not in cs]
    faces = [frozenset(f) for r in range(0, 4) for f in combinations(rest, r)
             if not _laurent_in_localized_power(inst, b, frozenset(f) | cs)]
    q = i - len(cs) - 1
    verts = {v for f in faces if len(f) == 1 for v in f}
    edges = [tuple(sorted(f)) for f in faces if len(f) == 2]
    if any(len(f) == 3 for f in faces):
        raise AssertionError("degree complex of dimension 2")
    if not faces:
        return 0
    if q == -1:
        return 1 if faces == [frozenset()] else 0
    if not verts:
        return 0
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    comps = len(verts)
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    if q == 0:
        return comps - 1
    if q == 1:
        return len(edges) + comps - len(verts)
    return 0
