"""Extremal Betti numbers of R/I straight from the graph invariants.

No homology is computed here. ``dispatch`` picks the table by
(alpha - beta, parity of beta) and the row by the shape of G:

* ``girth3``: G has a triangle;
* ``mid``: triangle-free with a vertex of degree >= 2;
* ``matching``: G is a set of disjoint edges.

The top degrees of H^2 follow the same split: 3a - 3, 2a + b - 3 and
a + 2b - 3 respectively (a = alpha, b = beta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import count_triangles, max_degree
from .instance import Instance, UnsupportedInstance
from .invariants import InvariantBundle, compute_invariants, r_value
from .lattice import InvalidWeights, clamp
from .report import Corner, ExtremalReport


class DispatchGap(RuntimeError):
    """No table row matched a valid instance."""


def _integral(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"non-integral Betti number {x}")
    return int(x)


def _check(alpha: int, beta: int) -> None:
    if not alpha > beta > 0:
        raise InvalidWeights(f"need alpha > beta > 0, got ({alpha}, {beta})")


def B1(alpha: int, beta: int, inv: InvariantBundle) -> int:
    """Top H^1 dimension when some disjoint edge pair avoids every 4-cycle."""
    _check(alpha, beta)
    d = alpha - beta
    m1 = clamp(alpha - 2 * beta + 1)
    m0 = clamp(alpha - 2 * beta)
    corr = m0 * (alpha - 2 * beta + 2)
    if alpha % 2 and beta % 2 == 0:
        c0 = d * d + (d - 1) ** 2 - m1 ** 2
        c1 = Fraction((d - 1) * (2 * d - 1) - m1 ** 2, 2)
        c2 = Fraction(2 * (d - 1) ** 2 - m1 ** 2, 4)
    elif alpha % 2:
        c0 = d * d + (d - 1) ** 2 - m1 ** 2
        c1 = Fraction(d * d + (d - 1) * (d - 2) - m1 ** 2, 2)
        c2 = Fraction(d * d + (d - 2) ** 2 - m1 ** 2, 4)
    elif beta % 2 == 0:
        c0 = 2 * d * (d - 1) - corr
        c1 = Fraction(d * (2 * d - 3) - corr, 2)
        c2 = Fraction(2 * d * (d - 2) - corr, 4)
    else:
        c0 = 2 * d * (d - 1) - corr
        c1 = Fraction((d - 1) * (2 * d - 1) - corr, 2)
        c2 = Fraction(2 * (d - 1) ** 2 - corr, 4)
    return _integral(c0 * inv.p0 + c1 * inv.p1 + c2 * inv.p2 + m0 * inv.bG)


def B2(alpha: int, beta: int, inv: InvariantBundle, n: int) -> int:
    """Top H^1 dimension when G is connected and only a non-edge disconnects it.

    Every disconnecting non-edge pq (there are C(n - |V(G)|, 2)) contributes
    the interior lattice points of the second box once per edge of G, plus
    max(alpha - 2 beta, 0) boundary vectors per vertex of G.
    """
    _check(alpha, beta)
    outside = math.comb(n - inv.nV, 2)
    if beta == 1:
        return (alpha - 2) * outside
    d = alpha - beta
    m1 = clamp(alpha - 2 * beta + 1)
    m0 = clamp(alpha - 2 * beta)
    corr = m0 * (alpha - 2 * beta + 2)
    if alpha % 2 and beta % 2 == 0:
        interior = Fraction((d - 1) ** 2 - m1 ** 2, 2)
    elif alpha % 2:
        interior = Fraction(d * d + (d - 2) ** 2 - 2 * m1 ** 2, 4)
    elif beta % 2 == 0:
        interior = Fraction(d * (d - 2) - corr, 2)
    else:
        interior = Fraction((d - 1) ** 2 - corr, 2)
    return _integral((inv.nE * interior + m0 * inv.nV) * outside)


def shape(inv: InvariantBundle) -> str:
    if inv.girth == 3:
        return "girth3"
    if inv.maxDeg >= 2:
        return "mid"
    return "matching"


def a2_invariant(alpha: int, beta: int, inv: InvariantBundle) -> int:
    return {
        "girth3": 3 * alpha - 3,
        "mid": 2 * alpha + beta - 3,
        "matching": alpha + 2 * beta - 3,
    }[shape(inv)]


@dataclass(frozen=True)
class _Row:
    """One table cell: the H^1 corner (degree a1, value) and/or the H^2 value."""

    h1: tuple[int, int] | None
    h2: int | None


def _h2_value(inst: Instance, inv: InvariantBundle, beta1_c4_coeff: int) -> int:
    """The (n-2)-corner value; ``beta1_c4_coeff`` weights c4 when beta = 1."""
    kind = shape(inv)
    if kind == "girth3":
        return inv.c3
    if kind == "matching":
        return (inst.n - 2) * inv.nE
    if inst.beta == 1:
        return inv.aG + beta1_c4_coeff * inv.c4
    return inv.sumDegChoose2


def _alpha_is_beta_plus_1(inst: Instance, inv: InvariantBundle) -> _Row:
    n, a, b = inst.n, inst.alpha, inst.beta
    kind = shape(inv)
    h2 = _h2_value(inst, inv, 0)
    cm = b == 1 or (b == 3 and inv.sG == 0) or (b not in (1, 3) and inv.p0 == 0)
    if cm:
        return _Row(None, h2)
    if kind == "matching" and inv.nE == 1:
        raise DispatchGap(f"single edge outside the Cohen-Macaulay row: {inst}")
    if b == 3:
        return _Row((5, inv.sG), h2)
    if b % 2:
        return _Row((a + b - 2, (n - 4) * inv.p0), h2)
    return _Row((a + b - 1, inv.p0), h2)


def _alpha_at_least_beta_plus_3(inst: Instance, inv: InvariantBundle) -> _Row:
    n, a, b = inst.n, inst.alpha, inst.beta
    kind = shape(inv)
    h2 = _h2_value(inst, inv, a - 2)
    if kind == "matching":
        if inv.nE == 1:
            return _Row((a + b - 2, B2(a, b, inv, n)), n - 2)
        if a < 2 * b:
            return _Row((2 * a - 2, B1(a, b, inv)), h2)
        return _Row((2 * a - 2, B1(a, b, inv)), None)
    if inv.g1:
        return _Row((2 * a - 2, B1(a, b, inv)), h2)
    if inv.g2:
        return _Row((a + b - 2, B2(a, b, inv, n)), h2)
    return _Row(None, h2)


def _alpha_is_beta_plus_2_odd(inst: Instance, inv: InvariantBundle) -> _Row:
    n, a, b = inst.n, inst.alpha, inst.beta
    kind = shape(inv)
    h2 = _h2_value(inst, inv, 1)
    outside = math.comb(n - inv.nV, 2)
    if kind == "matching":
        if inv.nE == 1:
            return _Row((a + b - 2, math.comb(n - 2, 2)), n - 2)
        if b == 1:
            return _Row((a + b, inv.p0 + inv.bG), None)
        return _Row((a + b, 5 * inv.p0), h2)
    if inv.g1:
        if b == 1:
            value = inv.p0 + inv.bG
        elif kind == "girth3":
            value = 5 * inv.p0 + 2 * inv.p1 + inv.p2
        else:
            value = 5 * inv.p0 + 2 * inv.p1
        return _Row((a + b, value), h2)
    if inv.g2:
        return _Row((a + b - 2, outside if b == 1 else inv.nE * outside), h2)
    return _Row(None, h2)


def _alpha_is_beta_plus_2_even(inst: Instance, inv: InvariantBundle) -> _Row:
    n, a, b = inst.n, inst.alpha, inst.beta
    kind = shape(inv)
    h2 = _h2_value(inst, inv, 0)
    outside = math.comb(n - inv.nV, 2)
    if kind == "matching":
        if inv.nE == 1:
            return _Row((a + b - 3, (n - 4) * outside), n - 2)
        return _Row((a + b, 4 * inv.p0), h2)
    if inv.g1:
        if kind == "girth3" and inv.g3:
            value = (n - 4) * inv.p2 - (inv.fG if b == 4 else 0)
            return _Row((a + b - 1, value), h2)
        return _Row((a + b, 4 * inv.p0 + inv.p1), h2)
    if inv.g2:
        if b == 4:
            base = (n - 4) * inv.nE - inv.sumDegChoose2 + (inv.c3 if kind == "girth3" else 0)
        else:
            base = (n - 4) * inv.nE
        return _Row((a + b - 3, base * outside), h2)
    return _Row(None, h2)


def _alpha_beta_4_2(inst: Instance, inv: InvariantBundle) -> _Row:
    n = inst.n
    kind = shape(inv)
    h2 = _h2_value(inst, inv, 0)
    if kind == "matching":
        if inv.nE == 1:
            return _Row((3, math.comb(n - 2, 3)), n - 2)
        return _Row((6, 4 * inv.p0), None)
    if kind == "girth3":
        if not inv.g3:
            return _Row((6, 4 * inv.p0 + inv.p1), h2)
        if not inv.g4:
            return _Row((5, r_value(inst.graph, n)), h2)
        if not inv.g5:
            return _Row((3, math.comb(n - inv.nV, 3)), h2)
        return _Row(None, h2)
    if inv.g1:
        return _Row((6, 4 * inv.p0 + inv.p1), h2)
    if inv.nV <= n - 3:
        return _Row((3, math.comb(n - inv.nV, 3)), h2)
    return _Row(None, h2)


def table_for(alpha: int, beta: int) -> str:
    if alpha == beta + 1:
        return "alpha=beta+1"
    if alpha >= beta + 3:
        return "alpha>=beta+3"
    if beta % 2:
        return "alpha=beta+2, beta odd"
    if (alpha, beta) == (4, 2):
        return "(4,2)"
    return "alpha=beta+2, beta even"


_TABLES = {
    "alpha=beta+1": _alpha_is_beta_plus_1,
    "alpha>=beta+3": _alpha_at_least_beta_plus_3,
    "alpha=beta+2, beta odd": _alpha_is_beta_plus_2_odd,
    "alpha=beta+2, beta even": _alpha_is_beta_plus_2_even,
    "(4,2)": _alpha_beta_4_2,
}


def dispatch(inst: Instance, inv: InvariantBundle | None = None) -> ExtremalReport:
    if inv is None:
        inv = compute_invariants(inst.graph, inst.n)
    n, a, b = inst.n, inst.alpha, inst.beta
    row = _TABLES[table_for(a, b)](inst, inv)
    a2 = a2_invariant(a, b, inv)
    corners = []
    a1 = None
    if row.h1 is not None:
        a1, value = row.h1
        if value < 1:
            raise DispatchGap(f"table gives a non-positive H^1 corner {value} for {inst}")
        corners.append(Corner(n - 1, n + a1, value, "H1"))
    if row.h2 is not None:
        if row.h2 < 1:
            raise DispatchGap(f"table gives a non-positive H^2 corner {row.h2} for {inst}")
        corners.append(Corner(n - 2, n + a2, row.h2, "H2"))
    if not corners:
        raise DispatchGap(f"no table row for {inst}")
    cm = a1 is None
    return ExtremalReport(
        corners=tuple(corners),
        a1=a1,
        a2=a2,
        cohen_macaulay=cm,
        pseudo_gorenstein=cm and corners[0].value == 1,
    )


# -- pseudo-Gorenstein classification ---------------------------------------

PG_CLAUSES = {
    "i": "(alpha, beta) = (2, 1); one vertex of degree 2, all others of degree 1",
    "ii": "(alpha, beta) = (2, 1); exactly one 3-cycle",
    "iii": "(alpha, beta) = (4, 3); s(G) = 0 and exactly one 3-cycle",
    "iv": "alpha = beta + 1, beta not in {1, 3}; p0(G) = 0 and exactly one 3-cycle",
    "v": "alpha = beta + 1, beta != 1; G is the star K_{1,2}",
    "vi": "(alpha, beta) = (4, 2), n = 5; G is C3 or K_{1,2}",
}


def _is_k12(g) -> bool:
    return len(g.edges) == 2 and len(g.vertices) == 3


def _is_c3(g) -> bool:
    return len(g.edges) == 3 and len(g.vertices) == 3


def pseudo_gorenstein_clauses(inst: Instance, inv: InvariantBundle | None = None) -> list[str]:
    """Labels of every classification clause the instance satisfies."""
    if inv is None:
        inv = compute_invariants(inst.graph, inst.n)
    g, a, b = inst.graph, inst.alpha, inst.beta
    degrees = sorted(g.degree(v) for v in g.vertices)
    c3 = count_triangles(g)
    hits = []
    if (a, b) == (2, 1) and degrees.count(2) == 1 and degrees.count(1) == len(degrees) - 1:
        hits.append("i")
    if (a, b) == (2, 1) and c3 == 1:
        hits.append("ii")
    if (a, b) == (4, 3) and inv.sG == 0 and c3 == 1:
        hits.append("iii")
    if a == b + 1 and b not in (1, 3) and inv.p0 == 0 and c3 == 1:
        hits.append("iv")
    if a == b + 1 and b != 1 and _is_k12(g):
        hits.append("v")
    if (a, b) == (4, 2) and inst.n == 5 and (_is_c3(g) or _is_k12(g)):
        hits.append("vi")
    return hits


def pseudo_gorenstein(inst: Instance, inv: InvariantBundle | None = None) -> bool:
    return bool(pseudo_gorenstein_clauses(inst, inv))


__all__ = [
    "B1", "B2", "DispatchGap", "PG_CLAUSES", "UnsupportedInstance", "a2_invariant",
    "dispatch", "max_degree", "pseudo_gorenstein", "pseudo_gorenstein_clauses",
    "shape", "table_for",
]
