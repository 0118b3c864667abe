"""Cross-validation of the closed forms against the local-cohomology oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .closed_form import dispatch, pseudo_gorenstein
from .graph import SimpleGraph, graph_from_bitmask
from .instance import Instance
from .invariants import compute_invariants
from .oracle import extremal_report_oracle
from .report import ExtremalReport


def weight_pairs(alpha_max: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(2, alpha_max + 1) for b in range(1, a)]


def all_graphs(n: int) -> Iterator[SimpleGraph]:
    """Every graph on [n] with at least one edge, in bitmask order."""
    for mask in range(1, 1 << (n * (n - 1) // 2)):
        yield graph_from_bitmask(n, mask)


def random_graphs(n: int, count: int, seed: int) -> list[SimpleGraph]:
    """``count`` distinct non-empty graphs on [n]; the edge density is drawn per graph."""
    rng = random.Random(seed)
    pairs = list(combinations(range(1, n + 1), 2))
    if count >= 2 ** len(pairs):
        raise ValueError(f"only {2 ** len(pairs) - 1} non-empty graphs on [{n}]")
    out, seen = [], set()
    while len(out) < count:
        density = rng.choice([0.15, 0.25, 0.4, 0.55, 0.7, 0.85])
        edges = frozenset(p for p in pairs if rng.random() < density)
        if edges and edges not in seen:
            seen.add(edges)
            out.append(SimpleGraph(n, edges))
    return out


FAMILIES = {
    "alpha=beta+1": lambda a, b: a == b + 1,
    "alpha=beta+2": lambda a, b: a == b + 2,
    "(4,2)": lambda a, b: (a, b) == (4, 2),
    "alpha>=beta+3": lambda a, b: a >= b + 3,
    "alpha>=2beta": lambda a, b: a >= 2 * b,
    "odd/odd": lambda a, b: a % 2 == 1 and b % 2 == 1,
    "odd/even": lambda a, b: a % 2 == 1 and b % 2 == 0,
    "even/odd": lambda a, b: a % 2 == 0 and b % 2 == 1,
    "even/even": lambda a, b: a % 2 == 0 and b % 2 == 0,
}


def families_hit(pairs: Iterable[tuple[int, int]]) -> set[str]:
    return {name for a, b in pairs for name, test in FAMILIES.items() if test(a, b)}


def sampled_pairs(alpha_max: int, k: int, rng: random.Random) -> list[tuple[int, int]]:
    """``k`` distinct weight pairs with alpha <= alpha_max, drawn with ``rng``."""
    pool = weight_pairs(alpha_max)
    return sorted(rng.sample(pool, min(k, len(pool))))


def random_corpus(n: int, count: int, seed: int, alpha_max: int = 8, k: int = 6) -> list[Instance]:
    """Seeded random graphs, each paired with ``k`` sampled weight pairs."""
    rng = random.Random(f"pairs-{seed}")
    out = []
    for g in random_graphs(n, count, seed):
        out.extend(Instance(n, a, b, g) for a, b in sampled_pairs(alpha_max, k, rng))
    return out


@dataclass
class Comparison:
    instance: Instance
    closed: ExtremalReport | None
    oracle: ExtremalReport
    classifier: bool
    error: str | None = None

    @property
    def agree(self) -> bool:
        return (
            self.error is None
            and self.closed is not None
            and self.closed.agrees_with(self.oracle)
            and self.classifier == self.oracle.pseudo_gorenstein
        )

    def reproduce(self) -> str:
        g = self.instance.graph
        edges = " ".join(f"{i}-{j}" for i, j in g.sorted_edges)
        return f"n={g.n} alpha={self.instance.alpha} beta={self.instance.beta} edges: {edges}"


def compare(inst: Instance) -> Comparison:
    oracle = extremal_report_oracle(inst)
    inv = compute_invariants(inst.graph, inst.n)
    try:
        closed = dispatch(inst, inv)
        error = None
    except Exception as exc:  # a dispatch failure is itself a mismatch to report
        closed, error = None, f"{type(exc).__name__}: {exc}"
    return Comparison(inst, closed, oracle, pseudo_gorenstein(inst, inv), error)


def run(graphs: Iterable[SimpleGraph], pairs: Iterable[tuple[int, int]]) -> Iterator[Comparison]:
    pairs = list(pairs)
    for g in graphs:
        for a, b in pairs:
            yield compare(Instance(g.n, a, b, g))
