"""An ideal of C_n(alpha, beta), described by its weight graph."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import SimpleGraph


class UnsupportedInstance(ValueError):
    """The instance lies outside n >= 5, alpha > beta > 0, G non-empty."""


@dataclass(frozen=True)
class Instance:
    n: int
    alpha: int
    beta: int
    graph: SimpleGraph

    def __post_init__(self):
        if self.n < 5:
            raise UnsupportedInstance(f"n must be at least 5, got {self.n}")
        if not self.alpha > self.beta > 0:
            raise UnsupportedInstance(f"need alpha > beta > 0, got ({self.alpha}, {self.beta})")
        if self.graph.n != self.n:
            raise UnsupportedInstance(f"graph lives on [{self.graph.n}], instance on [{self.n}]")
        if not self.graph.edges:
            raise UnsupportedInstance("the weight graph must have at least one edge")

    def weight(self, i: int, j: int) -> int:
        return self.alpha if (i, j) in self.graph else self.beta

    def pairs(self):
        return combinations(range(1, self.n + 1), 2)

    def with_weights(self, alpha: int, beta: int) -> Instance:
        return Instance(self.n, alpha, beta, self.graph)
