from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True, order=True)
class Corner:
    """An extremal Betti number beta_{i,j}(R/I) and the cohomology it comes from."""

    i: int
    j: int
    value: int
    which: str = field(default="", compare=False)


@dataclass(frozen=True)
class ExtremalReport:
    corners: tuple[Corner, ...]
    a1: int | None  # None stands for -infinity
    a2: int
    cohen_macaulay: bool
    pseudo_gorenstein: bool

    def __post_init__(self):
        ordered = tuple(sorted(self.corners, key=lambda c: -c.i))
        object.__setattr__(self, "corners", ordered)
        if not 1 <= len(ordered) <= 2:
            raise ValueError(f"a report has one or two corners, got {len(ordered)}")
        if any(c.value < 1 for c in ordered):
            raise ValueError(f"extremal Betti numbers are positive: {ordered}")

    def key(self):
        """Everything two engines must agree on."""
        return (
            tuple((c.i, c.j, c.value) for c in self.corners),
            self.a1,
            self.a2,
            self.cohen_macaulay,
            self.pseudo_gorenstein,
        )

    def agrees_with(self, other: ExtremalReport) -> bool:
        return self.key() == other.key()

    def to_json(self) -> dict:
        return {
            "corners": [{"i": c.i, "j": c.j, "value": c.value} for c in self.corners],
            "a1": self.a1,
            "a2": self.a2,
            "cohen_macaulay": self.cohen_macaulay,
            "pseudo_gorenstein": self.pseudo_gorenstein,
        }
