"""Ordered vertex partitions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadPartition
from .graph import bits, mask_of


@dataclass(frozen=True)
class RPartition:
    """Ordered partition of ``range(n)`` into classes held as vertex bitmasks.

    Empty classes are representable (``has_empty_class``) so that degenerate
    inputs can be reported instead of rejected.
    """

    n: int
    classes: tuple[int, ...]

    @classmethod
    def from_labels(cls, labels: Sequence[int], r: int | None = None) -> RPartition:
        r = max(labels, default=-1) + 1 if r is None else r
        classes = [0] * r
        for v, c in enumerate(labels):
            if not 0 <= c < r:
                raise BadPartition(f"vertex {v} has class {c} outside 0..{r - 1}")
            classes[c] |= 1 << v
        return cls(len(labels), tuple(classes))

    @classmethod
    def from_lists(cls, n: int, classes: Iterable[Iterable[int]]) -> RPartition:
        return cls(n, tuple(mask_of(c) for c in classes))

    @property
    def r(self) -> int:
        return len(self.classes)

    @property
    def has_empty_class(self) -> bool:
        return any(c == 0 for c in self.classes)

    def labels(self) -> list[int]:
        out = [-1] * self.n
        for i, c in enumerate(self.classes):
            for v in bits(c):
                out[v] = i
        return out

    def as_lists(self) -> list[list[int]]:
        return [list(bits(c)) for c in self.classes]

    def sizes(self) -> list[int]:
        return [c.bit_count() for c in self.classes]

    def validate(self) -> None:
        seen = 0
        for i, c in enumerate(self.classes):
            if c & seen:
                raise BadPartition(f"class {i} overlaps an earlier class")
            seen |= c
        full = (1 << self.n) - 1
        if seen != full:
            if seen & ~full:
                raise BadPartition("partition mentions vertices outside the graph")
            missing = list(bits(full & ~seen))
            raise BadPartition(f"vertices {missing} are not covered")

    def move(self, v: int, target: int) -> RPartition:
        classes = [c & ~(1 << v) for c in self.classes]
        classes[target] |= 1 << v
        return RPartition(self.n, tuple(classes))

    def restrict(self, mask: int) -> list[int]:
        """Classes intersected with ``mask`` (still indexed by original class)."""
        return [c & mask for c in self.classes]
