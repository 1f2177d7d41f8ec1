# prismlab/models/symmetry.py
from __future__ import annotations

from dataclasses import dataclass

from prismlab.models.cell import Cell


@dataclass(frozen=True, slots=True)
class Permutation:
    """
    Биекция индексов частей. images[i] - куда переходит часть i (0-индексация;
    в обозначениях {1..r} это i+1 -> images[i]+1).
    """
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a bijection on 0..{len(self.images) - 1}")

    @classmethod
    def identity(cls, r: int) -> Permutation:
        return cls(tuple(range(r)))

    @classmethod
    def transposition(cls, r: int, a: int, b: int) -> Permutation:
        images = list(range(r))
        images[a], images[b] = images[b], images[a]
        return cls(tuple(images))

    @classmethod
    def cyclic_shift(cls, r: int, k: int = 1) -> Permutation:
        """Сдвиг (w_1,...,w_r) -> (w_2,...,w_r,w_1): часть i уходит на место i-1."""
        return cls(tuple((i - k) % r for i in range(r)))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        """(self * other)(i) = self(other(i))."""
        return Permutation(tuple(self.images[other.images[i]] for i in range(self.degree)))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return "[" + " ".join(str(v + 1) for v in self.images) + "]"


@dataclass(frozen=True)
class Orbit:
    cells: frozenset[Cell]

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def representative(self) -> Cell:
        return min(self.cells, key=Cell.sort_key)


@dataclass(frozen=True)
class FreeActionReport:
    passed: bool
    group_order: int
    fixed_pairs: tuple[tuple[Permutation, Cell], ...] = ()
    orbit_counts: tuple[int, ...] = ()   # по размерностям 0..top
    orbit_sizes: frozenset[int] = frozenset()
