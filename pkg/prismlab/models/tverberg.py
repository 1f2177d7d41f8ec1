# prismlab/models/tverberg.py
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from prismlab.core.errors import DimensionMismatchError
from prismlab.models.cell import Cell

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class PointConfig:
    """Конфигурация точек в R^d с точными рациональными координатами."""
    ambient_dim: int
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        if self.ambient_dim < 1:
            raise DimensionMismatchError(f"ambient dimension must be >= 1, got {self.ambient_dim}")
        normalized = tuple(tuple(Fraction(x) for x in p) for p in self.points)
        for idx, p in enumerate(normalized):
            if len(p) != self.ambient_dim:
                raise DimensionMismatchError(
                    f"point {idx} has {len(p)} coordinates, expected {self.ambient_dim}"
                )
        object.__setattr__(self, "points", normalized)

    def __len__(self) -> int:
        return len(self.points)

    def tverberg_bound(self, r: int) -> int:
        """(d+1)(r-1)+1 - начиная с этого числа точек разбиение обязано существовать."""
        return (self.ambient_dim + 1) * (r - 1) + 1

    def mapped(self, matrix: tuple[tuple[Fraction, ...], ...], shift: Point) -> PointConfig:
        """Образ под аффинным отображением x -> Ax + b."""
        return PointConfig(self.ambient_dim, tuple(
            apply_affine(matrix, shift, p) for p in self.points
        ))


def apply_affine(matrix: tuple[tuple[Fraction, ...], ...], shift: Point, p: Point) -> Point:
    return tuple(
        sum((Fraction(a) * x for a, x in zip(row, p)), Fraction(0)) + Fraction(b)
        for row, b in zip(matrix, shift)
    )


@dataclass(frozen=True)
class HullWitness:
    """Общая точка x выпуклых оболочек и веса λ^i_j для каждой части."""
    point: Point
    weights: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class PartitionCertificate:
    parts: tuple[tuple[int, ...], ...]       # индексы точек, блоки упорядочены по минимуму
    witness: Point
    coefficients: tuple[Mapping[int, Fraction], ...]

    @property
    def r(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class AffineTTTResult:
    certificate: PartitionCertificate
    top_cell: Cell
    faces: tuple[tuple[int, ...], ...]
    face_dims: tuple[int, ...]


def fraction_str(x: Fraction) -> str:
    """Точная строка "p/q" (или "p" для целых)."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
