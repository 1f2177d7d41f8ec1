# prismlab/models/orientation.py
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Hashable, Mapping

from prismlab.models.cell import Cell, ComplexSpec


class Parity(str, enum.Enum): # str для прямой сериализации в JSON
    even = "even"
    odd = "odd"

    @classmethod
    def of(cls, transpositions: int) -> Parity:
        return cls.even if transpositions % 2 == 0 else cls.odd


def vertex_symbol(v: int) -> str:
    return f"v{v}"


def separator_symbol(i: int) -> str:
    return f"s{i}"


@dataclass(frozen=True, slots=True)
class OrientationString:
    """Строка S(F): буквы вершин v0..vN, перемежаемые разделителями s1..s_{r-1}."""
    symbols: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return ", ".join(self.symbols)


@dataclass(frozen=True)
class OrientationAssignment:
    """Знаки ±1 всех верхних клеток относительно возрастающего представителя."""
    spec: ComplexSpec
    signs: Mapping[Cell, int]

    def sign(self, cell: Cell) -> int:
        return self.signs[cell]

    def __len__(self) -> int:
        return len(self.signs)


@dataclass(frozen=True)
class CoherenceReport:
    """
    Для каждой клетки коразмерности 1 - мультимножество индуцированных знаков
    от всех инцидентных верхних клеток. passed iff каждое мультимножество постоянно.
    """
    incidences: Mapping[Hashable, tuple[int, ...]]
    passed: bool
    violations: tuple[Hashable, ...] = ()
    expected_parents: int | None = None
    parent_count_ok: bool = True

    @property
    def codim1_count(self) -> int:
        return len(self.incidences)


@dataclass(frozen=True)
class OrientabilityVerdict:
    """Результат поиска ориентации на общем призматическом комплексе."""
    mode: str                              # "o" или "classical"
    satisfiable: bool
    method: str                            # "exhaustive" или "propagation"
    witness: Mapping[str, int] | None = None
    report: CoherenceReport | None = None
    components: int = 0
    checked_assignments: int = 0
    reasons: tuple[str, ...] = field(default_factory=tuple)
