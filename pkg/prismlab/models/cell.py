# prismlab/models/cell.py
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from prismlab.core.errors import InvalidSpecError, DegenerateSpecError

# В ключе сортировки разделитель частей идет раньше любой вершины
PART_SEPARATOR_KEY = -1


@dataclass(frozen=True, slots=True)
class ComplexSpec:
    """Параметры комплекса Y_{N,r}: симплекс Δ_N на вершинах 0..N и r частей."""
    n: int
    r: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidSpecError(f"N must be >= 1, got {self.n}")
        if self.r < 2:
            raise InvalidSpecError(f"r must be >= 2, got {self.r}")
        if self.n < self.r - 1:
            raise InvalidSpecError(
                f"N={self.n} < r-1={self.r - 1}: {self.r} disjoint nonempty parts "
                f"do not fit into {self.n + 1} vertices, the complex has no cells"
            )

    @property
    def vertex_count(self) -> int:
        return self.n + 1

    @property
    def top_dim(self) -> int:
        return self.n - self.r + 1

    def require_nondegenerate(self) -> None:
        """Операции ориентации требуют N >= r."""
        if self.n < self.r:
            raise DegenerateSpecError(
                f"degenerate spec N={self.n}, r={self.r}: orientation needs N >= r"
            )

    def __str__(self) -> str:
        return f"Y_{{{self.n},{self.r}}}"


@dataclass(frozen=True, slots=True)
class Cell:
    """
    Клетка Y_{N,r}: упорядоченный набор r попарно непересекающихся непустых
    строго возрастающих списков вершин. Конструктор ничего не проверяет
    (горячий путь перечисления), для внешних данных есть Cell.of().
    """
    parts: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]]) -> Cell:
        normalized = tuple(tuple(int(v) for v in part) for part in parts)
        seen: set[int] = set()
        for part in normalized:
            if not part:
                raise InvalidSpecError(f"empty part in {normalized}")
            if any(a >= b for a, b in zip(part, part[1:])):
                raise InvalidSpecError(f"part {part} is not strictly ascending")
            if part[0] < 0:
                raise InvalidSpecError(f"negative vertex in {part}")
            if seen.intersection(part):
                raise InvalidSpecError(f"parts of {normalized} are not disjoint")
            seen.update(part)
        if len(normalized) < 2:
            raise InvalidSpecError("a cell needs at least two parts")
        return cls(normalized)

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def dim(self) -> int:
        return sum(len(part) for part in self.parts) - len(self.parts)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for part in self.parts for v in part)

    @property
    def shape(self) -> tuple[int, ...]:
        """Размерности сомножителей Δ_{d_1} × ... × Δ_{d_r}."""
        return tuple(len(part) - 1 for part in self.parts)

    def sort_key(self) -> tuple[int, ...]:
        key: list[int] = []
        for i, part in enumerate(self.parts):
            if i:
                key.append(PART_SEPARATOR_KEY)
            key.extend(part)
        return tuple(key)

    def is_top(self, spec: ComplexSpec) -> bool:
        return self.r == spec.r and self.dim == spec.top_dim

    def __str__(self) -> str:
        return "".join("(" + ",".join(map(str, part)) + ")" for part in self.parts)


@dataclass(frozen=True, slots=True)
class SignedCell:
    """Клетка с ориентацией: знак относительно возрастающего представителя, синглтоны со знаком +."""
    cell: Cell
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True, eq=False)
class Chain:
    """Формальная сумма клеток размерности dim с целыми коэффициентами (нулей не храним)."""
    dim: int
    terms: Mapping[Cell, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {cell: int(coef) for cell, coef in self.terms.items() if coef}
        for cell in cleaned:
            if cell.dim != self.dim:
                raise ValueError(f"cell {cell} has dimension {cell.dim}, chain has {self.dim}")
        object.__setattr__(self, "terms", MappingProxyType(cleaned))

    @classmethod
    def zero(cls, dim: int) -> Chain:
        return cls(dim, {})

    @classmethod
    def from_signed(cls, sc: SignedCell) -> Chain:
        return cls(sc.cell.dim, {sc.cell: sc.sign})

    @classmethod
    def sum_of(cls, dim: int, chains: Iterable[Chain]) -> Chain:
        acc: dict[Cell, int] = {}
        for chain in chains:
            if chain.dim != dim and chain.terms:
                raise ValueError(f"cannot add chains of dimensions {dim} and {chain.dim}")
            for cell, coef in chain.terms.items():
                acc[cell] = acc.get(cell, 0) + coef
        return cls(dim, acc)

    def coefficient(self, cell: Cell) -> int:
        return self.terms.get(cell, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Cell]:
        return sorted(self.terms, key=Cell.sort_key)

    def items(self) -> Iterator[tuple[Cell, int]]:
        for cell in self.support():
            yield cell, self.terms[cell]

    def __add__(self, other: Chain) -> Chain:
        return Chain.sum_of(self.dim, (self, other))

    def __neg__(self) -> Chain:
        return Chain(self.dim, {cell: -coef for cell, coef in self.terms.items()})

    def __sub__(self, other: Chain) -> Chain:
        return self + (-other)

    def scale(self, factor: int) -> Chain:
        return Chain(self.dim, {cell: factor * coef for cell, coef in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.dim == other.dim and dict(self.terms) == dict(other.terms)

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True, slots=True)
class FVector:
    counts: tuple[int, ...]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * f for k, f in enumerate(self.counts))

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def __len__(self) -> int:
        return len(self.counts)

    def as_list(self) -> list[int]:
        return list(self.counts)

    @classmethod
    def of(cls, counts: Sequence[int]) -> FVector:
        return cls(tuple(int(c) for c in counts))
