# prismlab/models/homology.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from prismlab.core.errors import PrismParseError


@dataclass(frozen=True)
class SparseIntMatrix:
    """Разреженная целочисленная матрица: тройки (строка, столбец, значение), без нулей и повторов."""
    rows: int
    cols: int
    entries: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        seen: set[tuple[int, int]] = set()
        for i, j, v in self.entries:
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise ValueError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
            if v == 0:
                raise ValueError(f"zero entry stored at ({i}, {j})")
            if (i, j) in seen:
                raise ValueError(f"duplicate entry at ({i}, {j})")
            seen.add((i, j))
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    @classmethod
    def from_dict(cls, rows: int, cols: int, values: dict[tuple[int, int], int]) -> SparseIntMatrix:
        return cls(rows, cols, tuple((i, j, v) for (i, j), v in values.items() if v))

    @classmethod
    def from_dense(cls, dense: Iterable[Iterable[int]]) -> SparseIntMatrix:
        data = [list(row) for row in dense]
        rows = len(data)
        cols = len(data[0]) if data else 0
        return cls(rows, cols, tuple(
            (i, j, int(v)) for i, row in enumerate(data) for j, v in enumerate(row) if v
        ))

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for i, j, v in self.entries:
            dense[i][j] = v
        return dense

    def column(self, j: int) -> dict[int, int]:
        return {i: v for i, jj, v in self.entries if jj == j}

    def __matmul__(self, other: SparseIntMatrix) -> SparseIntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for k, j, v in other.entries:
            by_row.setdefault(k, []).append((j, v))
        acc: dict[tuple[int, int], int] = {}
        for i, k, a in self.entries:
            for j, b in by_row.get(k, ()):
                acc[(i, j)] = acc.get((i, j), 0) + a * b
        return SparseIntMatrix.from_dict(self.rows, other.cols, acc)

    def to_text(self) -> str:
        """Формат экспорта: заголовок "rows cols nnz", затем тройки "row col value" (0-индексация)."""
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        lines.extend(f"{i} {j} {v}" for i, j, v in self.entries)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> SparseIntMatrix:
        lines = [line.split() for line in text.splitlines() if line.strip()]
        if not lines or len(lines[0]) != 3:
            raise PrismParseError("matrix text must start with 'rows cols nnz'")
        try:
            rows, cols, nnz = (int(x) for x in lines[0])
            triples = tuple((int(a), int(b), int(c)) for a, b, c in lines[1:])
        except ValueError as e:
            raise PrismParseError(f"bad matrix text: {e}") from e
        if len(triples) != nnz:
            raise PrismParseError(f"header announces {nnz} entries, found {len(triples)}")
        try:
            return cls(rows, cols, triples)
        except ValueError as e:
            raise PrismParseError(str(e)) from e


@dataclass(frozen=True, slots=True)
class SNFResult:
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


@dataclass(frozen=True, slots=True)
class HomologyGroup:
    dimension: int
    free_rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"
