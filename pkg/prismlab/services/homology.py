# prismlab/services/homology.py
"""
Целочисленные гомологии Y_{N,r} через нормальную форму Смита разреженных
граничных матриц. Арифметика точная (int Python), без модульных сокращений.
"""
import logging
from math import gcd

from prismlab.core.errors import DimensionError
from prismlab.models.cell import Cell, ComplexSpec, SignedCell
from prismlab.models.homology import HomologyGroup, SNFResult, SparseIntMatrix
from prismlab.services import prism_complex

logger = logging.getLogger(__name__)


# --- Matrices ---

def boundary_matrix(spec: ComplexSpec, k: int) -> SparseIntMatrix:
    """
    Матрица ∂_k: строки - (k-1)-клетки, столбцы - k-клетки в лексикографическом
    базисе; элемент - коэффициент строки в boundary(столбец, +1).
    """
    if not 1 <= k <= spec.top_dim:
        raise DimensionError(f"boundary matrix index {k} outside 1..{spec.top_dim} for {spec}")
    rows = prism_complex.enumerate_cells(spec, k - 1)
    cols = prism_complex.enumerate_cells(spec, k)
    row_index: dict[Cell, int] = {cell: i for i, cell in enumerate(rows)}
    entries = [
        (row_index[face], j, coef)
        for j, cell in enumerate(cols)
        for face, coef in prism_complex.boundary(SignedCell(cell, 1)).terms.items()
    ]
    logger.debug("boundary matrix d_%d of %s: %dx%d, nnz=%d", k, spec, len(rows), len(cols), len(entries))
    return SparseIntMatrix(len(rows), len(cols), tuple(entries))


def augmentation_matrix(spec: ComplexSpec) -> SparseIntMatrix:
    """ε: C_0 -> Z, каждая вершина комплекса переходит в 1."""
    f0 = len(prism_complex.enumerate_cells(spec, 0))
    return SparseIntMatrix(1, f0, tuple((0, j, 1) for j in range(f0)))


# --- Smith normal form ---

class _SparseReducer:
    """Строки - словари столбец -> значение; для каждого столбца - множество строк."""

    def __init__(self, m: SparseIntMatrix):
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        for i, j, v in m.entries:
            self.rows.setdefault(i, {})[j] = v
            self.cols.setdefault(j, set()).add(i)
        self.order = sorted(self.rows)
        self.start = 0

    def select_pivot(self) -> tuple[int, int] | None:
        """Ненулевой элемент минимального модуля, при равенстве - первый по (строка, столбец)."""
        while self.start < len(self.order) and self.order[self.start] not in self.rows:
            self.start += 1
        best: tuple[int, int, int] | None = None
        for idx in range(self.start, len(self.order)):
            row = self.rows.get(self.order[idx])
            if row is None:
                continue
            for j in sorted(row):
                a = abs(row[j])
                if best is None or a < best[0]:
                    best = (a, self.order[idx], j)
                    if a == 1: # Меньше не бывает
                        return best[1], best[2]
        return None if best is None else (best[1], best[2])

    def _set(self, i: int, j: int, value: int) -> None:
        row = self.rows[i]
        if value:
            row[j] = value
            self.cols.setdefault(j, set()).add(i)
        else:
            row.pop(j, None)
            col = self.cols.get(j)
            if col is not None:
                col.discard(i)
                if not col:
                    del self.cols[j]

    def add_row_multiple(self, target: int, source: int, q: int) -> None:
        """row_target += q · row_source."""
        target_row = self.rows[target]
        for j, v in list(self.rows[source].items()):
            self._set(target, j, target_row.get(j, 0) + q * v)
        if not target_row:
            del self.rows[target]

    def reduce_step(self, i: int, j: int) -> int | None:
        """
        Одна попытка обнулить столбец j и строку i вокруг опорного элемента.
        Возвращает |p|, если опорный элемент стал изолированным, иначе None
        (остались остатки меньшего модуля, нужно выбрать опорный заново).
        """
        p = self.rows[i][j]
        clean = True
        for k in sorted(self.cols.get(j, set()) - {i}):
            q = self.rows[k][j] // p
            self.add_row_multiple(k, i, -q)
            if k in self.rows and j in self.rows[k]:
                clean = False
        if not clean:
            return None
        # Столбец j теперь только в строке i: операции со столбцами меняют лишь строку i
        for c in sorted(c for c in self.rows[i] if c != j):
            value = self.rows[i][c]
            self._set(i, c, value - (value // p) * p)
            if c in self.rows[i]:
                clean = False
        if not clean:
            return None
        self._set(i, j, 0)
        del self.rows[i]
        return abs(p)


def smith_diagonal(m: SparseIntMatrix) -> list[int]:
    """Диагональ, эквивалентная m по унимодулярным преобразованиям (без условия делимости)."""
    reducer = _SparseReducer(m)
    diagonal: list[int] = []
    while True:
        pivot = reducer.select_pivot()
        if pivot is None:
            break
        d = reducer.reduce_step(*pivot)
        if d is not None:
            diagonal.append(d)
            if len(diagonal) % 5000 == 0:
                logger.debug("SNF: %d pivots of at most %d", len(diagonal), min(m.rows, m.cols))
    return diagonal


def _divisibility_chain(diagonal: list[int]) -> tuple[int, ...]:
    d = sorted(diagonal)
    for a in range(len(d)):
        for b in range(a + 1, len(d)):
            if d[b] % d[a]:
                g = gcd(d[a], d[b])
                d[a], d[b] = g, d[a] * d[b] // g
    return tuple(d)


def smith_normal_form(m: SparseIntMatrix) -> SNFResult:
    diagonal = smith_diagonal(m)
    # Единицы уже делят все; цепочку строим только для нетривиальных множителей
    ones = [d for d in diagonal if d == 1]
    rest = _divisibility_chain([d for d in diagonal if d != 1])
    return SNFResult(tuple(ones) + rest)


def rank(m: SparseIntMatrix) -> int:
    return smith_normal_form(m).rank


# --- Homology ---

def homology(spec: ComplexSpec, reduced: bool = True) -> list[HomologyGroup]:
    """
    H_k для k = 0..N-r+1: свободный ранг = f_k - rank ∂_k - rank ∂_{k+1},
    кручение - инвариантные множители ∂_{k+1}, большие 1.
    В приведенном варианте ∂_0 - аугментация.
    """
    top = spec.top_dim
    f = prism_complex.f_vector(spec)
    snf: dict[int, SNFResult] = {
        k: smith_normal_form(boundary_matrix(spec, k)) for k in range(1, top + 1)
    }
    if reduced:
        snf[0] = smith_normal_form(augmentation_matrix(spec))

    empty = SNFResult(())
    groups = []
    for k in range(top + 1):
        incoming = snf.get(k + 1, empty)
        free_rank = f[k] - snf.get(k, empty).rank - incoming.rank
        groups.append(HomologyGroup(dimension=k, free_rank=free_rank, torsion=incoming.torsion))
    logger.debug("homology of %s (%s): %s", spec, "reduced" if reduced else "unreduced",
                 ", ".join(str(g) for g in groups))
    return groups


def betti_numbers(groups: list[HomologyGroup]) -> list[int]:
    return [g.free_rank for g in groups]


def euler_characteristic(spec: ComplexSpec) -> int:
    return prism_complex.f_vector(spec).euler_characteristic


def euler_characteristic_from_homology(groups: list[HomologyGroup], reduced: bool = True) -> int:
    chi = sum((-1) ** g.dimension * g.free_rank for g in groups)
    return chi + 1 if reduced else chi


def connectivity_violations(spec: ComplexSpec, groups: list[HomologyGroup] | None = None) -> list[int]:
    """Размерности k <= N-r, где приведенные H_k не обнулились; плюс top, если H_top = 0."""
    groups = groups if groups is not None else homology(spec, reduced=True)
    bad = [g.dimension for g in groups if g.dimension <= spec.n - spec.r and not g.is_trivial]
    if groups[-1].is_trivial:
        bad.append(groups[-1].dimension)
    return bad


def to_reduced(groups: list[HomologyGroup]) -> list[HomologyGroup]:
    """Из неприведенных групп: H̃_0 = H_0 / Z, остальные без изменений."""
    first = groups[0]
    if first.free_rank < 1:
        raise ValueError("unreduced H_0 must contain a free summand")
    return [HomologyGroup(0, first.free_rank - 1, first.torsion), *groups[1:]]
