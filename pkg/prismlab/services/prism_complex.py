# prismlab/services/prism_complex.py
"""
Клетки комплекса Y_{N,r}, f-вектор и граничный оператор со знаками.

Клетка хранится возрастающим представителем, ориентация - одним знаком.
Граница произведения симплексов считается по правилу Лейбница:
∂(Δ(V_1)×...×Δ(V_r)) = Σ_k (-1)^{d_1+...+d_{k-1}} Δ(V_1)×...×∂Δ(V_k)×...×Δ(V_r),
∂Δ(v_0,...,v_s) = Σ_j (-1)^j Δ(v_0,...,v̂_j,...,v_s).
"""
import logging
from functools import lru_cache
from itertools import combinations, product
from math import comb, factorial
from typing import Iterable, Sequence

from sympy.functions.combinatorial.numbers import stirling

from prismlab.core.errors import EmptyDomainError, InvalidSpecError
from prismlab.models.cell import Cell, Chain, ComplexSpec, FVector, SignedCell

logger = logging.getLogger(__name__)


# --- Enumeration ---

def _ordered_partitions(vertices: Sequence[int], r: int) -> Iterable[tuple[tuple[int, ...], ...]]:
    """Все упорядоченные разбиения возрастающего набора вершин на r непустых частей."""
    m = len(vertices)
    for labels in product(range(r), repeat=m):
        if len(set(labels)) != r:
            continue
        yield tuple(
            tuple(v for v, label in zip(vertices, labels) if label == i)
            for i in range(r)
        )


@lru_cache(maxsize=256)
def _cells(spec: ComplexSpec, k: int) -> tuple[Cell, ...]:
    cells = [
        Cell(parts)
        for subset in combinations(range(spec.vertex_count), k + spec.r)
        for parts in _ordered_partitions(subset, spec.r)
    ]
    cells.sort(key=Cell.sort_key)
    logger.debug("enumerated %d cells of dimension %d in %s", len(cells), k, spec)
    return tuple(cells)


def enumerate_cells(spec: ComplexSpec, k: int) -> list[Cell]:
    """
    Все клетки размерности k, каждая ровно один раз, в лексикографическом порядке
    сплющенного представления (разделитель частей раньше вершин).
    """
    if not 0 <= k <= spec.top_dim:
        raise EmptyDomainError(f"dimension {k} outside 0..{spec.top_dim} for {spec}")
    return list(_cells(spec, k))


def top_cells(spec: ComplexSpec) -> list[Cell]:
    return enumerate_cells(spec, spec.top_dim)


def all_cells(spec: ComplexSpec) -> list[Cell]:
    return [cell for k in range(spec.top_dim + 1) for cell in _cells(spec, k)]


def closed_form_count(spec: ComplexSpec, k: int) -> int:
    """f_k = C(N+1, k+r) · r! · S(k+r, r), S - число Стирлинга второго рода."""
    if not 0 <= k <= spec.top_dim:
        return 0
    return comb(spec.vertex_count, k + spec.r) * factorial(spec.r) * int(stirling(k + spec.r, spec.r))


def top_cell_count(spec: ComplexSpec) -> int:
    return closed_form_count(spec, spec.top_dim)


def f_vector(spec: ComplexSpec) -> FVector:
    return FVector.of(len(_cells(spec, k)) for k in range(spec.top_dim + 1))


def closed_form_f_vector(spec: ComplexSpec) -> FVector:
    return FVector.of(closed_form_count(spec, k) for k in range(spec.top_dim + 1))


# --- Orientation normal form ---

def _sorting_parity(seq: Sequence[int]) -> int:
    """Четность перестановки, сортирующей seq (0 - четная, 1 - нечетная)."""
    inversions = sum(1 for a, b in combinations(seq, 2) if a > b)
    return inversions % 2


def canonicalize(ordered_parts: Iterable[Iterable[int]], sign: int = 1) -> SignedCell:
    """
    Приводит произвольно упорядоченные части к возрастающему представителю,
    знак сортирующей перестановки каждой части переносится в коэффициент.
    """
    raw = [tuple(int(v) for v in part) for part in ordered_parts]
    for part in raw:
        if len(set(part)) != len(part):
            raise InvalidSpecError(f"repeated vertex in part {part}")
        if _sorting_parity(part):
            sign = -sign
    cell = Cell.of(tuple(sorted(part)) for part in raw)
    return SignedCell(cell, sign)


# --- Boundary ---

def boundary(sc: SignedCell) -> Chain:
    """
    Граница ориентированной клетки. Вклад дают только части размера >= 2,
    поэтому пустых частей не возникает. Для клетки размерности 0 - нулевая цепь.
    """
    cell = sc.cell
    if cell.dim == 0:
        return Chain.zero(-1)

    terms: dict[Cell, int] = {}
    prefix = 0 # d_1 + ... + d_{k-1}
    for k, part in enumerate(cell.parts):
        if len(part) >= 2:
            head, tail = cell.parts[:k], cell.parts[k + 1:]
            for j in range(len(part)):
                face_part = part[:j] + part[j + 1:]
                assert face_part, "boundary term with an empty part"
                face = Cell(head + (face_part,) + tail)
                coef = -sc.sign if (prefix + j) % 2 else sc.sign
                terms[face] = terms.get(face, 0) + coef
        prefix += len(part) - 1
    return Chain(cell.dim - 1, terms)


def boundary_chain(c: Chain) -> Chain:
    """Линейное продолжение boundary на цепи."""
    if c.dim <= 0 or c.is_zero():
        return Chain.zero(c.dim - 1)
    acc: dict[Cell, int] = {}
    for cell, coef in c.terms.items():
        for face, face_coef in boundary(SignedCell(cell, 1)).terms.items():
            acc[face] = acc.get(face, 0) + coef * face_coef
    return Chain(c.dim - 1, acc)


def cofaces(spec: ComplexSpec, cell: Cell) -> list[Cell]:
    """Клетки на размерность выше, в границе которых лежит cell: одна недостающая вершина в одну часть."""
    missing = sorted(set(range(spec.vertex_count)) - cell.vertices)
    result = []
    for v in missing:
        for k, part in enumerate(cell.parts):
            grown = tuple(sorted(part + (v,)))
            result.append(Cell(cell.parts[:k] + (grown,) + cell.parts[k + 1:]))
    result.sort(key=Cell.sort_key)
    return result


def incidence_counts(spec: ComplexSpec) -> dict[Cell, int]:
    """Для каждой клетки коразмерности 1 - число верхних клеток, в границу которых она входит."""
    counts: dict[Cell, int] = {}
    for top in _cells(spec, spec.top_dim):
        for face in boundary(SignedCell(top, 1)).terms:
            counts[face] = counts.get(face, 0) + 1
    return counts


# --- Checks ---

def boundary_squared_violations(spec: ComplexSpec) -> list[Cell]:
    """Клетки c, для которых ∂∂c != 0 (должно быть пусто)."""
    bad = [
        cell
        for k in range(2, spec.top_dim + 1)
        for cell in _cells(spec, k)
        if not boundary_chain(boundary(SignedCell(cell, 1))).is_zero()
    ]
    if bad:
        logger.warning("d^2 != 0 on %d cells of %s", len(bad), spec)
    return bad


def parent_count_violations(spec: ComplexSpec) -> dict[Cell, int]:
    """Клетки коразмерности 1, у которых число верхних родителей отлично от r."""
    if spec.top_dim < 1:
        return {}
    counts = incidence_counts(spec)
    bad = {cell: n for cell, n in counts.items() if n != spec.r}
    missing = [cell for cell in _cells(spec, spec.top_dim - 1) if cell not in counts]
    bad.update({cell: 0 for cell in missing})
    return bad
