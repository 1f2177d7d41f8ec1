# prismlab/services/symmetry.py
"""
Действие S_r на Y_{N,r} перестановкой частей, свободность, орбиты и
клеточная модель факторa Y_{N,r}/S_r = [K(S_r,1)]_{N-r+1}.
"""
import logging
from itertools import permutations
from math import factorial
from typing import Sequence

from prismlab.core.errors import FreenessViolationError
from prismlab.models.cell import Cell, ComplexSpec, FVector, SignedCell
from prismlab.models.symmetry import FreeActionReport, Orbit, Permutation
from prismlab.schemas.symmetry import OrbitReport
from prismlab.services import orientation, prism_complex

logger = logging.getLogger(__name__)


def symmetric_group(r: int) -> list[Permutation]:
    return [Permutation(images) for images in permutations(range(r))]


def cyclic_group(r: int) -> list[Permutation]:
    """Z_r, порожденная сдвигом (w_1,...,w_r) -> (w_2,...,w_r,w_1)."""
    return [Permutation.cyclic_shift(r, k) for k in range(r)]


def act(sigma: Permutation, c: Cell) -> Cell:
    """Часть с индексом i переходит на место sigma(i); части уже возрастающие."""
    if sigma.degree != c.r:
        raise ValueError(f"permutation of degree {sigma.degree} cannot act on a cell with {c.r} parts")
    parts: list[tuple[int, ...]] = [()] * c.r
    for i, part in enumerate(c.parts):
        parts[sigma(i)] = part
    return Cell(tuple(parts))


# --- Freeness and orbits ---

class _UnionFind:
    def __init__(self, items: Sequence[Cell]):
        self.parent = {item: item for item in items}

    def find(self, x: Cell) -> Cell:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: Cell, b: Cell) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # Корнем становится лексикографически меньшая клетка
            if Cell.sort_key(rb) < Cell.sort_key(ra):
                ra, rb = rb, ra
            self.parent[rb] = ra


def orbits(spec: ComplexSpec, k: int, group: Sequence[Permutation] | None = None) -> list[Orbit]:
    """Орбиты k-клеток; строятся объединением по образующим, упорядочены по представителю."""
    group = group if group is not None else symmetric_group(spec.r)
    cells = prism_complex.enumerate_cells(spec, k)
    uf = _UnionFind(cells)
    for sigma in group:
        if sigma.is_identity:
            continue
        for cell in cells:
            uf.union(cell, act(sigma, cell))
    classes: dict[Cell, set[Cell]] = {}
    for cell in cells:
        classes.setdefault(uf.find(cell), set()).add(cell)
    result = [Orbit(frozenset(members)) for members in classes.values()]
    result.sort(key=lambda o: Cell.sort_key(o.representative))
    return result


def orbit_report(spec: ComplexSpec, k: int, group: Sequence[Permutation] | None = None) -> OrbitReport:
    return OrbitReport.from_orbits(k, orbits(spec, k, group))


def verify_free_action(spec: ComplexSpec, group: Sequence[Permutation] | None = None) -> FreeActionReport:
    """Свободно iff act(σ, c) != c для всех клеток и всех σ != id; полный перебор."""
    group = group if group is not None else symmetric_group(spec.r)
    fixed: list[tuple[Permutation, Cell]] = []
    for cell in prism_complex.all_cells(spec):
        for sigma in group:
            if not sigma.is_identity and act(sigma, cell) == cell:
                fixed.append((sigma, cell))

    counts, sizes = [], set()
    for k in range(spec.top_dim + 1):
        orbit_list = orbits(spec, k, group)
        counts.append(len(orbit_list))
        sizes.update(o.size for o in orbit_list)
    if fixed:
        logger.warning("action on %s is not free: %d fixed pairs", spec, len(fixed))
    return FreeActionReport(
        passed=not fixed,
        group_order=len(group),
        fixed_pairs=tuple(fixed),
        orbit_counts=tuple(counts),
        orbit_sizes=frozenset(sizes),
    )


def quotient_f_vector(spec: ComplexSpec) -> FVector:
    """f_k(Y/S_r) = f_k / r!; неделимость или несовпадение с числом орбит - нарушение свободности."""
    order = factorial(spec.r)
    counts = []
    for k, f_k in enumerate(prism_complex.f_vector(spec).counts):
        quotient, remainder = divmod(f_k, order)
        if remainder:
            raise FreenessViolationError(f"f_{k}={f_k} of {spec} is not divisible by {spec.r}!={order}")
        orbit_count = len(orbits(spec, k))
        if orbit_count != quotient:
            raise FreenessViolationError(
                f"{orbit_count} orbits in dimension {k} of {spec}, expected {quotient}"
            )
        counts.append(quotient)
    return FVector.of(counts)


def complementary_faces(c: Cell) -> list[tuple[int, ...]]:
    """Части V_1..V_r как попарно непересекающиеся грани Δ(V_i) симплекса Δ_N."""
    return [tuple(part) for part in c.parts]


def face_dims(c: Cell) -> list[int]:
    return [len(part) - 1 for part in c.parts]


# --- Equivariance ---

def boundary_equivariance_violations(spec: ComplexSpec, group: Sequence[Permutation] | None = None) -> list[tuple[Permutation, Cell]]:
    """Носитель ∂(σc) должен совпадать с σ(носитель ∂c)."""
    group = group if group is not None else symmetric_group(spec.r)
    bad = []
    for k in range(1, spec.top_dim + 1):
        for cell in prism_complex.enumerate_cells(spec, k):
            support = set(prism_complex.boundary(SignedCell(cell, 1)).terms)
            for sigma in group:
                moved = set(prism_complex.boundary(SignedCell(act(sigma, cell), 1)).terms)
                if moved != {act(sigma, face) for face in support}:
                    bad.append((sigma, cell))
    return bad


def signed_equivariance_report(spec: ComplexSpec) -> dict[str, dict[str, dict[str, int]]]:
    """
    Эмпирически: для каждой σ и каждой формы (размеры частей по порядку) -
    сколько верхних клеток сохраняют или меняют O-знак под действием σ.
    """
    assignment = orientation.o_orientation(spec)
    report: dict[str, dict[str, dict[str, int]]] = {}
    for sigma in symmetric_group(spec.r):
        per_shape: dict[str, dict[str, int]] = {}
        for cell, sign in assignment.signs.items():
            shape = "x".join(str(len(part)) for part in cell.parts)
            bucket = per_shape.setdefault(shape, {"preserved": 0, "reversed": 0})
            if assignment.sign(act(sigma, cell)) == sign:
                bucket["preserved"] += 1
            else:
                bucket["reversed"] += 1
        report[str(sigma)] = dict(sorted(per_shape.items()))
    return report
