# prismlab/services/tverberg.py
"""
Точная проверка линейной и аффинной теорем Тверберга.

Пересечение выпуклых оболочек r частей - это допустимость системы
Σ_j λ^i_j p^i_j = x, Σ_j λ^i_j = 1, λ >= 0; x исключается вычитанием
уравнений первой части. Разбиения на r блоков перебираются без повторов:
блоки упорядочены по минимальному элементу.
"""
import logging
import random
from fractions import Fraction
from typing import Iterator, Sequence

from prismlab.core.config import get_settings
from prismlab.core.errors import (
    DimensionMismatchError,
    PointCountError,
    PrismParseError,
    TheoremViolationError,
)
from prismlab.models.cell import Cell
from prismlab.models.tverberg import (
    AffineTTTResult,
    HullWitness,
    PartitionCertificate,
    Point,
    PointConfig,
)
from prismlab.services import lp, symmetry

logger = logging.getLogger(__name__)


# --- Hull intersection ---

def _hull_system(parts: Sequence[Sequence[Point]], d: int) -> tuple[list[list[Fraction]], list[Fraction]]:
    sizes = [len(part) for part in parts]
    offsets = [sum(sizes[:i]) for i in range(len(parts))]
    n = sum(sizes)
    a: list[list[Fraction]] = []
    b: list[Fraction] = []
    # Нормировка весов каждой части
    for i, size in enumerate(sizes):
        a.append([Fraction(1) if offsets[i] <= v < offsets[i] + size else Fraction(0) for v in range(n)])
        b.append(Fraction(1))
    # Комбинация первой части равна комбинации каждой следующей, покоординатно
    for i in range(1, len(parts)):
        for c in range(d):
            row = [Fraction(0)] * n
            for j, p in enumerate(parts[0]):
                row[offsets[0] + j] += p[c]
            for j, p in enumerate(parts[i]):
                row[offsets[i] + j] -= p[c]
            a.append(row)
            b.append(Fraction(0))
    return a, b


def _check_parts(parts: Sequence[Sequence[Point]], d: int) -> list[list[Point]]:
    if d < 1:
        raise DimensionMismatchError(f"ambient dimension must be >= 1, got {d}")
    checked = []
    for i, part in enumerate(parts):
        if not part:
            raise ValueError(f"part {i} is empty")
        pts = [tuple(Fraction(x) for x in p) for p in part]
        for p in pts:
            if len(p) != d:
                raise DimensionMismatchError(f"point {p} of part {i} is not in R^{d}")
        checked.append(pts)
    return checked


def hulls_intersect(parts: Sequence[Sequence[Point]], d: int) -> HullWitness | None:
    """Общая точка выпуклых оболочек частей или None (доказательство пустоты пересечения)."""
    pts = _check_parts(parts, d)
    a, b = _hull_system(pts, d)
    solution = lp.find_nonnegative_solution(a, b)
    if solution is None:
        return None
    weights: list[tuple[Fraction, ...]] = []
    offset = 0
    for part in pts:
        weights.append(tuple(solution[offset:offset + len(part)]))
        offset += len(part)
    point = tuple(
        sum((w * p[c] for w, p in zip(weights[0], pts[0])), Fraction(0)) for c in range(d)
    )
    return HullWitness(point=point, weights=tuple(weights))


def hulls_intersect_oracle(parts: Sequence[Sequence[Point]], d: int) -> bool:
    """То же решение, но через исключение Фурье-Моцкина."""
    pts = _check_parts(parts, d)
    a, b = _hull_system(pts, d)
    return lp.fourier_motzkin_feasible(a, b)


# --- Partitions ---

def unordered_partitions(n: int, r: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Разбиения {0..n-1} на r непустых блоков, блоки по возрастанию минимума, лексикографически."""
    blocks: list[list[int]] = []

    def rec(i: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if len(blocks) + (n - i) < r:
            return
        if i == n:
            if len(blocks) == r:
                yield tuple(tuple(block) for block in blocks)
            return
        for block in blocks:
            block.append(i)
            yield from rec(i + 1)
            block.pop()
        if len(blocks) < r:
            blocks.append([i])
            yield from rec(i + 1)
            blocks.pop()

    yield from rec(0)


def tverberg_search(config: PointConfig, r: int) -> PartitionCertificate | None:
    """
    Первое в каноническом порядке разбиение на r частей с пересекающимися
    оболочками. При числе точек >= (d+1)(r-1)+1 ответ None невозможен.
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    checked = 0
    for blocks in unordered_partitions(len(config), r):
        checked += 1
        witness = hulls_intersect([[config.points[i] for i in block] for block in blocks], config.ambient_dim)
        if witness is not None:
            logger.debug("Tverberg partition found after %d candidates", checked)
            return PartitionCertificate(
                parts=blocks,
                witness=witness.point,
                coefficients=tuple(dict(zip(block, w)) for block, w in zip(blocks, witness.weights)),
            )
    if len(config) >= config.tverberg_bound(r):
        logger.error("no Tverberg partition among %d candidates for %d points, d=%d, r=%d",
                     checked, len(config), config.ambient_dim, r)
        raise TheoremViolationError(
            f"{len(config)} points in R^{config.ambient_dim} admit no {r}-partition "
            f"with intersecting hulls"
        )
    return None


def radon_check(config: PointConfig) -> PartitionCertificate | None:
    return tverberg_search(config, 2)


def verify_certificate(config: PointConfig, certificate: PartitionCertificate) -> bool:
    """Точная проверка: блоки разбивают все точки, веса >= 0, сумма 1, комбинации равны свидетелю."""
    indices = [i for block in certificate.parts for i in block]
    if sorted(indices) != list(range(len(config))) or any(not block for block in certificate.parts):
        return False
    if len(certificate.coefficients) != len(certificate.parts):
        return False
    d = config.ambient_dim
    if len(certificate.witness) != d:
        return False
    for block, weights in zip(certificate.parts, certificate.coefficients):
        if set(weights) != set(block):
            return False
        if any(w < 0 for w in weights.values()) or sum(weights.values(), Fraction(0)) != 1:
            return False
        combination = tuple(
            sum((weights[i] * config.points[i][c] for i in block), Fraction(0)) for c in range(d)
        )
        if combination != tuple(certificate.witness):
            return False
    return True


def affine_ttt_check(config: PointConfig, r: int) -> AffineTTTResult:
    """
    f: ∂Δ_N -> R^d аффинна на гранях, N = (d+1)(r-1). Разбиение Тверберга
    образов вершин дает дополнительные грани Δ^1..Δ^r с пересекающимися образами.
    """
    n = (config.ambient_dim + 1) * (r - 1)
    if len(config) != n + 1:
        raise PointCountError(f"expected {n + 1} vertex images for d={config.ambient_dim}, r={r}, got {len(config)}")
    certificate = tverberg_search(config, r)
    if certificate is None: # tverberg_search уже бросает исключение в этом режиме
        raise TheoremViolationError("no Tverberg partition for the vertex images")
    cell = Cell(certificate.parts)
    return AffineTTTResult(
        certificate=certificate,
        top_cell=cell,
        faces=tuple(symmetry.complementary_faces(cell)),
        face_dims=tuple(symmetry.face_dims(cell)),
    )


# --- Input / output ---

def parse_points(text: str, d: int | None = None) -> PointConfig:
    """Одна точка на строку, координаты "p/q" или целые через пробел; '#' - комментарий."""
    points: list[tuple[Fraction, ...]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            points.append(tuple(Fraction(tok) for tok in line.split()))
        except (ValueError, ZeroDivisionError) as e:
            raise PrismParseError(f"line {lineno}: {e}") from e
    if not points:
        raise PrismParseError("no points given")
    widths = {len(p) for p in points}
    if len(widths) > 1:
        raise PrismParseError(f"points have different numbers of coordinates: {sorted(widths)}")
    width = widths.pop()
    if d is not None and width != d:
        raise DimensionMismatchError(f"points have {width} coordinates, --dim is {d}")
    return PointConfig(width, tuple(points))


def random_config(
    rng: random.Random | None, d: int, count: int, max_num: int = 10, max_den: int = 5
) -> PointConfig:
    """Случайные рациональные точки; без генератора берется сид PRISMLAB_RANDOM_SEED."""
    rng = rng or random.Random(get_settings().RANDOM_SEED)
    return PointConfig(d, tuple(
        tuple(Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den)) for _ in range(d))
        for _ in range(count)
    ))
