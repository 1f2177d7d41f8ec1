# prismlab/services/lp.py
"""
Точная допустимость линейных систем A x = b, x >= 0 над рациональными числами.

find_nonnegative_solution - первая фаза симплекс-метода на таблице из Fraction
с правилом Бленда (наименьший индекс входящей и выходящей переменной), без
циклов и без плавающей точки. fourier_motzkin_feasible - независимый оракул:
исключение по Гауссу для равенств, затем Фурье-Моцкин для неравенств.
"""
import logging
from fractions import Fraction
from typing import Sequence

logger = logging.getLogger(__name__)

Matrix = Sequence[Sequence[Fraction | int]]
Vector = Sequence[Fraction | int]


def _as_fractions(a: Matrix, b: Vector) -> tuple[list[list[Fraction]], list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in a]
    rhs = [Fraction(x) for x in b]
    if len(rows) != len(rhs):
        raise ValueError(f"{len(rows)} rows but {len(rhs)} right-hand sides")
    widths = {len(row) for row in rows}
    if len(widths) > 1:
        raise ValueError("rows of different lengths")
    return rows, rhs


def find_nonnegative_solution(a: Matrix, b: Vector) -> list[Fraction] | None:
    """Точное решение A x = b, x >= 0 или None, если система несовместна."""
    rows, rhs = _as_fractions(a, b)
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if m == 0:
        return [Fraction(0)] * n

    # Правые части неотрицательны; искусственные переменные n..n+m-1 образуют базис
    tableau: list[list[Fraction]] = []
    for i, (row, beta) in enumerate(zip(rows, rhs)):
        flip = -1 if beta < 0 else 1
        artificial = [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        tableau.append([flip * x for x in row] + artificial + [flip * beta])
    basis = list(range(n, n + m))

    # Строка приведенных стоимостей для min Σ искусственных
    width = n + m + 1
    cost = [Fraction(0)] * width
    for j in list(range(n)) + [width - 1]:
        cost[j] = -sum((tableau[i][j] for i in range(m)), Fraction(0))

    pivots = 0
    while True:
        entering = next((j for j in range(n) if cost[j] < 0), None)
        if entering is None:
            break
        candidates = [
            (tableau[i][width - 1] / tableau[i][entering], basis[i], i)
            for i in range(m)
            if tableau[i][entering] > 0
        ]
        if not candidates: # Для первой фазы невозможно: целевая функция ограничена снизу нулем
            break
        _, _, leaving = min(candidates)
        _pivot(tableau, cost, leaving, entering)
        basis[leaving] = entering
        pivots += 1

    infeasibility = -cost[width - 1]
    logger.debug("phase I: %d pivots, residual %s", pivots, infeasibility)
    if infeasibility != 0:
        return None

    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tableau[i][width - 1]
    return x


def _pivot(tableau: list[list[Fraction]], cost: list[Fraction], i: int, j: int) -> None:
    pivot_row = tableau[i]
    p = pivot_row[j]
    tableau[i] = pivot_row = [x / p for x in pivot_row]
    for k, row in enumerate(tableau):
        if k != i and row[j] != 0:
            f = row[j]
            tableau[k] = [x - f * y for x, y in zip(row, pivot_row)]
    if cost[j] != 0:
        f = cost[j]
        cost[:] = [x - f * y for x, y in zip(cost, pivot_row)]


# --- Fourier-Motzkin oracle ---

Inequality = tuple[tuple[Fraction, ...], Fraction] # Σ a_i x_i <= beta


def _normalize(coeffs: Sequence[Fraction], beta: Fraction) -> Inequality:
    scale = next((abs(c) for c in coeffs if c != 0), None)
    if scale is None:
        return tuple(Fraction(0) for _ in coeffs), beta
    return tuple(c / scale for c in coeffs), beta / scale


def _eliminate_equalities(rows: list[list[Fraction]], rhs: list[Fraction], n: int):
    """Приведенный ступенчатый вид. Возвращает (pivot_rows, free_vars) или None при противоречии."""
    aug = [row[:] + [beta] for row, beta in zip(rows, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
    for row in aug[r:]:
        if row[n] != 0:
            return None
    free = [c for c in range(n) if c not in pivot_cols]
    return list(zip(pivot_cols, aug[:r])), free


def fourier_motzkin_feasible(a: Matrix, b: Vector) -> bool:
    """Независимая проверка совместности A x = b, x >= 0."""
    rows, rhs = _as_fractions(a, b)
    n = len(rows[0]) if rows else 0
    reduced = _eliminate_equalities(rows, rhs, n)
    if reduced is None:
        return False
    pivot_rows, free = reduced
    k = len(free)

    # x_p = beta - Σ_f a_pf x_f >= 0  <=>  Σ_f a_pf x_f <= beta;  x_f >= 0  <=>  -x_f <= 0
    system: set[Inequality] = set()
    for _, row in pivot_rows:
        system.add(_normalize([row[f] for f in free], row[n]))
    for idx in range(k):
        system.add(_normalize([Fraction(-1) if t == idx else Fraction(0) for t in range(k)], Fraction(0)))

    for t in range(k):
        upper = [ineq for ineq in system if ineq[0][t] > 0]
        lower = [ineq for ineq in system if ineq[0][t] < 0]
        kept = {ineq for ineq in system if ineq[0][t] == 0}
        for cu, bu in upper:
            for cl, bl in lower:
                su, sl = cu[t], -cl[t]
                coeffs = [x / su + y / sl for x, y in zip(cu, cl)]
                coeffs[t] = Fraction(0)
                kept.add(_normalize(coeffs, bu / su + bl / sl))
        system = kept
        logger.debug("FM: eliminated variable %d, %d inequalities left", t, len(system))

    return all(beta >= 0 for coeffs, beta in system if not any(coeffs))
