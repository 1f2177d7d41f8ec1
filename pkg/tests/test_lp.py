# tests/test_lp.py
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from prismlab.services import lp

random_seed = 7


def residual_ok(a, b, x) -> bool:
    return all(v >= 0 for v in x) and all(
        sum((Fraction(c) * v for c, v in zip(row, x)), Fraction(0)) == beta for row, beta in zip(a, b)
    )


def test_simple_feasible_system() -> None:
    a = [[1, 1, 0], [0, 1, 1]]
    b = [1, 1]
    x = lp.find_nonnegative_solution(a, b)
    assert x is not None
    assert residual_ok(a, b, x)


def test_negative_right_hand_side() -> None:
    a = [[1, -1]]
    b = [-3]
    x = lp.find_nonnegative_solution(a, b)
    assert residual_ok(a, b, x)


def test_infeasible_by_sign() -> None:
    assert lp.find_nonnegative_solution([[1, 1]], [-1]) is None
    assert not lp.fourier_motzkin_feasible([[1, 1]], [-1])


def test_inconsistent_equalities() -> None:
    a = [[1, 1], [1, 1]]
    b = [1, 2]
    assert lp.find_nonnegative_solution(a, b) is None
    assert not lp.fourier_motzkin_feasible(a, b)


def test_redundant_rows_are_fine() -> None:
    a = [[1, 2, 0], [2, 4, 0], [0, 0, 1]]
    b = [2, 4, Fraction(1, 3)]
    x = lp.find_nonnegative_solution(a, b)
    assert residual_ok(a, b, x)
    assert lp.fourier_motzkin_feasible(a, b)


def test_empty_system() -> None:
    assert lp.find_nonnegative_solution([], []) == []


def test_shape_errors() -> None:
    with pytest.raises(ValueError):
        lp.find_nonnegative_solution([[1, 2]], [1, 2])
    with pytest.raises(ValueError):
        lp.find_nonnegative_solution([[1, 2], [1]], [1, 2])


def test_degenerate_system_terminates() -> None:
    # Классический пример зацикливания без правила Бленда
    a = [
        [Fraction(1, 2), Fraction(-11, 2), Fraction(-5, 2), 9, 1, 0, 0],
        [Fraction(1, 2), Fraction(-3, 2), Fraction(-1, 2), 1, 0, 1, 0],
        [1, 0, 0, 0, 0, 0, 1],
    ]
    b = [0, 0, 1]
    x = lp.find_nonnegative_solution(a, b)
    assert residual_ok(a, b, x)


small_ints = st.integers(min_value=-3, max_value=3)


@given(st.integers(min_value=1, max_value=3).flatmap(
    lambda m: st.tuples(
        st.lists(st.lists(small_ints, min_size=4, max_size=4), min_size=m, max_size=m),
        st.lists(small_ints, min_size=m, max_size=m),
    )
))
@settings(max_examples=150, deadline=None)
def test_simplex_agrees_with_fourier_motzkin(system) -> None:
    a, b = system
    x = lp.find_nonnegative_solution(a, b)
    assert (x is not None) == lp.fourier_motzkin_feasible(a, b)
    if x is not None:
        assert residual_ok(a, b, x)


def test_random_feasible_systems() -> None:
    rng = random.Random(random_seed)
    for _ in range(50):
        n = rng.randint(2, 6)
        m = rng.randint(1, 4)
        a = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
        point = [Fraction(rng.randint(0, 4), rng.randint(1, 3)) for _ in range(n)]
        b = [sum((c * v for c, v in zip(row, point)), Fraction(0)) for row in a]
        x = lp.find_nonnegative_solution(a, b)
        assert residual_ok(a, b, x)
        assert lp.fourier_motzkin_feasible(a, b)
