# tests/test_prism_complex.py
import pytest
from hypothesis import given, settings, strategies as st
from sympy.functions.combinatorial.numbers import stirling

from prismlab.core.errors import EmptyDomainError, InvalidSpecError
from prismlab.models.cell import Cell, Chain, ComplexSpec, SignedCell
from prismlab.services import orientation, prism_complex

from .utils import brute_force_count, cell

SMALL_SPECS = [(n, r) for n in range(1, 6) for r in range(2, 5) if n >= r - 1]


def test_spec_rejects_too_few_vertices() -> None:
    with pytest.raises(InvalidSpecError):
        ComplexSpec(1, 3)
    with pytest.raises(InvalidSpecError):
        ComplexSpec(3, 1)


def test_degenerate_spec_has_only_vertices() -> None:
    spec = ComplexSpec(2, 3)
    assert spec.top_dim == 0
    assert prism_complex.f_vector(spec).as_list() == [6]


def test_hexagon_edges(hexagon) -> None:
    edges = prism_complex.enumerate_cells(hexagon, 1)
    expected = {
        cell((0,), (1, 2)), cell((1,), (0, 2)), cell((2,), (0, 1)),
        cell((0, 1), (2,)), cell((1, 2), (0,)), cell((0, 2), (1,)),
    }
    assert len(edges) == 6
    assert set(edges) == expected


def test_smallest_complex() -> None:
    spec = ComplexSpec(1, 2)
    assert prism_complex.enumerate_cells(spec, 0) == [cell((0,), (1,)), cell((1,), (0,))]


def test_sphere_top_cells_split_into_triangles_and_squares(sphere) -> None:
    tops = prism_complex.top_cells(sphere)
    shapes = sorted(c.shape for c in tops)
    assert len(tops) == 14
    assert sum(1 for s in shapes if sorted(s) == [0, 2]) == 8
    assert sum(1 for s in shapes if s == (1, 1)) == 6


def test_y43_top_count(y43) -> None:
    assert len(prism_complex.enumerate_cells(y43, 2)) == 150


@pytest.mark.parametrize("n, r, expected", [
    (3, 2, [12, 24, 14]),
    (2, 2, [6, 6]),
    (4, 3, [60, 180, 150]),
])
def test_f_vector(n, r, expected) -> None:
    spec = ComplexSpec(n, r)
    assert prism_complex.f_vector(spec).as_list() == expected
    assert prism_complex.closed_form_f_vector(spec).as_list() == expected


@pytest.mark.parametrize("n, r", SMALL_SPECS)
def test_enumeration_matches_closed_form_and_brute_force(n, r) -> None:
    spec = ComplexSpec(n, r)
    for k in range(spec.top_dim + 1):
        cells = prism_complex.enumerate_cells(spec, k)
        assert len(cells) == len(set(cells))
        assert all(c.dim == k and c.r == r for c in cells)
        assert cells == sorted(cells, key=Cell.sort_key)
        assert len(cells) == prism_complex.closed_form_count(spec, k) == brute_force_count(spec, k)


def test_closed_form_uses_stirling_numbers(y43) -> None:
    assert prism_complex.closed_form_count(y43, 1) == 5 * 6 * int(stirling(4, 3))
    assert prism_complex.closed_form_count(y43, 3) == 0


def test_out_of_range_dimension(sphere) -> None:
    with pytest.raises(EmptyDomainError):
        prism_complex.enumerate_cells(sphere, 3)
    with pytest.raises(EmptyDomainError):
        prism_complex.enumerate_cells(sphere, -1)


def test_sort_key_puts_separator_first() -> None:
    # (0)(1,2) < (0,1)(2): после 0 разделитель меньше вершины 1
    assert cell((0,), (1, 2)).sort_key() < cell((0, 1), (2,)).sort_key()


def test_cell_validation() -> None:
    with pytest.raises(InvalidSpecError):
        Cell.of([(0,), ()])
    with pytest.raises(InvalidSpecError):
        Cell.of([(0, 1), (1, 2)])
    with pytest.raises(InvalidSpecError):
        Cell.of([(2, 1), (0,)])


def test_boundary_of_dimension_zero_is_zero() -> None:
    assert prism_complex.boundary(SignedCell(cell((0,), (1,)))).is_zero()


def test_boundary_of_edge_factor() -> None:
    # ∂Δ(0,2) = +(2) - (0) во втором сомножителе
    chain = prism_complex.boundary(SignedCell(cell((1,), (0, 2))))
    assert dict(chain.terms) == {cell((1,), (2,)): 1, cell((1,), (0,)): -1}


def test_boundary_leibniz_sign_on_second_factor() -> None:
    chain = prism_complex.boundary(SignedCell(cell((0, 2), (1, 3))))
    assert chain.coefficient(cell((2,), (1, 3))) == 1
    assert chain.coefficient(cell((0,), (1, 3))) == -1
    # Сдвиг знака на dim первого сомножителя
    assert chain.coefficient(cell((0, 2), (3,))) == -1
    assert chain.coefficient(cell((0, 2), (1,))) == 1


def test_boundary_respects_sign() -> None:
    c = cell((0,), (1, 2, 3))
    assert prism_complex.boundary(SignedCell(c, -1)) == -prism_complex.boundary(SignedCell(c, 1))


def test_boundary_chain_linearity(sphere) -> None:
    c = cell((0, 2), (1, 3))
    assert prism_complex.boundary_chain(Chain.zero(2)).is_zero()
    assert prism_complex.boundary_chain(Chain.from_signed(SignedCell(c))) == prism_complex.boundary(SignedCell(c))


@pytest.mark.parametrize("n, r", SMALL_SPECS)
def test_boundary_squared_is_zero(n, r) -> None:
    assert prism_complex.boundary_squared_violations(ComplexSpec(n, r)) == []


@pytest.mark.parametrize("n, r", [(n, r) for n, r in SMALL_SPECS if n >= r])
def test_each_codim1_cell_has_r_parents(n, r) -> None:
    spec = ComplexSpec(n, r)
    assert prism_complex.parent_count_violations(spec) == {}


def test_cofaces_agree_with_boundary(y43) -> None:
    for face in prism_complex.enumerate_cells(y43, 1):
        parents = prism_complex.cofaces(y43, face)
        assert all(face in prism_complex.boundary(SignedCell(p)).terms for p in parents)
        assert len(parents) == (y43.vertex_count - len(face.vertices)) * y43.r


def test_hexagon_o_chain_boundary_has_uniform_coefficients(hexagon) -> None:
    assignment = orientation.o_orientation(hexagon)
    total = Chain(1, dict(assignment.signs))
    boundary = prism_complex.boundary_chain(total)
    assert len(boundary) == 6
    assert {abs(coef) for _, coef in boundary.items()} == {2}


@given(st.lists(st.integers(min_value=0, max_value=9), min_size=1, max_size=5, unique=True),
       st.lists(st.integers(min_value=10, max_value=19), min_size=1, max_size=5, unique=True))
def test_canonicalize_sign_is_sorting_parity(first, second) -> None:
    sc = prism_complex.canonicalize([first, second])
    assert sc.cell == cell(tuple(sorted(first)), tuple(sorted(second)))
    inversions = sum(1 for part in (first, second)
                     for i in range(len(part)) for j in range(i + 1, len(part)) if part[i] > part[j])
    assert sc.sign == (-1) ** inversions


@given(st.permutations([0, 1, 2, 3]))
@settings(max_examples=24)
def test_boundary_of_reordered_cell(order) -> None:
    # Граница по заданному порядку вершин в частях, каждое слагаемое приводится отдельно
    a, b, c, d = order
    expected = Chain.sum_of(1, [
        Chain.from_signed(prism_complex.canonicalize(parts, sign))
        for parts, sign in [
            ([[b], [c, d]], 1),
            ([[a], [c, d]], -1),
            ([[a, b], [d]], -1),
            ([[a, b], [c]], 1),
        ]
    ])
    assert prism_complex.boundary(prism_complex.canonicalize([[a, b], [c, d]])) == expected


@pytest.mark.slow
@pytest.mark.parametrize("n, r", [(n, r) for n in range(2, 8) for r in range(2, 5) if n >= r])
def test_chain_complex_full_range(n, r) -> None:
    spec = ComplexSpec(n, r)
    assert prism_complex.f_vector(spec) == prism_complex.closed_form_f_vector(spec)
    assert prism_complex.boundary_squared_violations(spec) == []
    assert prism_complex.parent_count_violations(spec) == {}
