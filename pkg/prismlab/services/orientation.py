# prismlab/services/orientation.py
"""
O-ориентация: у каждой верхней клетки F берется строка S(F) (части по
возрастанию, между ними разделители s_1..s_{r-1}); знак F равен +1, если
перестановка, переводящая S(F) в S(F_0), четна, и -1 иначе.
"""
import logging
from collections import deque
from itertools import product
from typing import Any, Hashable, Mapping, Sequence

from pydantic import ValidationError

from prismlab.core.config import get_settings
from prismlab.core.errors import DimensionError, IncomparableStringsError, PrismParseError
from prismlab.models.cell import Cell, ComplexSpec, SignedCell
from prismlab.models.orientation import (
    CoherenceReport,
    OrientabilityVerdict,
    OrientationAssignment,
    OrientationString,
    Parity,
    separator_symbol,
    vertex_symbol,
)
from prismlab.schemas.orientation import GenericPrismComplex
from prismlab.services import prism_complex

logger = logging.getLogger(__name__)

MODE_O = "o"
MODE_CLASSICAL = "classical"


# --- Strings ---

def reference_string(spec: ComplexSpec) -> OrientationString:
    """S(F_0) = v_0, s_1, v_1, s_2, ..., s_{r-1}, v_{r-1}, v_r, ..., v_N."""
    spec.require_nondegenerate()
    symbols: list[str] = []
    for i in range(spec.r - 1):
        symbols.append(vertex_symbol(i))
        symbols.append(separator_symbol(i + 1))
    symbols.extend(vertex_symbol(v) for v in range(spec.r - 1, spec.vertex_count))
    return OrientationString(tuple(symbols))


def cell_string(cell: Cell, spec: ComplexSpec) -> OrientationString:
    """S(F) = part_1, s_1, part_2, ..., s_{r-1}, part_r; только для верхних клеток."""
    if cell.r != spec.r or cell.vertices != frozenset(range(spec.vertex_count)):
        raise DimensionError(f"cell {cell} is not a top cell of {spec}")
    symbols: list[str] = []
    for i, part in enumerate(cell.parts):
        if i:
            symbols.append(separator_symbol(i))
        symbols.extend(vertex_symbol(v) for v in part)
    return OrientationString(tuple(symbols))


def _positions(a: Sequence[str], b: Sequence[str]) -> list[int]:
    """perm[i] - позиция в b символа a[i]."""
    if len(a) != len(b) or len(set(a)) != len(a) or set(a) != set(b):
        raise IncomparableStringsError(f"strings {list(a)} and {list(b)} are not permutations of each other")
    where = {sym: i for i, sym in enumerate(b)}
    return [where[sym] for sym in a]


def transposition_parity(a: Sequence[str], b: Sequence[str]) -> Parity:
    """Четность через явный подсчет транспозиций при сортировке перестановки."""
    perm = _positions(a, b)
    swaps = 0
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            swaps += 1
    return Parity.of(swaps)


def inversion_parity(a: Sequence[str], b: Sequence[str]) -> Parity:
    """Независимая реализация: число инверсий."""
    perm = _positions(a, b)
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return Parity.of(inversions)


def string_parity(a: OrientationString, b: OrientationString) -> Parity:
    return transposition_parity(a.symbols, b.symbols)


# --- O-orientation of Y_{N,r} ---

def o_sign(cell: Cell, spec: ComplexSpec, reference: OrientationString | None = None) -> int:
    reference = reference or reference_string(spec)
    return 1 if string_parity(cell_string(cell, spec), reference) is Parity.even else -1


def o_orientation(spec: ComplexSpec) -> OrientationAssignment:
    reference = reference_string(spec)
    signs = {cell: o_sign(cell, spec, reference) for cell in prism_complex.top_cells(spec)}
    return OrientationAssignment(spec, signs)


def induced_signs(spec: ComplexSpec, assignment: OrientationAssignment) -> dict[Cell, list[int]]:
    """Для каждой клетки коразмерности 1 - коэффициенты в ∂(F, знак F) по всем родителям F."""
    incidences: dict[Cell, list[int]] = {}
    for top, sign in assignment.signs.items():
        for face, coef in prism_complex.boundary(SignedCell(top, sign)).terms.items():
            incidences.setdefault(face, []).append(coef)
    return incidences


def verify_o_orientability(
    spec: ComplexSpec, assignment: OrientationAssignment | None = None
) -> CoherenceReport:
    """Каждая клетка коразмерности 1 должна получить один и тот же знак от всех r родителей."""
    assignment = assignment or o_orientation(spec)
    raw = induced_signs(spec, assignment)
    ordered = {cell: tuple(raw[cell]) for cell in sorted(raw, key=Cell.sort_key)}

    violations = tuple(cell for cell, signs in ordered.items() if len(set(signs)) > 1)
    expected = prism_complex.closed_form_count(spec, spec.top_dim - 1)
    parent_count_ok = len(ordered) == expected and all(len(s) == spec.r for s in ordered.values())
    if violations:
        logger.warning("O-orientation incoherent on %d codim-1 cells of %s", len(violations), spec)
    return CoherenceReport(
        incidences=ordered,
        passed=not violations,
        violations=violations,
        expected_parents=spec.r,
        parent_count_ok=parent_count_ok,
    )


# --- Generic prism complexes ---

def parse_generic_complex(description: str | bytes | Mapping[str, Any] | GenericPrismComplex) -> GenericPrismComplex:
    if isinstance(description, GenericPrismComplex):
        return description
    try:
        if isinstance(description, (str, bytes)):
            return GenericPrismComplex.model_validate_json(description)
        return GenericPrismComplex.model_validate(description)
    except ValidationError as e:
        raise PrismParseError(f"malformed prism complex description: {e}") from e


def encode_generic(spec: ComplexSpec) -> GenericPrismComplex:
    """Y_{N,r} в общем JSON-формате; индуцированные знаки берутся из граничного оператора."""
    spec.require_nondegenerate()
    tops = prism_complex.top_cells(spec)
    cofaces: dict[Cell, list[dict[str, Any]]] = {}
    for top in tops:
        for face, coef in prism_complex.boundary(SignedCell(top, 1)).terms.items():
            cofaces.setdefault(face, []).append({"top": str(top), "induced_sign_if_plus": coef})
    return GenericPrismComplex.model_validate({
        "top_cells": [{"id": str(top), "factors": list(top.shape)} for top in tops],
        "codim1": [
            {"id": str(face), "cofaces": cofaces[face]}
            for face in sorted(cofaces, key=Cell.sort_key)
        ],
    })


def _relations(complex_: GenericPrismComplex, mode: str) -> tuple[list[tuple[str, str, int]], list[str]]:
    """
    Ограничения вида x_a · x_b = rel. Для режима "o": x_a·s_a = x_b·s_b,
    для классического: x_a·s_a = -x_b·s_b и ровно два родителя.
    """
    relations: list[tuple[str, str, int]] = []
    reasons: list[str] = []
    for face in complex_.codim1:
        cofaces = face.cofaces
        if mode == MODE_CLASSICAL and len(cofaces) != 2:
            reasons.append(f"codim-1 cell {face.id!r} has {len(cofaces)} parents, classical orientability needs 2")
            continue
        first = cofaces[0]
        for other in cofaces[1:]:
            rel = first.induced_sign_if_plus * other.induced_sign_if_plus
            relations.append((first.top, other.top, rel if mode == MODE_O else -rel))
    return relations, reasons


def _coherence(complex_: GenericPrismComplex, witness: Mapping[str, int], mode: str) -> CoherenceReport:
    incidences: dict[Hashable, tuple[int, ...]] = {}
    violations = []
    for face in complex_.codim1:
        signs = tuple(witness[cf.top] * cf.induced_sign_if_plus for cf in face.cofaces)
        incidences[face.id] = signs
        if mode == MODE_O:
            ok = len(set(signs)) == 1
        else:
            ok = len(signs) == 2 and signs[0] == -signs[1]
        if not ok:
            violations.append(face.id)
    return CoherenceReport(incidences=incidences, passed=not violations, violations=tuple(violations))


def _count_components(ids: list[str], relations: list[tuple[str, str, int]]) -> int:
    adjacency: dict[str, list[str]] = {i: [] for i in ids}
    for a, b, _ in relations:
        adjacency[a].append(b)
        adjacency[b].append(a)
    seen: set[str] = set()
    components = 0
    for start in ids:
        if start in seen:
            continue
        components += 1
        stack = [start]
        seen.add(start)
        while stack:
            for nxt in adjacency[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return components


def _exhaustive(ids: list[str], relations: list[tuple[str, str, int]]) -> tuple[dict[str, int] | None, int]:
    index = {top: i for i, top in enumerate(ids)}
    indexed = [(index[a], index[b], rel) for a, b, rel in relations]
    checked = 0
    for signs in product((1, -1), repeat=len(ids)):
        checked += 1
        if all(signs[a] * signs[b] == rel for a, b, rel in indexed):
            return dict(zip(ids, signs)), checked
    return None, checked


def _propagate(ids: list[str], relations: list[tuple[str, str, int]]) -> dict[str, int] | None:
    """2-раскраска графа ограничений обходом в ширину; противоречие означает UNSAT."""
    adjacency: dict[str, list[tuple[str, int]]] = {i: [] for i in ids}
    for a, b, rel in relations:
        adjacency[a].append((b, rel))
        adjacency[b].append((a, rel))
    signs: dict[str, int] = {}
    for start in ids:
        if start in signs:
            continue
        signs[start] = 1
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for nxt, rel in adjacency[cur]:
                want = signs[cur] * rel
                if nxt not in signs:
                    signs[nxt] = want
                    queue.append(nxt)
                elif signs[nxt] != want:
                    return None
    return {i: signs[i] for i in ids}


def search_orientation(
    description: str | bytes | Mapping[str, Any] | GenericPrismComplex,
    mode: str = MODE_O,
    exhaustive_limit: int | None = None,
) -> OrientabilityVerdict:
    """
    Решает, существует ли ориентация верхних клеток нужного типа.
    До exhaustive_limit верхних клеток - полный перебор 2^n назначений,
    выше - распространение ограничений (точная процедура: ограничения попарные).
    """
    if mode not in (MODE_O, MODE_CLASSICAL):
        raise ValueError(f"unknown orientation mode {mode!r}")
    complex_ = parse_generic_complex(description)
    if exhaustive_limit is None:
        exhaustive_limit = get_settings().EXHAUSTIVE_SEARCH_MAX_TOP_CELLS

    ids = [t.id for t in complex_.top_cells]
    relations, reasons = _relations(complex_, mode)
    components = _count_components(ids, relations)

    if reasons:
        return OrientabilityVerdict(
            mode=mode, satisfiable=False, method="structural",
            components=components, reasons=tuple(reasons),
        )

    checked = 0
    if len(ids) <= exhaustive_limit:
        method = "exhaustive"
        witness, checked = _exhaustive(ids, relations)
    else:
        method = "propagation"
        witness = _propagate(ids, relations)
    logger.debug("%s search over %d top cells (%s): %s", mode, len(ids), method,
                 "SAT" if witness is not None else "UNSAT")

    if witness is None:
        return OrientabilityVerdict(
            mode=mode, satisfiable=False, method=method,
            components=components, checked_assignments=checked,
        )
    return OrientabilityVerdict(
        mode=mode, satisfiable=True, method=method, witness=witness,
        report=_coherence(complex_, witness, mode),
        components=components, checked_assignments=checked,
    )


def verify_generic_prism_complex(
    description: str | bytes | Mapping[str, Any] | GenericPrismComplex,
    exhaustive_limit: int | None = None,
) -> OrientabilityVerdict:
    return search_orientation(description, MODE_O, exhaustive_limit)


def verify_classical_orientability(spec: ComplexSpec) -> OrientabilityVerdict:
    """Классическая ориентируемость: два родителя с противоположными индуцированными ориентациями."""
    return search_orientation(encode_generic(spec), MODE_CLASSICAL)
