# tests/utils.py
from itertools import combinations, product

from prismlab.models.cell import Cell, ComplexSpec


def cell(*parts) -> Cell:
    return Cell.of(parts)


def brute_force_count(spec: ComplexSpec, k: int) -> int:
    """Прямой пересчет: r-кортежи попарно непересекающихся непустых подмножеств общего размера k+r."""
    vertices = range(spec.vertex_count)
    subsets = [frozenset(c) for m in range(1, spec.vertex_count + 1) for c in combinations(vertices, m)]
    total = 0
    for parts in product(subsets, repeat=spec.r):
        if sum(len(p) for p in parts) != k + spec.r:
            continue
        if len(frozenset().union(*parts)) == k + spec.r:
            total += 1
    return total


# Граница тетраэдра: каждое ребро ровно в двух треугольниках
TETRAHEDRON = {
    "top_cells": [{"id": t, "factors": [2]} for t in ("012", "013", "023", "123")],
    "codim1": [
        {"id": "01", "cofaces": [{"top": "012", "induced_sign_if_plus": 1}, {"top": "013", "induced_sign_if_plus": 1}]},
        {"id": "02", "cofaces": [{"top": "012", "induced_sign_if_plus": -1}, {"top": "023", "induced_sign_if_plus": 1}]},
        {"id": "12", "cofaces": [{"top": "012", "induced_sign_if_plus": 1}, {"top": "123", "induced_sign_if_plus": 1}]},
        {"id": "03", "cofaces": [{"top": "013", "induced_sign_if_plus": -1}, {"top": "023", "induced_sign_if_plus": -1}]},
        {"id": "13", "cofaces": [{"top": "013", "induced_sign_if_plus": 1}, {"top": "123", "induced_sign_if_plus": -1}]},
        {"id": "23", "cofaces": [{"top": "023", "induced_sign_if_plus": 1}, {"top": "123", "induced_sign_if_plus": 1}]},
    ],
}
