# prismlab/schemas/orientation.py
from pydantic import BaseModel, Field, field_validator, model_validator
from typing import List, Literal, Optional, Dict

from prismlab.models.orientation import CoherenceReport, OrientabilityVerdict


# --- Общий призматический комплекс (вход верификатора) ---

class TopCellIn(BaseModel):
    id: str = Field(..., min_length=1)
    factors: List[int] = Field(..., min_length=1) # Размерности сомножителей-симплексов

    @field_validator("factors")
    @classmethod
    def factors_nonnegative(cls, v: List[int]) -> List[int]:
        if any(d < 0 for d in v):
            raise ValueError("factor dimensions must be >= 0")
        return v


class CofaceIn(BaseModel):
    top: str
    induced_sign_if_plus: Literal[-1, 1] # Знак в границе верхней клетки, ориентированной "+"


class Codim1CellIn(BaseModel):
    id: str = Field(..., min_length=1)
    cofaces: List[CofaceIn] = Field(..., min_length=1)


class GenericPrismComplex(BaseModel):
    top_cells: List[TopCellIn]
    codim1: List[Codim1CellIn] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_incidence_structure(self) -> "GenericPrismComplex":
        top_ids = [t.id for t in self.top_cells]
        if len(set(top_ids)) != len(top_ids):
            raise ValueError("duplicate top cell id")
        dims = {sum(t.factors) for t in self.top_cells}
        if len(dims) > 1:
            raise ValueError(f"top cells have different dimensions {sorted(dims)}")
        face_ids = [c.id for c in self.codim1]
        if len(set(face_ids)) != len(face_ids):
            raise ValueError("duplicate codim-1 cell id")
        known = set(top_ids)
        for face in self.codim1:
            tops = [cf.top for cf in face.cofaces]
            unknown = [t for t in tops if t not in known]
            if unknown:
                raise ValueError(f"codim-1 cell {face.id!r} references unknown top cells {unknown}")
            if len(set(tops)) != len(tops):
                raise ValueError(f"codim-1 cell {face.id!r} lists a top cell twice")
        return self


# --- Отчеты ---

class IncidenceOut(BaseModel):
    cell: str
    induced_signs: List[int]


class CoherenceReportSchema(BaseModel):
    passed: bool
    codim1_count: int
    expected_parents: Optional[int] = None
    parent_count_ok: bool = True
    violations: List[str] = Field(default_factory=list)
    incidences: Optional[List[IncidenceOut]] = None # Полный список только по запросу

    @classmethod
    def from_model(cls, report: CoherenceReport, with_incidences: bool = False) -> "CoherenceReportSchema":
        return cls(
            passed=report.passed,
            codim1_count=report.codim1_count,
            expected_parents=report.expected_parents,
            parent_count_ok=report.parent_count_ok,
            violations=[str(v) for v in report.violations],
            incidences=[
                IncidenceOut(cell=str(cell), induced_signs=list(signs))
                for cell, signs in report.incidences.items()
            ] if with_incidences else None,
        )


class OrientabilityVerdictSchema(BaseModel):
    mode: str
    satisfiable: bool
    method: str
    components: int
    checked_assignments: int
    witness: Optional[Dict[str, int]] = None
    reasons: List[str] = Field(default_factory=list)
    report: Optional[CoherenceReportSchema] = None

    @classmethod
    def from_model(cls, verdict: OrientabilityVerdict) -> "OrientabilityVerdictSchema":
        return cls(
            mode=verdict.mode,
            satisfiable=verdict.satisfiable,
            method=verdict.method,
            components=verdict.components,
            checked_assignments=verdict.checked_assignments,
            witness=dict(verdict.witness) if verdict.witness is not None else None,
            reasons=list(verdict.reasons),
            report=CoherenceReportSchema.from_model(verdict.report) if verdict.report else None,
        )
