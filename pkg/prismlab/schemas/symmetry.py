# prismlab/schemas/symmetry.py
from pydantic import BaseModel, Field
from typing import Dict, List

from prismlab.models.symmetry import FreeActionReport, Orbit
from prismlab.schemas.cell import CellSchema


class OrbitOut(BaseModel):
    rep: CellSchema
    size: int


class OrbitReport(BaseModel):
    dim: int
    orbits: List[OrbitOut]

    @classmethod
    def from_orbits(cls, dim: int, orbits: List[Orbit]) -> "OrbitReport":
        return cls(
            dim=dim,
            orbits=[OrbitOut(rep=CellSchema.model_validate(o.representative), size=o.size) for o in orbits],
        )


class FixedPairOut(BaseModel):
    permutation: List[int] # В обозначениях {1..r}
    cell: CellSchema


class FreeActionReportSchema(BaseModel):
    passed: bool
    group_order: int
    orbit_counts: List[int]
    orbit_sizes: List[int]
    fixed_pairs: List[FixedPairOut] = Field(default_factory=list)

    @classmethod
    def from_model(cls, report: FreeActionReport) -> "FreeActionReportSchema":
        return cls(
            passed=report.passed,
            group_order=report.group_order,
            orbit_counts=list(report.orbit_counts),
            orbit_sizes=sorted(report.orbit_sizes),
            fixed_pairs=[
                FixedPairOut(permutation=[i + 1 for i in sigma.images], cell=CellSchema.model_validate(cell))
                for sigma, cell in report.fixed_pairs
            ],
        )


class QuotientReport(BaseModel):
    n: int
    r: int
    group: str
    f_vector: List[int]
    quotient_f_vector: List[int] | None = None
    free_action: FreeActionReportSchema
    orbit_report: OrbitReport | None = None
    signed_equivariance: Dict[str, Dict[str, Dict[str, int]]] | None = None
