# prismlab/schemas/report.py
from pydantic import BaseModel, Field
from typing import Any, Dict, List, Optional

from .cell import CellSchema, ChainSchema


class CheckResult(BaseModel):
    name: str
    passed: bool
    details: Dict[str, Any] = Field(default_factory=dict)


class VerifyReport(BaseModel):
    n: int
    r: int
    passed: bool
    checks: List[CheckResult]


class BuildReport(BaseModel):
    n: int
    r: int
    dimension: int
    f_vector: List[int]
    closed_form_f_vector: List[int]
    euler_characteristic: int
    dim: Optional[int] = None
    cells: Optional[List[List[List[int]]]] = None
    out: Optional[str] = None


class BoundaryReport(BaseModel):
    n: int
    r: int
    cell: CellSchema
    boundary: ChainSchema
    boundary_squared_zero: bool


class ErrorReport(BaseModel):
    error: str
    message: str
    theorem_violation: bool = False
