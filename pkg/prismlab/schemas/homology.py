# prismlab/schemas/homology.py
from pydantic import BaseModel, Field
from typing import List


class HomologyGroupSchema(BaseModel):
    dimension: int = Field(..., ge=0)
    free_rank: int = Field(..., ge=0)
    torsion: List[int] = Field(default_factory=list)

    class Config:
        from_attributes = True


class HomologyReport(BaseModel):
    n: int
    r: int
    reduced: bool
    groups: List[HomologyGroupSchema]
    betti: List[int]
    euler_characteristic: int              # из f-вектора
    euler_from_homology: int
    connectivity_ok: bool                  # H̃_k = 0 для k <= N-r и H̃_{N-r+1} != 0


class MatrixExport(BaseModel):
    k: int
    rows: int
    cols: int
    nnz: int
    path: str | None = None
    text: str | None = None
