# prismlab/schemas/cell.py
from pydantic import BaseModel, Field, field_validator
from typing import List

from prismlab.models.cell import Cell, Chain


class CellSchema(BaseModel):
    parts: List[List[int]]

    class Config:
        from_attributes = True

    @field_validator("parts")
    @classmethod
    def check_parts(cls, v: List[List[int]]) -> List[List[int]]:
        if len(v) < 2:
            raise ValueError("a cell needs at least two parts")
        seen: set[int] = set()
        for part in v:
            if not part:
                raise ValueError("empty part")
            if any(a >= b for a, b in zip(part, part[1:])):
                raise ValueError(f"part {part} is not strictly ascending")
            if part[0] < 0:
                raise ValueError(f"negative vertex in {part}")
            if seen.intersection(part):
                raise ValueError("parts are not disjoint")
            seen.update(part)
        return v

    def to_model(self) -> Cell:
        return Cell(tuple(tuple(p) for p in self.parts))


class ChainTerm(BaseModel):
    cell: CellSchema
    coef: int

    @field_validator("coef")
    @classmethod
    def coef_nonzero(cls, v: int) -> int:
        if v == 0:
            raise ValueError("zero coefficients are not stored")
        return v


class ChainSchema(BaseModel):
    dim: int
    terms: List[ChainTerm] = Field(default_factory=list)

    @classmethod
    def from_model(cls, chain: Chain) -> "ChainSchema":
        return cls(
            dim=chain.dim,
            terms=[ChainTerm(cell=CellSchema.model_validate(cell), coef=coef) for cell, coef in chain.items()],
        )

    def to_model(self) -> Chain:
        acc: dict[Cell, int] = {}
        for term in self.terms:
            cell = term.cell.to_model()
            acc[cell] = acc.get(cell, 0) + term.coef
        return Chain(self.dim, acc)
