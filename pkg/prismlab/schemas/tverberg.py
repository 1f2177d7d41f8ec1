# prismlab/schemas/tverberg.py
from pydantic import BaseModel, Field
from typing import List, Optional

from prismlab.models.tverberg import AffineTTTResult, PartitionCertificate, fraction_str


class PartWeights(BaseModel):
    indices: List[int]
    weights: List[str] # Точные рациональные строки "p/q"


class PartitionCertificateSchema(BaseModel):
    parts: List[List[int]]
    witness: List[str]
    coefficients: List[PartWeights]

    @classmethod
    def from_model(cls, cert: PartitionCertificate) -> "PartitionCertificateSchema":
        return cls(
            parts=[list(block) for block in cert.parts],
            witness=[fraction_str(x) for x in cert.witness],
            coefficients=[
                PartWeights(indices=list(block), weights=[fraction_str(w[i]) for i in block])
                for block, w in zip(cert.parts, cert.coefficients)
            ],
        )


class TTTFaces(BaseModel):
    n: int
    top_cell: List[List[int]]
    face_dims: List[int]


class TverbergReport(BaseModel):
    dim: int
    parts: int
    points: int
    guarantee: bool                        # число точек >= (d+1)(r-1)+1
    found: bool
    theorem_violation: bool = False
    certificate: Optional[PartitionCertificateSchema] = None
    verified: Optional[bool] = None
    ttt: Optional[TTTFaces] = None
    message: str = Field(default="")

    @staticmethod
    def ttt_faces(result: AffineTTTResult, n: int) -> TTTFaces:
        return TTTFaces(n=n, top_cell=[list(f) for f in result.faces], face_dims=list(result.face_dims))
