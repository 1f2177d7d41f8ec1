# prismlab/models/__init__.py
from .cell import ComplexSpec, Cell, SignedCell, Chain, FVector
from .orientation import (
    Parity,
    OrientationString,
    OrientationAssignment,
    CoherenceReport,
    OrientabilityVerdict,
)
from .homology import SparseIntMatrix, SNFResult, HomologyGroup
from .symmetry import Permutation, Orbit, FreeActionReport
from .tverberg import PointConfig, HullWitness, PartitionCertificate, AffineTTTResult
