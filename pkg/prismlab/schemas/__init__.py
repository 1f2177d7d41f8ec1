# prismlab/schemas/__init__.py
from .cell import CellSchema, ChainSchema, ChainTerm
from .orientation import (
    GenericPrismComplex,
    CoherenceReportSchema,
    OrientabilityVerdictSchema,
    IncidenceOut,
)
from .homology import HomologyGroupSchema, HomologyReport, MatrixExport
from .symmetry import OrbitOut, OrbitReport, FreeActionReportSchema, FixedPairOut, QuotientReport
from .tverberg import PartitionCertificateSchema, PartWeights, TverbergReport, TTTFaces
from .report import CheckResult, VerifyReport, BuildReport, BoundaryReport, ErrorReport
