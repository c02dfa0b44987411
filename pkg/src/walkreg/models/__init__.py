from .graph import UNREACHABLE, DistanceData, Graph, GraphMetrics
from .walk import (
    DistanceRegularity,
    IntersectionArray,
    IntersectionTable,
    WalkObstruction,
    WalkRegularityReport,
    WalkTable,
)

__all__ = [
    "UNREACHABLE",
    "DistanceData",
    "DistanceRegularity",
    "Graph",
    "GraphMetrics",
    "IntersectionArray",
    "IntersectionTable",
    "WalkObstruction",
    "WalkRegularityReport",
    "WalkTable",
]
from .spectral import CoverReport, Idempotent, QuotientResult, Representation, Spectrum

__all__ += ["CoverReport", "Idempotent", "QuotientResult", "Representation", "Spectrum"]
from .construction import ConstructionResult, SpectrumPairs

__all__ += ["ConstructionResult", "SpectrumPairs"]
from .geometry import (
    Clique,
    CliqueCover,
    CliqueProfile,
    CliqueSet,
    DelsarteBound,
    FinitenessBounds,
    GeometricResult,
    GeometricStatus,
    SufficiencyReport,
    SufficiencyVerdict,
)

__all__ += [
    "Clique",
    "CliqueCover",
    "CliqueProfile",
    "CliqueSet",
    "DelsarteBound",
    "FinitenessBounds",
    "GeometricResult",
    "GeometricStatus",
    "SufficiencyReport",
    "SufficiencyVerdict",
]
from .report import (
    REPORT_SCHEMA,
    AnalysisReport,
    BoundsReport,
    CosineRecord,
    FundamentalRecord,
    GodsilRecord,
    GraphSummary,
    LocalMultiplicityRecord,
    MultiplicityRecord,
    TerwilligerRecord,
)

__all__ += [
    "REPORT_SCHEMA",
    "AnalysisReport",
    "BoundsReport",
    "CosineRecord",
    "FundamentalRecord",
    "GodsilRecord",
    "GraphSummary",
    "LocalMultiplicityRecord",
    "MultiplicityRecord",
    "TerwilligerRecord",
]
