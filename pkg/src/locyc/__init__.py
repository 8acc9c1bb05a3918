"""locyc: constructive long-cycle extraction and its experiment pipelines."""

from .errors import (
    DensityHypothesisError,
    ExpansionViolated,
    HypothesisFailure,
    InputError,
    LocycError,
    ScalingError,
    SizeLimitError,
    StrategyFault,
    UnsupportedOrderError,
)
from .graph import Graph

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "LocycError",
    "InputError",
    "SizeLimitError",
    "ScalingError",
    "UnsupportedOrderError",
    "HypothesisFailure",
    "ExpansionViolated",
    "DensityHypothesisError",
    "StrategyFault",
    "__version__",
]
