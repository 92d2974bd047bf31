"""数据模型模块"""
from .radio_link import (
    Environment,
    LogDistanceParams,
    PathLossDb,
    PathLossModel,
    RadioLink,
)
from .okumura_curves import OkumuraCurves
from .lee_parameters import Alpha4Mode, LeeOverrides, LeeParameters, LeeScenario
from .sweep import (
    CANONICAL_MODELS,
    Crossover,
    OrderingReport,
    Spacing,
    SweepAxis,
    SweepResult,
    SweepSpec,
)
from .output_record import OutputRecord, SCHEMA_VERSION

__all__ = [
    "Environment",
    "LogDistanceParams",
    "PathLossDb",
    "PathLossModel",
    "RadioLink",
    "OkumuraCurves",
    "Alpha4Mode",
    "LeeOverrides",
    "LeeParameters",
    "LeeScenario",
    "CANONICAL_MODELS",
    "Crossover",
    "OrderingReport",
    "Spacing",
    "SweepAxis",
    "SweepResult",
    "SweepSpec",
    "OutputRecord",
    "SCHEMA_VERSION",
]
