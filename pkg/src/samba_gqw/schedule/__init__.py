"""Gap sampling, hopping-rate schedules and layer plans."""

from samba_gqw.schedule.bezier import BEZIER_A, BEZIER_B, bezier_gamma
from samba_gqw.schedule.builder import (
    build_schedule,
    discretize,
    discretize_rate,
    exact_total_time,
    gamma_at,
    gamma_of_energy,
    proportional_slices,
)
from samba_gqw.schedule.models import (
    TRANSFER_TIME,
    BezierSchedule,
    ConstantRate,
    HoppingRate,
    Layer,
    LayerPlan,
    SampledGaps,
    Schedule,
)
from samba_gqw.schedule.sampler import CostOracle, sample_gaps

__all__ = [
    "BEZIER_A",
    "BEZIER_B",
    "TRANSFER_TIME",
    "BezierSchedule",
    "ConstantRate",
    "CostOracle",
    "HoppingRate",
    "Layer",
    "LayerPlan",
    "SampledGaps",
    "Schedule",
    "bezier_gamma",
    "build_schedule",
    "discretize",
    "discretize_rate",
    "exact_total_time",
    "gamma_at",
    "gamma_of_energy",
    "proportional_slices",
    "sample_gaps",
]
