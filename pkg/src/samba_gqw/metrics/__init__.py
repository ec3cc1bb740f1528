"""Distribution quality, participation ratio and ranking metrics."""

from samba_gqw.metrics.calculator import (
    DEFAULT_DISPLAY_THRESHOLD,
    DEFAULT_TOP_FRACTION,
    MetricBundle,
    approx_ratio_tilde,
    compute_metrics,
    expected_cost,
    participation_ratio,
    quality_expectation,
    ranking_probabilities,
    top_fraction_probability,
    top_rank_count,
)

__all__ = [
    "DEFAULT_DISPLAY_THRESHOLD",
    "DEFAULT_TOP_FRACTION",
    "MetricBundle",
    "approx_ratio_tilde",
    "compute_metrics",
    "expected_cost",
    "participation_ratio",
    "quality_expectation",
    "ranking_probabilities",
    "top_fraction_probability",
    "top_rank_count",
]
