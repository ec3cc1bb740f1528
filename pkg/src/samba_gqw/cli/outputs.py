"""CSV and JSON artifacts written by the command-line tools."""

import csv
import json
import logging
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

from samba_gqw.engine import EvolutionTrace
from samba_gqw.exceptions import InstanceIOError
from samba_gqw.hubo import Spectrum
from samba_gqw.metrics import ranking_probabilities
from samba_gqw.models import StateVector
from samba_gqw.schedule import SampledGaps, Schedule, gamma_of_energy

logger = logging.getLogger(__name__)


def top_fraction_column(fraction: float) -> str:
    """Column label such as ``P_top5pct`` for fraction 0.05."""
    return f"P_top{fraction * 100:g}pct"


def write_csv(path: Path, fieldnames: Sequence[str], rows: Iterable[dict[str, Any]]) -> Path:
    """Write rows with a header line."""
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=list(fieldnames))
            writer.writeheader()
            for row in rows:
                writer.writerow({key: row.get(key) for key in fieldnames})
    except OSError as e:
        raise InstanceIOError(f"cannot write {path.name}: {e}", path=str(path)) from e
    logger.debug("Wrote %s", path)
    return path


def write_json(path: Path, data: Any) -> Path:
    """Write sorted, indented JSON."""
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    except (OSError, TypeError) as e:
        raise InstanceIOError(f"cannot write {path.name}: {e}", path=str(path)) from e
    logger.debug("Wrote %s", path)
    return path


def read_json(path: str | Path) -> Any:
    """Read a JSON artifact."""
    source = Path(path)
    try:
        return json.loads(source.read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise InstanceIOError(f"cannot read {source}: {e}", path=str(source)) from e


def trace_rows(
    trace: EvolutionTrace,
    tracked_ranks: int,
    fraction: float,
) -> tuple[list[str], list[dict[str, Any]]]:
    """Columns ``t, quality, participation_ratio, P_rank0.., P_top..pct``."""
    top = top_fraction_column(fraction)
    rank_columns = [f"P_rank{r}" for r in range(tracked_ranks)]
    fieldnames = ["t", "quality", "participation_ratio", *rank_columns, top]
    rows = []
    for t, bundle in zip(trace.sample_times, trace.snapshots, strict=True):
        row: dict[str, Any] = {
            "t": t,
            "quality": bundle.quality,
            "participation_ratio": bundle.participation_ratio,
            top: bundle.top_fraction_prob,
        }
        for rank, column in enumerate(rank_columns):
            row[column] = bundle.ranking_probs.get(rank, 0.0)
        rows.append(row)
    return fieldnames, rows


def write_trace_csv(path: Path, trace: EvolutionTrace, tracked_ranks: int, fraction: float) -> Path:
    """Metric time series of one evolution."""
    fieldnames, rows = trace_rows(trace, tracked_ranks, fraction)
    return write_csv(path, fieldnames, rows)


def ranking_rows(
    state: StateVector,
    spectrum: Spectrum,
    threshold: float | None = None,
) -> list[dict[str, Any]]:
    """``rank, cost, probability`` rows of the final distribution."""
    probs = ranking_probabilities(state, spectrum, threshold=threshold)
    return [
        {"rank": rank, "cost": float(spectrum.levels[rank]), "probability": p}
        for rank, p in sorted(probs.items())
    ]


def write_ranking_csv(
    path: Path,
    state: StateVector,
    spectrum: Spectrum,
    threshold: float | None = None,
) -> Path:
    """Final ranking distribution; with a threshold, the display version."""
    return write_csv(path, ["rank", "cost", "probability"], ranking_rows(state, spectrum, threshold))


def write_gamma_energy_csv(path: Path, gaps: SampledGaps) -> Path:
    """Energy-domain hopping rate (E, Gamma(E)) with sample counts."""
    rows = [
        {
            "energy": energy,
            "gamma": gamma,
            "gap_count": gaps.gap_counts.get(energy, 0),
            "visit_count": gaps.visit_counts.get(energy, 0),
        }
        for energy, gamma in gamma_of_energy(gaps)
    ]
    return write_csv(path, ["energy", "gamma", "gap_count", "visit_count"], rows)


def write_gamma_time_csv(path: Path, schedule: Schedule) -> Path:
    """Interpolation nodes (t, Gamma(t))."""
    rows = [{"t": t, "gamma": gamma} for t, gamma in schedule.nodes()]
    return write_csv(path, ["t", "gamma"], rows)


def load_schedule(path: str | Path) -> Schedule:
    """Read a schedule file written by the ``schedule`` command."""
    return Schedule.from_dict(read_json(path))


def write_text(path: Path, text: str) -> Path:
    """Write a plain-text artifact such as a circuit file."""
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as e:
        raise InstanceIOError(f"cannot write {path.name}: {e}", path=str(path)) from e
    return path
