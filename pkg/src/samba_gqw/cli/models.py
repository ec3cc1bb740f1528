"""Serializable description of one CLI invocation."""

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class RunConfig:
    """Everything needed to reproduce a command's outputs."""
    command: str
    instances: list[str] = field(default_factory=list)
    family: str | None = None
    params: dict[str, Any] = field(default_factory=dict)
    mixer: str | None = None
    hamming_weight: int | None = None
    q: int | None = None
    slices: int | None = None
    slice_density: float | None = None
    snapshot_every: int | None = None
    seed: int = 0
    out: str = "."
    maximize: bool = False
    shots: int | None = None
    mode: str | None = None
    schedule: str | None = None

    def to_dict(self, settings: dict[str, Any] | None = None) -> dict[str, Any]:
        """JSON-ready view; ``settings`` records the resolved SambaConfig."""
        data = asdict(self)
        if settings is not None:
            data["settings"] = dict(settings)
        return data
