"""Instance JSON files and the plain-text asset format.

Asset file schema (``#`` starts a comment, blank lines ignored)::

    N
    <index> <expected return>        # N lines
    <i> <j> <covariance>             # any number of lines, i != j

Covariance pairs are symmetric; ``i j`` and ``j i`` denote the same entry.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from samba_gqw.exceptions import InstanceIOError, SambaGQWException
from samba_gqw.models import GraphKind, ProblemFamily
from samba_gqw.problems.generators import complete_graph
from samba_gqw.problems.models import (
    GraphInstance,
    Instance,
    Literal,
    PortfolioInstance,
    SatInstance,
)
from samba_gqw.problems.registry import compile_instance

logger = logging.getLogger(__name__)


def instance_to_dict(instance: Instance) -> dict[str, Any]:
    """JSON-ready view of an instance."""
    data = instance.data
    family = instance.family
    payload: dict[str, Any] = {"family": family.value, "params": dict(instance.params)}

    if family in (ProblemFamily.MAXCUT, ProblemFamily.MIS):
        payload.update(
            nodes=data.n_vertices,
            edges=[[i, j, w] for i, j, w in data.edges],
            vertex_weights=list(data.vertex_weights) if data.vertex_weights else None,
            kind=data.kind.value,
        )
        if data.positions is not None:
            payload["positions"] = [list(p) for p in data.positions]
    elif family is ProblemFamily.TSP:
        payload.update(cities=data.n_vertices, distances=data.weight_matrix().tolist())
    elif family is ProblemFamily.MAXKSAT:
        payload.update(
            n=data.n,
            k=data.k,
            clauses=[[lit.to_signed() for lit in clause] for clause in data.clauses],
        )
    elif family is ProblemFamily.PORTFOLIO:
        payload.update(
            n=data.n,
            mu=list(data.mu),
            sigma=[[i, j, s] for i, j, s in data.sigma],
            k=data.k,
        )
        payload["lambda"] = data.lam
    else:
        payload["n"] = data
    return payload


def instance_from_dict(payload: dict[str, Any]) -> Instance:
    """Rebuild and recompile an instance from :func:`instance_to_dict` output."""
    try:
        family = ProblemFamily(payload["family"])
        params = dict(payload.get("params", {}))

        if family in (ProblemFamily.MAXCUT, ProblemFamily.MIS):
            positions = payload.get("positions")
            weights = payload.get("vertex_weights")
            data: Any = GraphInstance(
                int(payload["nodes"]),
                tuple((int(i), int(j), float(w)) for i, j, w in payload["edges"]),
                vertex_weights=tuple(float(w) for w in weights) if weights else None,
                kind=GraphKind(payload.get("kind", GraphKind.EXPLICIT.value)),
                positions=tuple(tuple(p) for p in positions) if positions else None,
            )
        elif family is ProblemFamily.TSP:
            data = complete_graph(np.asarray(payload["distances"], dtype=float))
        elif family is ProblemFamily.MAXKSAT:
            data = SatInstance(
                int(payload["n"]),
                int(payload["k"]),
                tuple(
                    tuple(Literal.from_signed(int(v)) for v in clause)
                    for clause in payload["clauses"]
                ),
            )
        elif family is ProblemFamily.PORTFOLIO:
            data = PortfolioInstance(
                int(payload["n"]),
                tuple(float(v) for v in payload["mu"]),
                tuple((int(i), int(j), float(s)) for i, j, s in payload["sigma"]),
                float(payload["lambda"]),
                int(payload["k"]),
            )
        else:
            data = int(payload["n"])
    except (KeyError, TypeError, ValueError) as e:
        raise InstanceIOError(f"malformed instance data: {e}") from e

    return compile_instance(family, data, **params)


def save_instance(instance: Instance, path: str | Path) -> Path:
    """Write instance JSON (sorted keys, stable formatting)."""
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(json.dumps(instance_to_dict(instance), indent=2, sort_keys=True) + "\n")
    except OSError as e:
        raise InstanceIOError(f"cannot write instance: {e}", path=str(target)) from e
    logger.info("Saved %s instance to %s", instance.family.value, target)
    return target


def load_instance(path: str | Path) -> Instance:
    """Read and compile an instance JSON file."""
    source = Path(path)
    try:
        payload = json.loads(source.read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise InstanceIOError(f"cannot read instance: {e}", path=str(source)) from e
    try:
        return instance_from_dict(payload)
    except InstanceIOError as e:
        e.path = str(source)
        raise
    except SambaGQWException as e:
        raise InstanceIOError(f"invalid instance in {source}: {e}", path=str(source)) from e


@dataclass(frozen=True)
class AssetUniverse:
    """Returns and covariance of a pool of assets."""
    returns: np.ndarray
    covariance: np.ndarray

    @property
    def size(self) -> int:
        """Number of assets."""
        return int(self.returns.shape[0])


def load_asset_file(path: str | Path) -> AssetUniverse:
    """Parse the plain-text asset schema described in the module docstring."""
    source = Path(path)
    try:
        raw = source.read_text().splitlines()
    except OSError as e:
        raise InstanceIOError(f"cannot read asset file: {e}", path=str(source)) from e

    lines = [line.split("#", 1)[0].split() for line in raw]
    rows = [fields for fields in lines if fields]
    try:
        count = int(rows[0][0])
        returns = np.zeros(count)
        for fields in rows[1 : count + 1]:
            returns[int(fields[0])] = float(fields[1])
        covariance = np.zeros((count, count))
        for fields in rows[count + 1 :]:
            i, j, value = int(fields[0]), int(fields[1]), float(fields[2])
            covariance[i, j] = covariance[j, i] = value
    except (IndexError, ValueError) as e:
        raise InstanceIOError(f"malformed asset file: {e}", path=str(source)) from e

    logger.info("Loaded %d assets from %s", count, source)
    return AssetUniverse(returns, covariance)


def draw_portfolio(
    universe: AssetUniverse,
    n: int,
    lam: float,
    k: int,
    seed: int = 0,
) -> PortfolioInstance:
    """Pick n random assets from the universe."""
    if not 1 <= n <= universe.size:
        raise InstanceIOError(f"cannot draw {n} assets from a universe of {universe.size}")
    rng = np.random.default_rng(seed)
    chosen = np.sort(rng.choice(universe.size, size=n, replace=False))
    mu = tuple(float(universe.returns[a]) for a in chosen)
    sigma = tuple(
        (i, j, float(universe.covariance[chosen[i], chosen[j]]))
        for i in range(n)
        for j in range(i + 1, n)
        if universe.covariance[chosen[i], chosen[j]] != 0.0
    )
    return PortfolioInstance(n, mu, sigma, lam, k)
