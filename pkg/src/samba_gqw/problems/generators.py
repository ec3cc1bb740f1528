"""Seeded instance generators."""

import logging
import math

import networkx as nx
import numpy as np

from samba_gqw.exceptions import ValidationError
from samba_gqw.models import GraphKind
from samba_gqw.problems.models import GraphInstance, Literal, PortfolioInstance, SatInstance

logger = logging.getLogger(__name__)

# Radius (in box units) giving roughly 0.5 edge probability for uniform placement.
DEFAULT_UNIT_DISK_RADIUS = 0.512
DEFAULT_SAT_ALPHA = {3: 4.27}


def gen_erdos_renyi(
    n: int,
    p_edge: float,
    weighted: bool = False,
    w_range: tuple[float, float] = (-10.0, 10.0),
    seed: int = 0,
) -> GraphInstance:
    """G(n, p) graph with optional uniform edge weights.

    Args:
        n: Number of vertices
        p_edge: Independent inclusion probability of each pair
        weighted: Draw weights uniformly from w_range instead of 1
        w_range: Weight interval
        seed: Generator seed

    Returns:
        GraphInstance of kind erdos_renyi
    """
    if n < 2:
        raise ValidationError("Erdos-Renyi graph needs at least 2 vertices")
    if not 0.0 <= p_edge <= 1.0:
        raise ValidationError("p_edge must be in [0, 1]")
    if w_range[0] > w_range[1]:
        raise ValidationError("w_range must be (low, high) with low <= high")

    graph = nx.gnp_random_graph(n, p_edge, seed=seed)
    rng = np.random.default_rng(seed)
    edges = []
    for i, j in sorted((min(u, v), max(u, v)) for u, v in graph.edges()):
        weight = float(rng.uniform(*w_range)) if weighted else 1.0
        edges.append((i, j, weight))
    logger.debug("Erdos-Renyi graph n=%d p=%g: %d edges", n, p_edge, len(edges))
    return GraphInstance(n, tuple(edges), kind=GraphKind.ERDOS_RENYI)


def unit_disk_weights(n: int, degrees: list[int]) -> tuple[float, ...]:
    """w_i = 1 + 10 * C_D(i) / max_j C_D(j), all ones when the graph is edgeless."""
    max_degree = max(degrees, default=0)
    if max_degree == 0:
        return (1.0,) * n
    centrality = [d / (n - 1) for d in degrees]
    top = max_degree / (n - 1)
    return tuple(1.0 + 10.0 * c / top for c in centrality)


def gen_unit_disk(
    n: int,
    radius: float = DEFAULT_UNIT_DISK_RADIUS,
    box: float = 1.0,
    seed: int = 0,
) -> GraphInstance:
    """Unit-disk graph on uniformly placed vertices with degree-centrality weights."""
    if n < 2:
        raise ValidationError("unit-disk graph needs at least 2 vertices")
    if radius <= 0 or box <= 0:
        raise ValidationError("radius and box must be positive")

    rng = np.random.default_rng(seed)
    coords = rng.uniform(0.0, box, size=(n, 2))
    positions = {i: (float(x), float(y)) for i, (x, y) in enumerate(coords)}
    graph = nx.random_geometric_graph(n, radius, pos=positions)
    edges = tuple(sorted((min(u, v), max(u, v), 1.0) for u, v in graph.edges()))
    degrees = [graph.degree(i) for i in range(n)]
    return GraphInstance(
        n,
        edges,
        vertex_weights=unit_disk_weights(n, degrees),
        kind=GraphKind.UNIT_DISK,
        positions=tuple(positions[i] for i in range(n)),
    )


def complete_graph(distances: np.ndarray) -> GraphInstance:
    """Complete graph from a symmetric distance matrix."""
    matrix = np.asarray(distances, dtype=float)
    m = matrix.shape[0]
    if matrix.shape != (m, m) or not np.allclose(matrix, matrix.T):
        raise ValidationError("distance matrix must be square and symmetric")
    edges = tuple((i, j, float(matrix[i, j])) for i in range(m) for j in range(i + 1, m))
    return GraphInstance(m, edges, kind=GraphKind.COMPLETE)


def gen_tsp(m: int, dist_range: tuple[float, float] = (0.0, 1.0), seed: int = 0) -> GraphInstance:
    """Complete graph with symmetric uniform distances."""
    if m < 2:
        raise ValidationError("TSP needs at least 2 cities")
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.uniform(*dist_range, size=(m, m)), k=1)
    return complete_graph(upper + upper.T)


def gen_maxksat(n: int, k: int, alpha: float, seed: int = 0) -> SatInstance:
    """m = floor(alpha n) clauses drawn uniformly, with replacement, from all 2^k C(n,k)."""
    if k < 1 or k > n:
        raise ValidationError(f"k must be between 1 and n={n}")
    if alpha <= 0:
        raise ValidationError("alpha must be positive")
    m = math.floor(alpha * n)
    if m == 0:
        raise ValidationError(f"alpha={alpha} with n={n} gives no clauses")

    rng = np.random.default_rng(seed)
    clauses = []
    for _ in range(m):
        variables = sorted(int(v) for v in rng.choice(n, size=k, replace=False))
        signs = rng.integers(0, 2, size=k)
        clauses.append(tuple(Literal(v, bool(s)) for v, s in zip(variables, signs, strict=True)))
    return SatInstance(n, k, tuple(clauses))


def gen_portfolio(
    n: int,
    k: int,
    lam: float = 0.5,
    seed: int = 0,
    factors: int = 3,
) -> PortfolioInstance:
    """Synthetic portfolio: uniform returns and a random factor-model covariance."""
    if n < 1:
        raise ValidationError("portfolio needs at least one asset")
    rng = np.random.default_rng(seed)
    mu = rng.uniform(0.0, 0.2, size=n)
    loadings = rng.normal(0.0, 0.1, size=(n, factors))
    covariance = loadings @ loadings.T + np.diag(rng.uniform(0.001, 0.01, size=n))
    sigma = tuple(
        (i, j, float(covariance[i, j])) for i in range(n) for j in range(i + 1, n)
    )
    return PortfolioInstance(n, tuple(float(v) for v in mu), sigma, lam, k)
