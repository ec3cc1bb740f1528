"""Cost polynomials for the graph, SAT, portfolio and LABS families."""

import logging

from samba_gqw.exceptions import ValidationError
from samba_gqw.hubo import Polynomial
from samba_gqw.problems.models import GraphInstance, Literal, PortfolioInstance, SatInstance

logger = logging.getLogger(__name__)


def maxcut_poly(g: GraphInstance) -> Polynomial:
    """C(x) = -sum_{i<j} w_ij (x_i + x_j - 2 x_i x_j)."""
    if g.num_edges == 0:
        raise ValidationError("MaxCut needs at least one edge")
    terms: list[tuple[tuple[int, ...], float]] = []
    for i, j, w in g.edges:
        terms.extend((((i,), -w), ((j,), -w), ((i, j), 2.0 * w)))
    return Polynomial(g.n_vertices, terms)


def default_mis_penalty(g: GraphInstance) -> float:
    """max over edges of w_i + w_j, plus one; 1 for edgeless graphs."""
    if g.num_edges == 0:
        return 1.0
    weights = g.weights_or_ones
    return max(weights[i] + weights[j] for i, j, _ in g.edges) + 1.0


def mis_poly(g: GraphInstance, penalty: float | None = None) -> Polynomial:
    """C(x) = -sum_i w_i x_i + lambda sum_{(i,j) in E} x_i x_j."""
    lam = default_mis_penalty(g) if penalty is None else penalty
    weights = g.weights_or_ones
    terms: list[tuple[tuple[int, ...], float]] = [((i,), -w) for i, w in enumerate(weights)]
    terms.extend(((i, j), lam) for i, j, _ in g.edges)
    return Polynomial(g.n_vertices, terms)


def portfolio_poly(inst: PortfolioInstance) -> Polynomial:
    """C(x) = lambda sum_{i<j} sigma_ij x_i x_j - sum_i mu_i x_i.

    The cardinality bound is left to the XY mixer.
    """
    terms: list[tuple[tuple[int, ...], float]] = [((i,), -mu) for i, mu in enumerate(inst.mu)]
    terms.extend(((i, j), inst.lam * s) for i, j, s in inst.sigma)
    return Polynomial(inst.n, terms)


def labs_poly(n: int) -> Polynomial:
    """Sum of squared aperiodic autocorrelations with s_i = 1 - 2 x_i."""
    if n < 2:
        raise ValidationError("LABS needs n >= 2")
    spins = [1 - 2 * Polynomial.variable(n, i) for i in range(n)]
    energy = Polynomial.zero(n)
    for k in range(1, n):
        correlation = Polynomial.zero(n)
        for i in range(n - k):
            correlation = correlation + spins[i] * spins[i + k]
        energy = energy + correlation * correlation
    logger.debug("LABS n=%d: %d terms, degree %d", n, len(energy), energy.degree)
    return energy


def literal_poly(n: int, literal: Literal) -> Polynomial:
    """x_i, or 1 - x_i for a negated literal."""
    x = Polynomial.variable(n, literal.var)
    return 1 - x if literal.negated else x


def maxksat_poly(inst: SatInstance) -> Polynomial:
    """C(x) = -sum_j S_j(x) with S_j = 1 - prod_i (1 - l_ji)."""
    cost = Polynomial.zero(inst.n)
    for clause in inst.clauses:
        unsatisfied = Polynomial.constant(inst.n, 1.0)
        for literal in clause:
            unsatisfied = unsatisfied * (1 - literal_poly(inst.n, literal))
        cost = cost - (1 - unsatisfied)
    return cost
