"""Binary TSP encoding.

Each of the m tour positions holds a city in L = ceil(log2 m) bits, most
significant bit first: variable ``k*L + t`` is bit ``L-1-t`` of the city at
position k.
"""

import logging
import math
from collections.abc import Sequence

from samba_gqw.exceptions import ValidationError
from samba_gqw.hubo import Polynomial
from samba_gqw.models import BitString
from samba_gqw.problems.models import GraphInstance

logger = logging.getLogger(__name__)


def bits_per_city(m: int) -> int:
    """L = ceil(log2 m), at least 1."""
    if m < 2:
        raise ValidationError("TSP needs at least 2 cities")
    return max(1, math.ceil(math.log2(m)))


def tsp_qubits(m: int) -> int:
    """n = m * ceil(log2 m)."""
    return m * bits_per_city(m)


def _var(k: int, bit: int, width: int) -> int:
    """Variable holding bit ``bit`` (0 = least significant) of position k."""
    return k * width + (width - 1 - bit)


def _bit_equals(n: int, var: int, value: int) -> Polynomial:
    """1 - (x - value)^2 for binary x: x when value = 1, 1 - x otherwise."""
    x = Polynomial.variable(n, var)
    return x if value else 1 - x


def _sequences_equal(n: int, a: int, b: int, width: int) -> Polynomial:
    """C2 between two positions: prod_t (1 - (x_t - y_t)^2)."""
    result = Polynomial.constant(n, 1.0)
    for bit in range(width):
        x = Polynomial.variable(n, _var(a, bit, width))
        y = Polynomial.variable(n, _var(b, bit, width))
        result = result * (1 - x - y + 2 * x * y)
    return result


def _sequence_is_city(n: int, k: int, city: int, width: int) -> Polynomial:
    """C2 between position k and the constant code of ``city``."""
    result = Polynomial.constant(n, 1.0)
    for bit in range(width):
        result = result * _bit_equals(n, _var(k, bit, width), (city >> bit) & 1)
    return result


def _invalid_city(n: int, k: int, m: int, width: int) -> Polynomial:
    """C1: 1 when the code at position k exceeds m - 1, built from the zero bits of m - 1."""
    top = m - 1
    result = Polynomial.zero(n)
    for j in range(width):
        if (top >> j) & 1:
            continue
        term = Polynomial.variable(n, _var(k, j, width))
        for higher in range(j + 1, width):
            term = term * _bit_equals(n, _var(k, higher, width), (top >> higher) & 1)
        result = result + term
    return result


def default_tsp_weights(g: GraphInstance, mu: float = 1.0) -> tuple[float, float]:
    """lambda = gamma = 2 mu max w_ij."""
    top = max((w for _, _, w in g.edges), default=0.0)
    penalty = 2.0 * mu * top
    return penalty, penalty


def tsp_poly(
    g: GraphInstance,
    mu: float = 1.0,
    lam: float | None = None,
    gam: float | None = None,
) -> Polynomial:
    """Tour cost plus invalid-city and repeated-city penalties.

    Args:
        g: Complete graph of m cities
        mu: Tour-length weight
        lam: Invalid-city penalty (default 2 mu max w)
        gam: Repeated-city penalty (default 2 mu max w)

    Returns:
        Polynomial on m * ceil(log2 m) variables

    Raises:
        ValidationError: If g is not complete
    """
    if not g.is_complete:
        raise ValidationError("TSP encoding requires a complete graph")
    m = g.n_vertices
    width = bits_per_city(m)
    n = m * width
    default_lam, default_gam = default_tsp_weights(g, mu)
    lam = default_lam if lam is None else lam
    gam = default_gam if gam is None else gam

    invalid = Polynomial.zero(n)
    for k in range(m):
        invalid = invalid + _invalid_city(n, k, m, width)

    repeated = Polynomial.zero(n)
    for a in range(m):
        for b in range(a + 1, m):
            repeated = repeated + _sequences_equal(n, a, b, width)

    at_city = [[_sequence_is_city(n, k, city, width) for city in range(m)] for k in range(m)]
    tour = Polynomial.zero(n)
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            hop = Polynomial.zero(n)
            for k in range(m):
                hop = hop + at_city[k][i] * at_city[(k + 1) % m][j]
            tour = tour + hop.scale(g.weight(i, j))

    logger.debug("TSP m=%d on %d qubits (lam=%g, gam=%g)", m, n, lam, gam)
    return invalid.scale(lam) + repeated.scale(gam) + tour.scale(mu)


def tsp_encode(route: Sequence[int]) -> BitString:
    """Bit string of a tour given as a permutation of range(m)."""
    m = len(route)
    if sorted(route) != list(range(m)):
        raise ValidationError(f"route {tuple(route)} is not a permutation of range({m})")
    width = bits_per_city(m)
    bits = [0] * (m * width)
    for k, city in enumerate(route):
        for bit in range(width):
            bits[_var(k, bit, width)] = (city >> bit) & 1
    return BitString(tuple(bits))


def decode_positions(x: BitString, m: int) -> list[int]:
    """City code stored at each position, valid or not."""
    width = bits_per_city(m)
    if x.n != m * width:
        raise ValidationError(f"expected {m * width} bits for {m} cities, got {x.n}")
    return [
        sum(x.bits[_var(k, bit, width)] << bit for bit in range(width)) for k in range(m)
    ]


def cities_for_qubits(n: int) -> int:
    """Inverse of :func:`tsp_qubits`."""
    m = 2
    while tsp_qubits(m) < n:
        m += 1
    if tsp_qubits(m) != n:
        raise ValidationError(f"{n} bits do not encode a whole number of cities")
    return m


def tsp_decode(x: BitString, m: int | None = None) -> tuple[int, ...] | None:
    """Route encoded by x, or None when a city is invalid or repeated."""
    m = cities_for_qubits(x.n) if m is None else m
    codes = decode_positions(x, m)
    if any(code >= m for code in codes) or len(set(codes)) != m:
        return None
    return tuple(codes)
