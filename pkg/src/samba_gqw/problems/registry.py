"""Compilation of instance data into Instance objects."""

import logging
from typing import Any

from samba_gqw.exceptions import ValidationError
from samba_gqw.models import ProblemFamily
from samba_gqw.problems.encoders import (
    labs_poly,
    maxcut_poly,
    maxksat_poly,
    mis_poly,
    portfolio_poly,
)
from samba_gqw.problems.models import (
    GraphInstance,
    Instance,
    PortfolioInstance,
    SatInstance,
    SymmetryTag,
)
from samba_gqw.problems.tsp import tsp_poly

logger = logging.getLogger(__name__)


def compile_instance(family: ProblemFamily, data: Any, **params: Any) -> Instance:
    """Build the cost polynomial and symmetry tag of ``data``.

    Args:
        family: Problem family
        data: GraphInstance, SatInstance, PortfolioInstance, or n (int) for LABS
        **params: Family options (``penalty`` for MIS; ``mu``, ``lam``, ``gam`` for TSP)

    Returns:
        Compiled Instance

    Raises:
        ValidationError: If data does not match the family
    """
    family = ProblemFamily(family)

    if family is ProblemFamily.MAXCUT:
        _expect(data, GraphInstance, family)
        poly = maxcut_poly(data)
        symmetry = SymmetryTag.global_bit_flip(poly.n)
    elif family is ProblemFamily.MIS:
        _expect(data, GraphInstance, family)
        poly = mis_poly(data, penalty=params.get("penalty"))
        symmetry = SymmetryTag.none()
    elif family is ProblemFamily.PORTFOLIO:
        _expect(data, PortfolioInstance, family)
        poly = portfolio_poly(data)
        symmetry = SymmetryTag.none()
    elif family is ProblemFamily.LABS:
        if not isinstance(data, int):
            raise ValidationError("LABS data is the sequence length n")
        poly = labs_poly(data)
        symmetry = SymmetryTag.global_bit_flip(poly.n)
    elif family is ProblemFamily.MAXKSAT:
        _expect(data, SatInstance, family)
        poly = maxksat_poly(data)
        symmetry = SymmetryTag.none()
    else:
        _expect(data, GraphInstance, family)
        poly = tsp_poly(
            data,
            mu=params.get("mu", 1.0),
            lam=params.get("lam"),
            gam=params.get("gam"),
        )
        symmetry = SymmetryTag.none()

    logger.info(
        "Compiled %s instance: n=%d, %d terms, degree %d",
        family.value, poly.n, len(poly), poly.degree,
    )
    return Instance(family, data, poly, symmetry, dict(params))


def _expect(data: Any, kind: type, family: ProblemFamily) -> None:
    if not isinstance(data, kind):
        raise ValidationError(f"{family.value} expects {kind.__name__}, got {type(data).__name__}")
