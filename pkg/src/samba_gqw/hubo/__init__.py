"""Multilinear binary polynomials and exact spectra."""

from samba_gqw.hubo.polynomial import (
    Polynomial,
    evaluate,
    poly_add,
    poly_mul,
    poly_scale,
)
from samba_gqw.hubo.spectrum import Spectrum, enumerate_spectrum

__all__ = [
    "Polynomial",
    "Spectrum",
    "enumerate_spectrum",
    "evaluate",
    "poly_add",
    "poly_mul",
    "poly_scale",
]
