"""Gate-level export of layer plans and a small interpreter to check it."""

from samba_gqw.circuits.interpreter import simulate_qasm
from samba_gqw.circuits.qasm import MAX_GADGET_DEGREE, emit_qasm, gadget_depth, ising_terms

__all__ = [
    "MAX_GADGET_DEGREE",
    "emit_qasm",
    "gadget_depth",
    "ising_terms",
    "simulate_qasm",
]
