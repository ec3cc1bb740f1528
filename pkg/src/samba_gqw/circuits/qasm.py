"""OpenQASM 2.0 export of a layer plan for the transverse-field mixer.

Each cost layer exp(-i dt H_C) is lowered to phase gadgets: after the change
of basis x_i = (1 - z_i) / 2 every Ising term J_T Z_T becomes a CNOT ladder
onto the last qubit of T, ``rz(2 dt J_T)`` on that qubit and the mirrored
ladder. The constant term is a global phase and is dropped.
"""

import logging
from collections import defaultdict
from itertools import combinations

from samba_gqw.exceptions import CircuitExportError
from samba_gqw.hubo import Polynomial
from samba_gqw.mixers import MixerSpec
from samba_gqw.models import MixerKind
from samba_gqw.schedule import LayerPlan

logger = logging.getLogger(__name__)

MAX_GADGET_DEGREE = 4
ISING_TOLERANCE = 1e-12


def ising_terms(poly: Polynomial) -> dict[tuple[int, ...], float]:
    """Coefficients J_T of sum_T J_T prod_{i in T} z_i, constant dropped."""
    coefficients: dict[tuple[int, ...], float] = defaultdict(float)
    for indices, coefficient in poly.terms.items():
        weight = coefficient / (1 << len(indices))
        for size in range(1, len(indices) + 1):
            sign = -1.0 if size % 2 else 1.0
            for subset in combinations(indices, size):
                coefficients[subset] += sign * weight
    if not coefficients:
        return {}
    scale = max(abs(c) for c in coefficients.values())
    return {
        subset: value
        for subset, value in sorted(coefficients.items(), key=lambda kv: (len(kv[0]), kv[0]))
        if abs(value) > ISING_TOLERANCE * max(scale, 1.0)
    }


def _format_angle(angle: float) -> str:
    return f"{angle:.17g}"


def _gadget(subset: tuple[int, ...], angle: float) -> list[str]:
    ladder = [f"cx q[{a}],q[{b}];" for a, b in zip(subset, subset[1:], strict=False)]
    return [*ladder, f"rz({_format_angle(angle)}) q[{subset[-1]}];", *reversed(ladder)]


def gadget_depth(terms: dict[tuple[int, ...], float]) -> int:
    """Sequential depth of the cost unitary: 2(|T| - 1) + 1 per term."""
    return sum(2 * (len(subset) - 1) + 1 for subset in terms)


def emit_qasm(
    poly: Polynomial,
    plan: LayerPlan,
    maximize: bool = False,
    mixer: MixerSpec | None = None,
) -> str:
    """Circuit text: Hadamard column, then per layer the cost gadgets and the R_X column.

    Args:
        poly: Cost polynomial of degree at most 4
        plan: Layer plan to export
        maximize: Flip the mixer rotation sign
        mixer: Optional mixer; only the transverse-field mixer can be exported

    Returns:
        OpenQASM 2.0 program text

    Raises:
        CircuitExportError: For ring mixers or degree above 4
    """
    if mixer is not None and mixer.kind is not MixerKind.X_HYPERCUBE:
        raise CircuitExportError("gate-level export supports the transverse-field mixer only")
    if poly.degree > MAX_GADGET_DEGREE:
        raise CircuitExportError(
            f"polynomial degree {poly.degree} exceeds the gadget cap {MAX_GADGET_DEGREE}"
        )

    n = poly.n
    terms = ising_terms(poly)
    d_c = gadget_depth(terms)
    depth = plan.depth(d_sp=1, d_m=1, d_c=d_c)
    sign = 1.0 if maximize else -1.0

    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        f"// qubits: {n}",
        f"// layers: {plan.total_layers}",
        f"// depth: d_SP=1 d_M=1 d_C={d_c} d={depth}",
        f"// total_time: {_format_angle(plan.total_time)}",
        f"qreg q[{n}];",
    ]
    lines.extend(f"h q[{i}];" for i in range(n))
    for index, layer in enumerate(plan.layers):
        lines.append(f"// layer {index} dt={_format_angle(layer.dt)} gamma={_format_angle(layer.gamma)}")
        for subset, coefficient in terms.items():
            lines.extend(_gadget(subset, 2.0 * layer.dt * coefficient))
        angle = _format_angle(sign * 2.0 * layer.theta)
        lines.extend(f"rx({angle}) q[{i}];" for i in range(n))

    logger.info("Emitted QASM: n=%d, layers=%d, depth=%d", n, plan.total_layers, depth)
    return "\n".join(lines) + "\n"
