"""Minimal state-vector interpreter for the emitted gate set (h, cx, rz, rx)."""

import math
import re

import numpy as np

from samba_gqw.exceptions import CircuitExportError
from samba_gqw.models import StateVector

_QREG = re.compile(r"^qreg\s+q\[(\d+)\];$")
_GATE = re.compile(r"^(h|cx|rz|rx)(?:\(([^)]*)\))?\s+(.+);$")
_QUBIT = re.compile(r"q\[(\d+)\]")
_SKIP = ("OPENQASM", "include")

_H = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / math.sqrt(2.0)


def _single(amplitudes: np.ndarray, n: int, qubit: int, matrix: np.ndarray) -> None:
    view = amplitudes.reshape(1 << (n - 1 - qubit), 2, 1 << qubit)
    low = view[:, 0, :].copy()
    high = view[:, 1, :].copy()
    view[:, 0, :] = matrix[0, 0] * low + matrix[0, 1] * high
    view[:, 1, :] = matrix[1, 0] * low + matrix[1, 1] * high


def _cx(amplitudes: np.ndarray, indices: np.ndarray, control: int, target: int) -> None:
    rows = indices[(((indices >> control) & 1) == 1) & (((indices >> target) & 1) == 0)]
    partners = rows | (1 << target)
    amplitudes[rows], amplitudes[partners] = amplitudes[partners].copy(), amplitudes[rows].copy()


def _rz(angle: float) -> np.ndarray:
    return np.diag([np.exp(-0.5j * angle), np.exp(0.5j * angle)])


def _rx(angle: float) -> np.ndarray:
    c, s = math.cos(angle / 2.0), -1j * math.sin(angle / 2.0)
    return np.array([[c, s], [s, c]], dtype=np.complex128)


def simulate_qasm(text: str) -> StateVector:
    """Run an emitted circuit from |0...0> and return the final state.

    Raises:
        CircuitExportError: On unsupported statements or a missing register
    """
    amplitudes: np.ndarray | None = None
    indices = np.empty(0, dtype=np.int64)
    n = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//", 1)[0].strip()
        if not line or line.startswith(_SKIP):
            continue
        register = _QREG.match(line)
        if register:
            n = int(register.group(1))
            amplitudes = np.zeros(1 << n, dtype=np.complex128)
            amplitudes[0] = 1.0
            indices = np.arange(1 << n)
            continue
        gate = _GATE.match(line)
        if gate is None:
            raise CircuitExportError(f"line {number}: unsupported statement {line!r}")
        if amplitudes is None:
            raise CircuitExportError(f"line {number}: gate before qreg declaration")
        name, argument, operands = gate.groups()
        qubits = [int(q) for q in _QUBIT.findall(operands)]
        if any(q >= n for q in qubits):
            raise CircuitExportError(f"line {number}: qubit index out of range")
        try:
            if name == "h":
                _single(amplitudes, n, qubits[0], _H)
            elif name == "cx":
                _cx(amplitudes, indices, qubits[0], qubits[1])
            elif name == "rz":
                _single(amplitudes, n, qubits[0], _rz(float(argument)))
            else:
                _single(amplitudes, n, qubits[0], _rx(float(argument)))
        except (TypeError, ValueError, IndexError) as e:
            raise CircuitExportError(f"line {number}: malformed gate {line!r}: {e}") from e

    if amplitudes is None:
        raise CircuitExportError("circuit declares no qreg")
    return StateVector(amplitudes, n)
