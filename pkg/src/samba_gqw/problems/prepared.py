"""An instance paired with its mixer, exact spectrum and initial state."""

import logging
from dataclasses import dataclass

from samba_gqw.config import SambaConfig
from samba_gqw.exceptions import DimensionMismatchError
from samba_gqw.hubo import Polynomial, Spectrum, enumerate_spectrum
from samba_gqw.mixers import MixerSpec, feasible_mask, initial_state
from samba_gqw.models import StateVector
from samba_gqw.problems.models import Instance, SymmetryTag

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PreparedProblem:
    """Everything the simulators need for one instance."""
    polynomial: Polynomial
    spectrum: Spectrum
    mixer: MixerSpec
    initial: StateVector
    symmetry: SymmetryTag
    maximize: bool = False
    name: str = "instance"

    @property
    def n(self) -> int:
        """Number of qubits."""
        return self.polynomial.n


def prepare_problem(
    polynomial: Polynomial,
    mixer: MixerSpec,
    symmetry: SymmetryTag | None = None,
    config: SambaConfig | None = None,
    maximize: bool = False,
    name: str = "instance",
) -> PreparedProblem:
    """Enumerate the spectrum (restricted to the feasible set) and the initial state."""
    config = config or SambaConfig()
    if mixer.n != polynomial.n:
        raise DimensionMismatchError(
            f"mixer has {mixer.n} qubits, polynomial has {polynomial.n} variables"
        )
    mask = feasible_mask(mixer) if mixer.is_constrained else None
    spectrum = enumerate_spectrum(
        polynomial,
        feasible_mask=mask,
        tolerance=config.rank_tolerance,
        max_qubits=config.spectrum_max_qubits,
    )
    logger.info(
        "Prepared %s: n=%d, mixer=%s, R=%d", name, polynomial.n, mixer.kind.value,
        spectrum.num_rankings,
    )
    return PreparedProblem(
        polynomial=polynomial,
        spectrum=spectrum,
        mixer=mixer,
        initial=initial_state(mixer),
        symmetry=symmetry or SymmetryTag.none(),
        maximize=maximize,
        name=name,
    )


def prepare_instance(
    instance: Instance,
    mixer: MixerSpec,
    config: SambaConfig | None = None,
    maximize: bool = False,
    name: str | None = None,
) -> PreparedProblem:
    """:func:`prepare_problem` for a compiled instance."""
    return prepare_problem(
        instance.polynomial,
        mixer,
        symmetry=instance.symmetry,
        config=config,
        maximize=maximize,
        name=name or instance.family.value,
    )
