"""Main manager class for samba_gqw."""

import asyncio
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from samba_gqw.config import SambaConfig
from samba_gqw.engine import (
    EvolutionTrace,
    ShotResult,
    best_sampled,
    evolve_layer_plan,
    qaoa_evolve,
    sample_counts,
)
from samba_gqw.exceptions import SambaGQWException, UsageError
from samba_gqw.hubo import Polynomial
from samba_gqw.metrics import MetricBundle, approx_ratio_tilde, compute_metrics
from samba_gqw.mixers import MixerSpec, feasible_count
from samba_gqw.models import MixerKind, ObjectiveKind, ProblemFamily, derive_seed
from samba_gqw.optimize import OptResult, tune_gqw, tune_qaoa
from samba_gqw.problems import (
    Instance,
    PortfolioInstance,
    PreparedProblem,
    SymmetryTag,
    prepare_instance,
)
from samba_gqw.schedule import (
    BezierSchedule,
    LayerPlan,
    SampledGaps,
    Schedule,
    build_schedule,
    discretize,
    discretize_rate,
    proportional_slices,
    sample_gaps,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SchedulePlan:
    """Sampled gaps and the schedule built from them."""
    gaps: SampledGaps
    schedule: Schedule
    seed: int


@dataclass(frozen=True, eq=False)
class RunResult:
    """One SamBa evolution and what was measured."""
    problem: PreparedProblem
    schedule: Schedule
    plan: LayerPlan
    trace: EvolutionTrace
    shots: ShotResult | None = None

    def summary(self) -> dict[str, float | int | None]:
        """Headline numbers of the run."""
        final = self.trace.final
        data: dict[str, float | int | None] = {
            "final_quality": final.quality,
            "final_pr": final.participation_ratio,
            "P0": final.p0,
            "top5": final.top_fraction_prob,
            "T": self.schedule.total_time,
            "initial_quality": self.trace.initial.quality,
            "layers": self.plan.total_layers,
            "infeasible_probability": final.infeasible_probability,
        }
        if self.shots is not None:
            data["shots"] = self.shots.shots
            data["best_index"] = self.shots.best_index
            data["best_cost"] = self.shots.best_cost
        return data


@dataclass(frozen=True, eq=False)
class GqwComparison:
    """SamBa and tuned Bezier walk evolved for the same total time."""
    total_time: float
    samba: EvolutionTrace
    gqw: EvolutionTrace
    optimization: OptResult


@dataclass(frozen=True)
class QaoaRow:
    """Tuned QAOA at one depth next to SamBa discretized with p slices per segment."""
    p: int
    r_tilde: float
    depth: int
    angles: tuple[float, ...]
    evaluations: int
    samba_r_tilde: float
    samba_depth: int
    samba_layers: int


@dataclass(frozen=True)
class SamplingRow:
    """Final metrics for one sample-count rule and seed."""
    label: str
    q: int
    seed: int
    total_time: float
    final: MetricBundle = field(repr=False)


class SambaManager:
    """Facade composing preparation, scheduling, evolution and baselines."""

    def __init__(self, config: SambaConfig | None = None):
        """Initialize SambaManager.

        Args:
            config: Pipeline configuration (uses defaults if None)
        """
        self.config = config or SambaConfig()

    def mixer_for(
        self,
        instance: Instance,
        kind: MixerKind | None = None,
        hamming_weight: int | None = None,
    ) -> MixerSpec:
        """Choose the mixer; portfolios default to the ring mixer at weight k."""
        n = instance.polynomial.n
        if kind is None:
            kind = (
                MixerKind.XY_RING
                if instance.family is ProblemFamily.PORTFOLIO
                else MixerKind.X_HYPERCUBE
            )
        kind = MixerKind(kind)
        if kind is MixerKind.X_HYPERCUBE:
            return MixerSpec.hypercube(n)
        if hamming_weight is None:
            if not isinstance(instance.data, PortfolioInstance):
                raise UsageError("the ring mixer needs --hamming-weight")
            hamming_weight = instance.data.k
        return MixerSpec.ring(n, hamming_weight)

    def prepare(
        self,
        instance: Instance,
        kind: MixerKind | None = None,
        hamming_weight: int | None = None,
        maximize: bool = False,
        name: str | None = None,
    ) -> PreparedProblem:
        """Instance plus mixer choice to a PreparedProblem."""
        mixer = self.mixer_for(instance, kind, hamming_weight)
        return prepare_instance(instance, mixer, config=self.config, maximize=maximize, name=name)

    def sample_schedule(
        self,
        polynomial: Polynomial,
        mixer: MixerSpec,
        symmetry: SymmetryTag | None = None,
        q: int | None = None,
        seed: int = 0,
    ) -> SchedulePlan:
        """Sample gaps with q samples and build the schedule; no spectrum is needed.

        q defaults to n^2, capped at the feasible count.
        """
        if q is None:
            q = min(polynomial.n**2, feasible_count(mixer))
        sampler_seed = derive_seed(seed, "sampler")
        gaps = sample_gaps(
            polynomial,
            mixer,
            q,
            symmetry=symmetry,
            seed=sampler_seed,
            tolerance=self.config.rank_tolerance,
            permutation_limit=self.config.permutation_sampling_limit,
        )
        return SchedulePlan(gaps, build_schedule(gaps), sampler_seed)

    def plan_schedule(self, problem: PreparedProblem, q: int | None = None, seed: int = 0) -> SchedulePlan:
        """:meth:`sample_schedule` for a prepared problem."""
        return self.sample_schedule(problem.polynomial, problem.mixer, problem.symmetry, q, seed)

    def layer_plan(
        self,
        schedule: Schedule,
        slices: int | Sequence[int] | None = None,
        slice_density: float | None = None,
    ) -> LayerPlan:
        """Discretize with explicit slices, a slice density, or the configured default."""
        if slice_density is not None:
            slices = proportional_slices(schedule, slice_density)
        return discretize(schedule, self.config.default_slices if slices is None else slices)

    def run(
        self,
        problem: PreparedProblem,
        schedule: Schedule,
        slices: int | Sequence[int] | None = None,
        snapshot_every: int | None = None,
        shots: int | None = None,
        seed: int = 0,
        slice_density: float | None = None,
    ) -> RunResult:
        """Discretize the schedule, evolve, and optionally sample shots."""
        plan = self.layer_plan(schedule, slices, slice_density)
        trace = evolve_layer_plan(
            problem.initial,
            plan,
            problem.spectrum,
            problem.mixer,
            snapshot_every=self.config.snapshot_every if snapshot_every is None else snapshot_every,
            maximize=problem.maximize,
            inner_trotter=self.config.xy_inner_trotter,
            fraction=self.config.top_fraction,
        )
        measured = None
        if shots:
            counts = sample_counts(trace.final_state, shots, derive_seed(seed, "shots"))
            measured = best_sampled(counts, problem.spectrum)
            logger.info("Best of %d shots on %s: cost=%s", shots, problem.name, measured.best_cost)
        return RunResult(problem, schedule, plan, trace, measured)

    def compare_gqw(
        self,
        problem: PreparedProblem,
        schedule: Schedule,
        slices: int | None = None,
        max_iter: int | None = None,
        objective_kind: ObjectiveKind = ObjectiveKind.QUALITY,
        seed: int = 0,
    ) -> GqwComparison:
        """Tune the Bezier walk at SamBa's T and evolve both with the same layer count."""
        samba = self.run(problem, schedule, slices=slices, snapshot_every=1)
        layers = samba.plan.total_layers
        total_time = schedule.total_time
        result = tune_gqw(
            problem,
            total_time,
            layers,
            max_iter=max_iter or self.config.gqw_max_iter,
            objective_kind=objective_kind,
            seed=derive_seed(seed, "gqw"),
            inner_trotter=self.config.xy_inner_trotter,
        )
        gqw_plan = discretize_rate(BezierSchedule(result.best_params, total_time), layers)
        gqw_trace = evolve_layer_plan(
            problem.initial,
            gqw_plan,
            problem.spectrum,
            problem.mixer,
            maximize=problem.maximize,
            inner_trotter=self.config.xy_inner_trotter,
            fraction=self.config.top_fraction,
        )
        return GqwComparison(total_time, samba.trace, gqw_trace, result)

    def compare_qaoa(
        self,
        problem: PreparedProblem,
        depths: Sequence[int],
        max_iter: int | None = None,
        seed: int = 0,
        schedule: Schedule | None = None,
    ) -> list[QaoaRow]:
        """Tune QAOA at each depth p and report r~ against d_QAOA = p.

        Every row also carries the untuned SamBa walk cut into p slices per
        segment, with its circuit depth, so both curves share one x axis.
        Without a ``schedule`` one is sampled from ``seed``.
        """
        if schedule is None:
            schedule = self.plan_schedule(problem, seed=seed).schedule
        rows = []
        for p in depths:
            plan = discretize(schedule, p)
            walk = evolve_layer_plan(
                problem.initial,
                plan,
                problem.spectrum,
                problem.mixer,
                snapshot_every=0,
                maximize=problem.maximize,
                inner_trotter=self.config.xy_inner_trotter,
                fraction=self.config.top_fraction,
            )
            result = tune_qaoa(
                problem,
                p,
                max_iter=max_iter or self.config.qaoa_max_iter,
                seed=derive_seed(seed, f"qaoa-{p}"),
                inner_trotter=self.config.xy_inner_trotter,
            )
            state = qaoa_evolve(
                problem.initial,
                result.best_params,
                problem.spectrum,
                problem.mixer,
                maximize=problem.maximize,
                inner_trotter=self.config.xy_inner_trotter,
            )
            rows.append(
                QaoaRow(
                    p=p,
                    r_tilde=approx_ratio_tilde(state, problem.spectrum),
                    depth=p,
                    angles=result.best_params,
                    evaluations=result.evaluations,
                    samba_r_tilde=approx_ratio_tilde(walk.final_state, problem.spectrum),
                    samba_depth=plan.depth(),
                    samba_layers=plan.total_layers,
                )
            )
            logger.info(
                "p=%d on %s: QAOA r~=%.4f, SamBa r~=%.4f at depth %d",
                p,
                problem.name,
                rows[-1].r_tilde,
                rows[-1].samba_r_tilde,
                rows[-1].samba_depth,
            )
        return rows

    def sampling_study(
        self,
        problem: PreparedProblem,
        seeds: Sequence[int],
        slices: int | None = None,
    ) -> list[SamplingRow]:
        """Run q in {n, n^2, n^3} (capped at the feasible count) for every seed."""
        n = problem.n
        cap = feasible_count(problem.mixer)
        rules = (("n", n), ("n^2", n**2), ("n^3", n**3))
        rows = []
        for label, q in rules:
            for seed in seeds:
                planned = self.plan_schedule(problem, q=min(q, cap), seed=seed)
                run = self.run(problem, planned.schedule, slices=slices, snapshot_every=0)
                rows.append(
                    SamplingRow(label, planned.gaps.q_used, seed, planned.schedule.total_time, run.trace.final)
                )
        return rows

    def initial_metrics(self, problem: PreparedProblem) -> MetricBundle:
        """Metrics of the initial state."""
        return compute_metrics(problem.initial, problem.spectrum, fraction=self.config.top_fraction)

    def plan_and_run(
        self,
        problem: PreparedProblem,
        q: int | None = None,
        slices: int | Sequence[int] | None = None,
        shots: int | None = None,
        seed: int = 0,
        slice_density: float | None = None,
        schedule: Schedule | None = None,
    ) -> RunResult:
        """Schedule construction (unless one is given) followed by one evolution."""
        if schedule is None:
            schedule = self.plan_schedule(problem, q=q, seed=seed).schedule
        return self.run(
            problem, schedule, slices=slices, shots=shots, seed=seed, slice_density=slice_density
        )

    async def run_sweep(
        self,
        problems: Sequence[PreparedProblem],
        q: int | None = None,
        slices: int | Sequence[int] | None = None,
        shots: int | None = None,
        seed: int = 0,
        slice_density: float | None = None,
        schedule: Schedule | None = None,
    ) -> list[RunResult]:
        """Run several problems concurrently, bounded by ``max_workers``.

        Each problem gets its own seed ``seed + index``.

        Raises:
            SambaGQWException: The first failure among the runs
        """
        semaphore = asyncio.Semaphore(self.config.max_workers)

        async def _one(index: int, problem: PreparedProblem) -> RunResult:
            async with semaphore:
                logger.info("Sweep %d/%d: %s", index + 1, len(problems), problem.name)
                return await asyncio.to_thread(
                    self.plan_and_run,
                    problem,
                    q,
                    slices,
                    shots,
                    seed + index,
                    slice_density,
                    schedule,
                )

        results = await asyncio.gather(
            *(_one(i, p) for i, p in enumerate(problems)), return_exceptions=True
        )
        failures = [r for r in results if isinstance(r, BaseException)]
        if failures:
            first = failures[0]
            if isinstance(first, SambaGQWException):
                raise first
            raise SambaGQWException(f"sweep failed: {first}") from first
        logger.info("Sweep finished: %d runs", len(results))
        return list(results)
