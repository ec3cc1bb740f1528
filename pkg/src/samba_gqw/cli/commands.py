"""Subcommand implementations for the samba-gqw command line."""

import argparse
import asyncio
import logging
import statistics
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from samba_gqw.circuits import emit_qasm
from samba_gqw.cli.models import RunConfig
from samba_gqw.cli.outputs import (
    load_schedule,
    top_fraction_column,
    write_csv,
    write_gamma_energy_csv,
    write_gamma_time_csv,
    write_json,
    write_ranking_csv,
    write_text,
    write_trace_csv,
)
from samba_gqw.config import SambaConfig
from samba_gqw.engine import EvolutionTrace
from samba_gqw.exceptions import UsageError, ValidationError
from samba_gqw.manager import RunResult, SambaManager
from samba_gqw.mixers import feasible_count
from samba_gqw.models import MixerKind, ObjectiveKind, ProblemFamily
from samba_gqw.problems import (
    DEFAULT_SAT_ALPHA,
    Instance,
    PreparedProblem,
    compile_instance,
    draw_portfolio,
    gen_erdos_renyi,
    gen_maxksat,
    gen_portfolio,
    gen_tsp,
    gen_unit_disk,
    load_asset_file,
    load_instance,
    save_instance,
)
from samba_gqw.schedule import Schedule

logger = logging.getLogger(__name__)

MIXER_CHOICES = {"x": MixerKind.X_HYPERCUBE, "xy-ring": MixerKind.XY_RING}
SUMMARY_KEYS = ("final_quality", "final_pr", "P0", "top5", "T")


def _mixer_kind(args: argparse.Namespace) -> MixerKind | None:
    return MIXER_CHOICES[args.mixer] if args.mixer else None


def _run_config(args: argparse.Namespace, **overrides: Any) -> RunConfig:
    fields = {
        "command": args.command,
        "seed": args.seed,
        "out": str(args.out),
        "maximize": args.maximize,
        "shots": args.shots,
        "mixer": args.mixer,
        "hamming_weight": args.hamming_weight,
    }
    fields.update(overrides)
    return RunConfig(**fields)


def _require(value: Any, flag: str, family: ProblemFamily) -> Any:
    if value is None:
        raise UsageError(f"{family.value} needs {flag}")
    return value


def _generate(family: ProblemFamily, args: argparse.Namespace, seed: int) -> tuple[Any, dict[str, Any]]:
    """Instance data and compile parameters for one generated instance."""
    if family is ProblemFamily.LABS:
        return _require(args.n, "--n", family), {}
    if family is ProblemFamily.TSP:
        cities = _require(args.cities, "--cities", family)
        params = {key: getattr(args, key) for key in ("mu", "lam", "gam") if getattr(args, key) is not None}
        return gen_tsp(cities, tuple(args.dist_range), seed=seed), params

    n = _require(args.n, "--n", family)
    if family in (ProblemFamily.MAXCUT, ProblemFamily.MIS):
        graph = args.graph or ("unit_disk" if family is ProblemFamily.MIS else "erdos_renyi")
        if graph == "unit_disk":
            data = gen_unit_disk(n, radius=args.radius, seed=seed)
        else:
            data = gen_erdos_renyi(
                n, args.p_edge, weighted=args.weighted, w_range=tuple(args.w_range), seed=seed
            )
        params = (
            {"penalty": args.penalty}
            if family is ProblemFamily.MIS and args.penalty is not None
            else {}
        )
        return data, params
    if family is ProblemFamily.MAXKSAT:
        k = 3 if args.k is None else args.k
        alpha = DEFAULT_SAT_ALPHA.get(k) if args.alpha is None else args.alpha
        if alpha is None:
            raise UsageError(f"no default clause ratio for k={k}; pass --alpha")
        return gen_maxksat(n, k, alpha, seed=seed), {}
    k = n // 2 if args.k is None else args.k
    lam = 0.5 if args.lam is None else args.lam
    if args.assets:
        return draw_portfolio(load_asset_file(args.assets), n, lam, k, seed=seed), {}
    return gen_portfolio(n, k, lam=lam, seed=seed), {}


def cmd_gen(args: argparse.Namespace, config: SambaConfig) -> int:
    """Generate ``--repeat`` instances with consecutive seeds."""
    family = ProblemFamily(args.family)
    if args.repeat < 1:
        raise UsageError("--repeat must be at least 1")
    manager = SambaManager(config)
    out = Path(args.out)
    written = []
    for offset in range(args.repeat):
        seed = args.seed + offset
        try:
            data, params = _generate(family, args, seed)
            instance = compile_instance(family, data, **params)
            mixer = manager.mixer_for(instance, _mixer_kind(args), args.hamming_weight)
        except ValidationError as e:
            raise UsageError(f"invalid {family.value} parameters: {e}") from e
        suffix = "" if family is ProblemFamily.LABS else f"_seed{seed}"
        path = save_instance(instance, out / f"{family.value}_n{instance.n}{suffix}.json")
        written.append(str(path))
        print(f"{path}: n={instance.n} feasible={feasible_count(mixer)}")
        if family is ProblemFamily.LABS:
            break
    write_json(
        out / "gen_config.json",
        _run_config(args, family=family.value, instances=written).to_dict(config.as_dict()),
    )
    return 0


def _prepare(
    manager: SambaManager,
    args: argparse.Namespace,
    path: str,
) -> tuple[Instance, PreparedProblem]:
    instance = load_instance(path)
    problem = manager.prepare(
        instance,
        _mixer_kind(args),
        args.hamming_weight,
        maximize=args.maximize,
        name=Path(path).stem,
    )
    return instance, problem


def _schedule_payload(schedule: Schedule, **extra: Any) -> dict[str, Any]:
    payload = schedule.to_dict()
    payload.update(extra)
    return payload


def cmd_schedule(args: argparse.Namespace, config: SambaConfig) -> int:
    """Sample gaps, build the schedule and write its two curve views."""
    manager = SambaManager(config)
    instance = load_instance(args.instance)
    mixer = manager.mixer_for(instance, _mixer_kind(args), args.hamming_weight)
    planned = manager.sample_schedule(
        instance.polynomial, mixer, instance.symmetry, q=args.q, seed=args.seed
    )
    out = Path(args.out)
    schedule = planned.schedule
    write_json(
        out / "schedule.json",
        _schedule_payload(schedule, sampler_seed=planned.seed, instance=str(args.instance)),
    )
    write_gamma_energy_csv(out / "gamma_energy.csv", planned.gaps)
    write_gamma_time_csv(out / "gamma_time.csv", schedule)
    write_json(
        out / "run_config.json",
        _run_config(args, instances=[str(args.instance)], q=args.q).to_dict(config.as_dict()),
    )
    print(
        f"T={schedule.total_time:.6g} segments={schedule.num_segments} "
        f"q_used={schedule.q_used} exact={str(schedule.exact).lower()}"
    )
    return 0


def write_run_outputs(
    directory: Path,
    result: RunResult,
    config: SambaConfig,
    run_config: RunConfig,
) -> dict[str, Any]:
    """Trace, rankings, schedule, summary and config of one run."""
    problem = result.problem
    final_state = result.trace.final_state
    write_trace_csv(directory / "trace.csv", result.trace, config.tracked_ranks, config.top_fraction)
    write_ranking_csv(
        directory / "ranking.csv", final_state, problem.spectrum, threshold=config.display_threshold
    )
    write_ranking_csv(directory / "ranking_full.csv", final_state, problem.spectrum)
    write_json(directory / "schedule.json", _schedule_payload(result.schedule))
    summary: dict[str, Any] = {"instance": problem.name, **result.summary()}
    if result.shots is not None and result.shots.best_index is not None:
        summary["best_decision"] = str(result.shots.best_decision(problem.n))
    write_json(directory / "summary.json", summary)
    write_json(directory / "run_config.json", run_config.to_dict(config.as_dict()))
    return summary


def _averages(summaries: Sequence[dict[str, Any]]) -> dict[str, float]:
    return {key: statistics.fmean(s[key] for s in summaries) for key in SUMMARY_KEYS}


def cmd_run(args: argparse.Namespace, config: SambaConfig) -> int:
    """Evolve one or more instances; several instances run as a concurrent sweep."""
    if args.slices is not None and args.slice_density is not None:
        raise UsageError("--slices and --slice-density are mutually exclusive")
    manager = SambaManager(config)
    problems = [_prepare(manager, args, path)[1] for path in args.instances]
    schedule = load_schedule(args.schedule) if args.schedule else None
    results = asyncio.run(
        manager.run_sweep(
            problems,
            q=args.q,
            slices=args.slices,
            shots=args.shots,
            seed=args.seed,
            slice_density=args.slice_density,
            schedule=schedule,
        )
    )

    out = Path(args.out)
    single = len(results) == 1
    summaries = []
    for index, (path, result) in enumerate(zip(args.instances, results, strict=True)):
        directory = out if single else out / Path(path).stem
        run_config = _run_config(
            args,
            instances=[str(path)],
            q=args.q,
            slices=args.slices,
            slice_density=args.slice_density,
            snapshot_every=config.snapshot_every,
            schedule=args.schedule,
            seed=args.seed + index,
        )
        summary = write_run_outputs(directory, result, config, run_config)
        summaries.append(summary)
        print(
            f"{result.problem.name}: T={summary['T']:.6g} quality={summary['final_quality']:.4f} "
            f"P0={summary['P0']:.4f} top={summary['top5']:.4f}"
        )
    if not single:
        write_json(out / "sweep_summary.json", {"runs": summaries, "mean": _averages(summaries)})
    return 0


def _schedule_for(manager: SambaManager, args: argparse.Namespace, problem: PreparedProblem) -> Schedule:
    if args.schedule:
        return load_schedule(args.schedule)
    return manager.plan_schedule(problem, q=args.q, seed=args.seed).schedule


def _final_summary(trace: EvolutionTrace) -> dict[str, float]:
    final = trace.final
    return {
        "initial_quality": trace.initial.quality,
        "final_quality": final.quality,
        "final_pr": final.participation_ratio,
        "P0": final.p0,
        "top5": final.top_fraction_prob,
    }


def _compare_gqw(
    manager: SambaManager,
    args: argparse.Namespace,
    problem: PreparedProblem,
    config: SambaConfig,
    out: Path,
) -> None:
    schedule = _schedule_for(manager, args, problem)
    comparison = manager.compare_gqw(
        problem,
        schedule,
        slices=args.slices,
        max_iter=args.opt_iters,
        objective_kind=ObjectiveKind(args.objective),
        seed=args.seed,
    )
    for label, trace in (("samba", comparison.samba), ("gqw", comparison.gqw)):
        write_trace_csv(out / f"{label}_trace.csv", trace, config.tracked_ranks, config.top_fraction)
        write_ranking_csv(out / f"{label}_ranking_full.csv", trace.final_state, problem.spectrum)
    write_json(
        out / "gqw_comparison.json",
        {
            "T": comparison.total_time,
            "objective": args.objective,
            "samba": _final_summary(comparison.samba),
            "gqw": _final_summary(comparison.gqw),
            "optimization": comparison.optimization.to_dict(),
        },
    )
    print(
        f"T={comparison.total_time:.6g} samba quality={comparison.samba.final.quality:.4f} "
        f"gqw quality={comparison.gqw.final.quality:.4f}"
    )


def _compare_qaoa(
    manager: SambaManager,
    args: argparse.Namespace,
    problem: PreparedProblem,
    config: SambaConfig,
    out: Path,
) -> None:
    depths = list(range(1, args.qaoa_p + 1))
    schedule = _schedule_for(manager, args, problem)
    rows = manager.compare_qaoa(problem, depths, max_iter=args.opt_iters, seed=args.seed, schedule=schedule)
    write_csv(
        out / "qaoa_depth.csv",
        ["p", "depth", "r_tilde", "evaluations", "samba_depth", "samba_layers", "samba_r_tilde"],
        (
            {
                "p": r.p,
                "depth": r.depth,
                "r_tilde": r.r_tilde,
                "evaluations": r.evaluations,
                "samba_depth": r.samba_depth,
                "samba_layers": r.samba_layers,
                "samba_r_tilde": r.samba_r_tilde,
            }
            for r in rows
        ),
    )
    angle_rows = [
        {"p": r.p, "k": k, "gamma": r.angles[2 * k], "beta": r.angles[2 * k + 1]}
        for r in rows
        for k in range(r.p)
    ]
    write_csv(out / "qaoa_angles.csv", ["p", "k", "gamma", "beta"], angle_rows)

    plan = manager.layer_plan(schedule, args.slices)
    samba_rows = [
        {"layer": k, "gamma": gamma, "beta": beta}
        for k, (gamma, beta) in enumerate(plan.as_qaoa_angles())
    ]
    write_csv(out / "samba_angles.csv", ["layer", "gamma", "beta"], samba_rows)
    for r in rows:
        print(
            f"p={r.p} depth={r.depth} r_tilde={r.r_tilde:.4f} "
            f"samba_depth={r.samba_depth} samba_r_tilde={r.samba_r_tilde:.4f}"
        )


def _compare_sampling(
    manager: SambaManager,
    args: argparse.Namespace,
    problem: PreparedProblem,
    config: SambaConfig,
    out: Path,
) -> None:
    seeds = [args.seed + s for s in range(args.seeds)]
    rows = manager.sampling_study(problem, seeds, slices=args.slices)
    top = top_fraction_column(config.top_fraction)
    fieldnames = ["rule", "q", "seed", "T", "quality", "participation_ratio", "P0", top]
    table = [
        {
            "rule": r.label,
            "q": r.q,
            "seed": r.seed,
            "T": r.total_time,
            "quality": r.final.quality,
            "participation_ratio": r.final.participation_ratio,
            "P0": r.final.p0,
            top: r.final.top_fraction_prob,
        }
        for r in rows
    ]
    write_csv(out / "sampling_study.csv", fieldnames, table)
    means = {}
    for rule in dict.fromkeys(r.label for r in rows):
        chosen = [r.final for r in rows if r.label == rule]
        means[rule] = {
            "quality": statistics.fmean(b.quality for b in chosen),
            "P0": statistics.fmean(b.p0 for b in chosen),
            "top": statistics.fmean(b.top_fraction_prob for b in chosen),
        }
        print(f"q={rule}: quality={means[rule]['quality']:.4f} top={means[rule]['top']:.4f}")
    write_json(out / "sampling_summary.json", means)


COMPARE_MODES = {
    "gqw": _compare_gqw,
    "qaoa": _compare_qaoa,
    "sampling_study": _compare_sampling,
}


def cmd_compare(args: argparse.Namespace, config: SambaConfig) -> int:
    """Baseline comparisons: tuned Bezier walk, QAOA depth sweep, or sample-count study."""
    manager = SambaManager(config)
    _, problem = _prepare(manager, args, args.instance)
    out = Path(args.out)
    COMPARE_MODES[args.mode](manager, args, problem, config, out)
    write_json(
        out / "run_config.json",
        _run_config(
            args,
            instances=[str(args.instance)],
            mode=args.mode,
            q=args.q,
            slices=args.slices,
            schedule=args.schedule,
            params={"opt_iters": args.opt_iters, "qaoa_p": args.qaoa_p, "objective": args.objective},
        ).to_dict(config.as_dict()),
    )
    return 0


def cmd_qasm(args: argparse.Namespace, config: SambaConfig) -> int:
    """Export the discretized schedule as an OpenQASM 2.0 circuit."""
    manager = SambaManager(config)
    instance = load_instance(args.instance)
    mixer = manager.mixer_for(instance, _mixer_kind(args), args.hamming_weight)
    if args.schedule:
        schedule = load_schedule(args.schedule)
    else:
        schedule = manager.sample_schedule(
            instance.polynomial, mixer, instance.symmetry, q=args.q, seed=args.seed
        ).schedule
    plan = manager.layer_plan(schedule, args.slices)
    text = emit_qasm(instance.polynomial, plan, maximize=args.maximize, mixer=mixer)
    out = Path(args.out)
    target = write_text(out / "circuit.qasm", text)
    write_json(
        out / "run_config.json",
        _run_config(
            args, instances=[str(args.instance)], q=args.q, slices=args.slices, schedule=args.schedule
        ).to_dict(config.as_dict()),
    )
    print(f"{target}: layers={plan.total_layers}")
    return 0
