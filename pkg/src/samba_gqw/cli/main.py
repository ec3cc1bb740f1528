"""Argument parsing and the ``samba-gqw`` entry point."""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence

from samba_gqw import __version__
from samba_gqw.cli.commands import (
    COMPARE_MODES,
    MIXER_CHOICES,
    cmd_compare,
    cmd_gen,
    cmd_qasm,
    cmd_run,
    cmd_schedule,
)
from samba_gqw.config import LOG_LEVELS, SambaConfig
from samba_gqw.exceptions import SambaGQWException
from samba_gqw.models import ObjectiveKind, ProblemFamily
from samba_gqw.problems import DEFAULT_UNIT_DISK_RADIUS

logger = logging.getLogger(__name__)

Command = Callable[[argparse.Namespace, SambaConfig], int]


def _common_options() -> argparse.ArgumentParser:
    """Flags shared by every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="Run seed (default: 0)")
    common.add_argument("--out", default=".", help="Output directory (default: .)")
    common.add_argument("--maximize", action="store_true", help="Flip the mixer sign")
    common.add_argument("--shots", type=int, default=None, help="Multinomial shots on the final state")
    common.add_argument("--mixer", choices=sorted(MIXER_CHOICES), default=None, help="Mixer kind")
    common.add_argument("--hamming-weight", type=int, default=None, help="Weight k of the ring mixer")
    common.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper, default=None)
    return common


def _schedule_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--schedule", default=None, help="Schedule JSON (built inline when omitted)")
    parser.add_argument("--q", type=int, default=None, help="Sampled decisions (default: n^2)")
    parser.add_argument("--slices", type=int, default=None, help="Layers per schedule segment")


def build_parser() -> argparse.ArgumentParser:
    """Parser with the gen, schedule, run, compare and qasm subcommands."""
    parser = argparse.ArgumentParser(
        prog="samba-gqw",
        description="Sampling-based guided quantum walk simulation suite",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _common_options()
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="Generate problem instances")
    gen.add_argument("family", choices=[f.value for f in ProblemFamily])
    gen.add_argument("--n", type=int, default=None, help="Variables, vertices or assets")
    gen.add_argument("--p-edge", type=float, default=0.5, help="Erdos-Renyi edge probability")
    gen.add_argument("--graph", choices=("erdos_renyi", "unit_disk"), default=None)
    gen.add_argument("--radius", type=float, default=DEFAULT_UNIT_DISK_RADIUS, help="Unit-disk radius")
    gen.add_argument("--weighted", action="store_true", help="Uniform random edge weights")
    gen.add_argument("--w-range", type=float, nargs=2, default=(-10.0, 10.0), metavar=("LO", "HI"))
    gen.add_argument("--penalty", type=float, default=None, help="MIS penalty weight")
    gen.add_argument("--k", type=int, default=None, help="Clause size (SAT) or cardinality (portfolio)")
    gen.add_argument("--alpha", type=float, default=None, help="Clause-to-variable ratio")
    gen.add_argument("--lam", type=float, default=None, help="Portfolio risk appetite or TSP penalty")
    gen.add_argument("--assets", default=None, help="Asset file to draw portfolios from")
    gen.add_argument("--cities", type=int, default=None, help="TSP city count")
    gen.add_argument("--dist-range", type=float, nargs=2, default=(0.0, 1.0), metavar=("LO", "HI"))
    gen.add_argument("--mu", type=float, default=None, help="TSP distance weight")
    gen.add_argument("--gam", type=float, default=None, help="TSP duplicate-city penalty")
    gen.add_argument("--repeat", type=int, default=1, help="Instances with consecutive seeds")
    gen.set_defaults(handler=cmd_gen)

    schedule = sub.add_parser("schedule", parents=[common], help="Sample gaps and build a schedule")
    schedule.add_argument("instance")
    schedule.add_argument("--q", type=int, default=None, help="Sampled decisions (default: n^2)")
    schedule.set_defaults(handler=cmd_schedule)

    run = sub.add_parser("run", parents=[common], help="Evolve one or more instances")
    run.add_argument("instances", nargs="+")
    _schedule_options(run)
    run.add_argument("--slice-density", type=float, default=None, help="p_l = ceil(density * tau_l)")
    run.set_defaults(handler=cmd_run)

    compare = sub.add_parser("compare", parents=[common], help="Baseline comparisons")
    compare.add_argument("instance")
    compare.add_argument(
        "--mode", "--baseline", dest="mode", choices=sorted(COMPARE_MODES), default="gqw"
    )
    _schedule_options(compare)
    compare.add_argument("--qaoa-p", type=int, default=4, help="Largest QAOA depth swept")
    compare.add_argument("--opt-iters", type=int, default=None, help="Optimizer iteration budget")
    compare.add_argument(
        "--objective", choices=[k.value for k in ObjectiveKind], default=ObjectiveKind.QUALITY.value
    )
    compare.add_argument("--seeds", type=int, default=5, help="Seeds per rule in the sampling study")
    compare.set_defaults(handler=cmd_compare)

    qasm = sub.add_parser("qasm", parents=[common], help="Export an OpenQASM 2.0 circuit")
    qasm.add_argument("instance")
    _schedule_options(qasm)
    qasm.set_defaults(handler=cmd_qasm)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run the subcommand and map failures to exit codes."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = SambaConfig()
        if args.log_level:
            config.log_level = args.log_level
        logging.basicConfig(
            level=config.log_level,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
        handler: Command = args.handler
        return handler(args, config)
    except SambaGQWException as e:
        logger.error("%s failed: %s", args.command, e)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
