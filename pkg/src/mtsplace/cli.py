"""Command-line interface.

Subcommands:
    solve        read a single-receiver channel file, print the sweep solution
    oracle       same input, but exhaustive enumeration (small instances)
    solve-multi  read a multi-receiver channel file, print the voted placement
    experiment   run a Monte-Carlo sweep from a config file, write CSV
    toy          solve the packaged golden reference instance, print the arc grid
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import replace

from . import io
from .baselines import snr_boost_db
from .harness import (
    ExperimentConfig,
    dbm_to_watts,
    emit_csv,
    run_experiment,
)
from .multi import solve_multi, worst_snr
from .optimizer import (
    CapExceededError,
    DEFAULT_BRUTE_FORCE_CAP,
    arc_table,
    solve_brute_force,
    solve_single,
)


def _cmd_solve(args) -> int:
    channels = io.read_channel_file(args.channel_file)
    result = solve_single(channels)
    sys.stdout.write(io.format_solve_result(result))
    return 0


def _cmd_oracle(args) -> int:
    channels = io.read_channel_file(args.channel_file)
    result = solve_brute_force(channels, cap=args.cap)
    sys.stdout.write(io.format_solve_result(result))
    return 0


def _cmd_solve_multi(args) -> int:
    mcs = io.read_multi_channel_file(args.channel_file)
    placement = solve_multi(mcs)
    power_w = dbm_to_watts(args.power_dbm)
    noise_w = dbm_to_watts(args.noise_dbm)
    chosen = ",".join(str(c) for c in placement.chosen)
    print(f"placement = {chosen}")
    print(f"receivers = {mcs.u_count}")
    print(f"worst_snr = {worst_snr(mcs, placement, power_w, noise_w)!r}")
    return 0


def _cmd_toy(args) -> int:
    channels = io.toy_channel_set()
    print("arc  midpoint/pi  placement  objective")
    for i, (mid, placement, objective) in enumerate(arc_table(channels), start=1):
        chosen = ",".join(str(c) for c in placement.chosen)
        print(f"{i:>3}  {mid / math.pi:>11.4f}  {chosen:>9}  {objective:.6e}")
    result = solve_single(channels)
    sys.stdout.write(io.format_solve_result(result))
    boost = snr_boost_db(result.objective**2, abs(channels.h0) ** 2)
    print(f"boost_db = {boost:.4f}")
    return 0


def _cmd_experiment(args) -> int:
    config = io.read_config(args.config) if args.config else ExperimentConfig()
    updates = {}
    if args.seed is not None:
        updates["seed"] = args.seed
    if args.trials is not None:
        updates["trials"] = args.trials
    if args.methods is not None:
        updates["methods"] = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    if args.sweep is not None:
        var, _, values = args.sweep.partition("=")
        if not values:
            raise ValueError("--sweep expects VAR=v1,v2,...")
        updates["sweep_var"] = var.strip()
        updates["sweep_values"] = tuple(int(v) for v in values.split(","))
    fading = config.fading
    if args.nlos:
        fading = replace(fading, direct_nlos=True)
    if args.csi_noise is not None:
        fading = replace(fading, csi_noise_var=args.csi_noise)
    config = replace(config, fading=fading, **updates)

    result = run_experiment(config)
    emit_csv(result, args.out)
    print(f"wrote {args.out}")
    for value in result.sweep_values:
        for method in result.methods:
            print(
                f"{result.sweep_var}={value} {method}: "
                f"mean boost {result.mean_boost_db(value, method):.3f} dB, "
                f"mean solve {result.mean_seconds(value, method):.6f} s"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mtsplace",
        description="Optimal placement of movable ceiling reflector panels",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="sweep solver on a channel file")
    p.add_argument("channel_file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive enumeration on a channel file")
    p.add_argument("channel_file")
    p.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_BRUTE_FORCE_CAP,
        help="refuse to enumerate more placements than this",
    )
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("solve-multi", help="voted placement for several receivers")
    p.add_argument("channel_file")
    p.add_argument("--power-dbm", type=float, default=30.0)
    p.add_argument("--noise-dbm", type=float, default=-80.0)
    p.set_defaults(func=_cmd_solve_multi)

    p = sub.add_parser("toy", help="solve the packaged reference instance")
    p.set_defaults(func=_cmd_toy)

    p = sub.add_parser("experiment", help="run a Monte-Carlo sweep, write CSV")
    p.add_argument("--config", help="key = value config file")
    p.add_argument("--out", default="experiment.csv", help="output CSV path")
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--methods", help="comma-separated subset of proposed,cmp,rmp,fix")
    p.add_argument("--sweep", help="VAR=v1,v2,... with VAR one of M,L,N,U")
    p.add_argument("--nlos", action="store_true", help="blocked direct link scenario")
    p.add_argument("--csi-noise", type=float, help="channel-knowledge noise variance")
    p.set_defaults(func=_cmd_experiment)
    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    try:
        return args.func(args)
    except (ValueError, OSError, CapExceededError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())
