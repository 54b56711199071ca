"""Command-line sweep tool.

    vdw sweep --config FILE --out CSV [--fast] [--workers N]
              [--units si|natural]
    vdw sweep --preset fig1a --out CSV ...
    vdw validate --config FILE
    vdw presets

Exit codes: 0 success, 1 validation failure, 2 numeric failure in at
least one sweep row.
"""

import argparse
import sys

from . import scan


def _config_path(args):
    if args.config:
        return args.config
    return scan.preset_path(args.preset)


def cmd_sweep(args):
    path = _config_path(args)
    try:
        config = scan.load_config(path)
    except scan.ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    result = scan.run_sweep(config, workers=args.workers, fast=args.fast,
                            unit_mode=args.units)
    scan.write_csv(result, args.out)
    print(f"{config.scenario}: {len(result.rows)} rows -> {args.out}")
    if result.n_failures:
        print(f"warning: {result.n_failures} row(s) failed numerically",
              file=sys.stderr)
        return 2
    return 0


def cmd_validate(args):
    report = scan.validate_config(_config_path(args))
    print(report.render())
    return 0 if report.ok else 1


def cmd_presets(_args):
    for name in scan.preset_names():
        print(name)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="vdw",
        description="Sweep van der Waals potentials and forces for "
                    "two-level atom pairs in isotropic photon fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    group = common.add_mutually_exclusive_group(required=True)
    group.add_argument("--config", help="path to a sweep config (TOML)")
    group.add_argument("--preset", help="name of a shipped scenario preset")

    p_sweep = sub.add_parser("sweep", parents=[common],
                             help="run a sweep and write a CSV dataset")
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    p_sweep.add_argument("--fast", action="store_true",
                         help="use asymptotic closed forms inside their "
                              "validated regimes")
    p_sweep.add_argument("--workers", type=int, default=1)
    p_sweep.add_argument("--units", choices=("natural", "si"),
                         default="natural")
    p_sweep.set_defaults(func=cmd_sweep)

    p_val = sub.add_parser("validate", parents=[common],
                           help="validate a config without computing")
    p_val.set_defaults(func=cmd_validate)

    p_presets = sub.add_parser("presets", help="list shipped scenarios")
    p_presets.set_defaults(func=cmd_presets)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except scan.ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
