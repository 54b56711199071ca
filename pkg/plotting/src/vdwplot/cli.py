"""Figure regeneration CLI.

    vdw-plot --spec plot.toml
    vdw-plot --preset fig1 --csv-dir sweeps/ --out figures/

The preset form renders one multi-panel figure per family (fig1, fig2,
fig3) from the correspondingly named sweep CSVs; `--preset all` does
all three.  PNG and SVG are written side by side.
"""

import argparse
import sys

from .csvdata import DataError
from .render import render
from .specs import SpecError, load_spec, preset_spec


def build_parser():
    parser = argparse.ArgumentParser(
        prog="vdw-plot",
        description="Regenerate figures from vdw sweep CSV datasets.")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--spec", help="TOML plot specification")
    group.add_argument("--preset", help="figure family: fig1, fig2, fig3 "
                                        "or all")
    parser.add_argument("--csv-dir", default=".",
                        help="directory holding the sweep CSVs "
                             "(preset mode)")
    parser.add_argument("--out", default=".",
                        help="output directory (preset mode)")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.spec:
            specs = [load_spec(args.spec)]
        elif args.preset == "all":
            specs = [preset_spec(f, args.csv_dir, args.out)
                     for f in ("fig1", "fig2", "fig3")]
        else:
            specs = [preset_spec(args.preset, args.csv_dir, args.out)]
        for spec in specs:
            for path in render(spec):
                print(path)
    except (SpecError, DataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
