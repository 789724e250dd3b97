"""``simulate`` command line entry point.

Exit codes: 0 success, 2 configuration error, 3 I/O error.
"""

import argparse
import logging
import sys
from pathlib import Path

from .config import ConfigError, override, parse_config, parse_protocols, parse_seeds
from .experiment import run_experiment

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simulate",
        description="Run clustering-protocol lifetime experiments on a heterogeneous WSN.",
    )
    parser.add_argument("--config", required=True, type=Path, help="key = value config file")
    parser.add_argument("--out", type=Path, help="output directory (overrides output_dir)")
    parser.add_argument("--plots", action="store_true", default=None, help="also write SVG figures")
    parser.add_argument("--protocols", help="comma-separated subset of ceec,leach,sep,esep,deec")
    parser.add_argument("--seeds", help="comma-separated RNG seeds, e.g. 1,2,3")
    parser.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        spec = override(
            parse_config(args.config),
            output_dir=args.out,
            emit_plots=args.plots,
            protocols=parse_protocols(args.protocols, "--protocols") if args.protocols else None,
            seeds=parse_seeds(args.seeds, "--seeds") if args.seeds else None,
        )
    except ConfigError as exc:
        print(f"simulate: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        written = run_experiment(spec, jobs=max(1, args.jobs))
    except OSError as exc:
        print(f"simulate: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    for path in written:
        print(path)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
