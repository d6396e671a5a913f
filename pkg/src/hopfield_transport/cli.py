"""Command-line front end.

Exit codes: 0 success, 1 configuration error, 2 numerical or convergence
failure, 3 verification mismatch.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .config import PRESET_DESCRIPTIONS, PRESETS, build_config
from .errors import ConfigError, HopfieldError
from .oracle import FockTruncation, MODE_TRUNCATION, LIOUVILLIAN_TRUNCATION, ground_photon_tolerance, verify_all
from .sweep import UNITS_LINE, point_report, run_sweep

log = logging.getLogger(__name__)

EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL, EXIT_MISMATCH = 0, 1, 2, 3


def _common(parser):
    parser.add_argument("--config", type=Path, help="flat key = value configuration file")
    parser.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
                        help="override one setting (repeatable)")
    parser.add_argument("--preset", choices=sorted(PRESETS))
    parser.add_argument("--output", default="-", help="output path, or - for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfield-transport",
                                     description="Heat transport through a two-mode Hopfield junction.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="sweep the coupling g and write CSV")
    _common(p_sweep)
    p_sweep.add_argument("--threads", type=int, default=1)
    p_sweep.add_argument("--no-provenance-line", action="store_true",
                         help="omit the generated_by header line")

    p_verify = sub.add_parser("verify", help="check closed forms against brute-force oracles")
    _common(p_verify)

    p_point = sub.add_parser("point", help="full report at a single coupling g")
    _common(p_point)

    sub.add_parser("presets", help="list presets")
    return parser


def _load(args):
    text = None
    source = "<config>"
    if args.config is not None:
        try:
            text = args.config.read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from None
        source = str(args.config)
    return build_config(args.preset, text, source, args.overrides)


def _emit(text: str, output: str):
    if output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "presets":
        for name in PRESETS:
            print(f"{name}: {PRESET_DESCRIPTIONS[name]}")
        return EXIT_OK
    try:
        cfg = _load(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        if args.command == "sweep":
            if args.threads < 1:
                print("config error: --threads must be >= 1", file=sys.stderr)
                return EXIT_CONFIG
            _emit(run_sweep(cfg, threads=args.threads, provenance=not args.no_provenance_line), args.output)
            return EXIT_OK
        if args.command == "point":
            _emit(point_report(cfg.scenario), args.output)
            return EXIT_OK
        p = cfg.scenario
        ed = FockTruncation(cfg.ed_n_max, ground_photon_tolerance(p))
        full = FockTruncation(cfg.liouvillian_n_max, LIOUVILLIAN_TRUNCATION.convergence_tol,
                              max_n_max=LIOUVILLIAN_TRUNCATION.max_n_max)
        mode = FockTruncation(cfg.mode_n_max, MODE_TRUNCATION.convergence_tol, max_n_max=MODE_TRUNCATION.max_n_max)
        report = verify_all(p, ed, full, mode)
    except HopfieldError as exc:
        print(f"numerical error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL

    _emit(f"# {UNITS_LINE}\n" + report.as_text(), args.output)
    if report.errored:
        for c in report.errored:
            print(f"{c.name}: {c.error_type}: {c.error}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK if report.passed else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
