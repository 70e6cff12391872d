"""
Command-line front end: python3 -m zz_strips <mode> [strip] [options].

Every mode takes the strip either inline ("WWRNN 3", "M 2 2") or via
--shapes/--length, --n-range or --file. Enumeration modes write one JSON
object per line.
"""
import sys
import json
import logging
import argparse
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

import sympy
from termcolor import colored

from zz_strips.catalog import catalog_entries, closed_form_or_zero, export_catalog_csv
from zz_strips.config import setup_logging
from zz_strips.dib_poset import build_poset, natural_labeling, to_dot
from zz_strips.errors import GuardExceededError, StripParseError, ZZError
from zz_strips.extension_engine import extension_records
from zz_strips.kekule_bijection import enumerate_kekule, generate_clar_covers
from zz_strips.oracle import oracle_report
from zz_strips.order_polynomials import zz_polynomial
from zz_strips.strip_geometry import (StripSpec, interface_profile, make_strip, minimal_length,
                                      parse_strip, validate)

logger = logging.getLogger(__name__)

MODES = ("profile", "poset", "extensions", "zz", "closed-form", "kekule", "clar", "oracle", "catalog")
FORMATS = ("text", "json", "latex", "dot")

EXIT_OK = 0
EXIT_DIFF = 1
EXIT_INVALID = 2
EXIT_GUARD = 3


@dataclass(frozen=True)
class RunConfig:
    mode: str
    strips: Tuple[StripSpec, ...] = ()
    fmt: str = "text"
    tiers: int = 4
    dedup: bool = True
    include_non_kekulean: bool = False
    workers: Optional[int] = None
    max_vertices: Optional[int] = None
    guard_p: Optional[int] = None
    export_dir: Optional[Path] = None


def parse_n_range(text):
    """'A..B' -> range(A, B + 1)."""
    try:
        low, high = (int(part) for part in text.split(".."))
    except ValueError:
        raise StripParseError(f"Malformed n-range {text!r}; expected A..B")
    if low < 1 or high < low:
        raise StripParseError(f"Empty or non-positive n-range {text!r}")
    return range(low, high + 1)


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _strip_lines(path):
    for line in Path(path).read_text(encoding="UTF8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield StripSpec.from_json(line) if line.startswith("{") else parse_strip(line)


def resolve_strips(args):
    """Collects the strips named on the command line, expanding --n-range."""
    strips = []
    if args.strip:
        strips.append(parse_strip(" ".join(args.strip)))
    if args.shapes:
        if args.n_range:
            strips.extend(make_strip(args.shapes, n) for n in parse_n_range(args.n_range))
        elif args.length is not None:
            strips.append(make_strip(args.shapes, args.length))
        elif args.mode == "closed-form":
            strips.append(make_strip(args.shapes, minimal_length(args.shapes)))
        else:
            raise StripParseError(f"Mode {args.mode} needs --length or --n-range")
    if args.file:
        strips.extend(_strip_lines(args.file))
    if args.mode != "catalog" and not strips:
        raise StripParseError(f"Mode {args.mode} needs a strip (inline, --shapes or --file)")
    return tuple(strips)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zz_strips",
        description="ZZ polynomials and Clar covers of regular m-tier benzenoid strips")

    # positional arguments
    parser.add_argument('mode',
        choices=MODES,
        help='pipeline stage to run')
    parser.add_argument('strip',
        nargs='*',
        help='inline strip, e.g. "WWRNN 3" or "M 2 2"')

    # options
    parser.add_argument(
        '-s', '--shapes',
        type=str,
        help='fragment shape letters, e.g. WWRNN')
    parser.add_argument(
        '-n', '--length',
        type=int,
        help='strip length n')
    parser.add_argument(
        '--n-range',
        type=str,
        help='evaluate for every n in A..B, e.g. 1..8')
    parser.add_argument(
        '--file',
        type=Path,
        help='file with one strip per line (text or JSON)')
    parser.add_argument(
        '-f', '--format',
        dest='fmt',
        choices=FORMATS,
        default='text',
        help='output format (default: text)')
    parser.add_argument(
        '-t', '--tiers',
        type=positive_int,
        default=4,
        help='catalog: largest number of tiers (default: 4)')
    parser.add_argument(
        '--no-dedup',
        action='store_true',
        help='catalog: keep mirror and rotation images')
    parser.add_argument(
        '--include-non-kekulean',
        action='store_true',
        help='catalog: also list families with a negative interface order')
    parser.add_argument(
        '--export',
        type=Path,
        help='catalog: directory for the CSV export')
    parser.add_argument(
        '-w', '--workers',
        type=positive_int,
        help='catalog worker processes (default: ZZ_WORKERS or CPU count)')
    parser.add_argument(
        '--max-vertices',
        type=positive_int,
        help='oracle guard on graph size (default: ZZ_MAX_VERTICES)')
    parser.add_argument(
        '--max-p',
        type=positive_int,
        help='subset enumeration guard on poset size (default: ZZ_GUARD_P)')
    parser.add_argument(
        '-v', '--verbose',
        action='store_true',
        help='debug logging')
    return parser


def config_from_args(args):
    return RunConfig(
        mode=args.mode,
        strips=resolve_strips(args),
        fmt=args.fmt,
        tiers=args.tiers,
        dedup=not args.no_dedup,
        include_non_kekulean=args.include_non_kekulean,
        workers=args.workers,
        max_vertices=args.max_vertices,
        guard_p=args.max_p,
        export_dir=args.export,
    )


def _emit(out, payload):
    out.write(json.dumps(payload, separators=(",", ":"), ensure_ascii=False) + "\n")


def _status(text, color):
    print(colored(text, color), file=sys.stderr)


def run_profile(config, out):
    for spec in config.strips:
        profile = interface_profile(spec)
        report = validate(spec)
        if config.fmt == "json":
            _emit(out, {"strip": spec.to_dict(), "sizes": list(profile.sizes),
                        "orders": list(profile.orders), "validation": report.to_dict()})
            continue
        state = "valid" if report.valid else "invalid"
        kekule = "kekulean" if report.is_kekulean else "non-kekulean"
        out.write(f"{spec}: sizes={list(profile.sizes)} orders={list(profile.orders)} {state} {kekule}\n")
        for problem in report.problems():
            out.write(f"  - {problem}\n")
    return EXIT_OK


def run_poset(config, out):
    for spec in config.strips:
        poset = build_poset(spec)
        labeling = natural_labeling(poset)
        if config.fmt == "dot":
            out.write(to_dot(poset, labeling))
        elif config.fmt == "json":
            payload = poset.to_dict()
            payload["labels"] = [labeling.label(e) for e in poset.elements]
            _emit(out, payload)
        else:
            out.write(f"{spec}: p={poset.size} covers={len(poset.covers)}\n")
            for a, b in poset.covers:
                out.write(f"  {a} < {b}\n")
            out.write("  labels: " + " ".join(f"{e}->{labeling.label(e)}" for e in labeling.order) + "\n")
    return EXIT_OK


def run_extensions(config, out):
    for spec in config.strips:
        poset = build_poset(spec)
        for record in extension_records(poset, natural_labeling(poset)):
            if config.fmt == "json":
                _emit(out, record.to_dict())
            else:
                out.write(record.to_line() + "\n")
    return EXIT_OK


def run_zz(config, out):
    many = len(config.strips) > 1
    for spec in config.strips:
        zz = zz_polynomial(spec)
        if config.fmt == "json":
            _emit(out, {"strip": spec.to_dict(), "zz": zz.summary()})
        elif config.fmt == "latex":
            text = sympy.latex(zz.to_sympy().as_expr())
            out.write((f"n={spec.n}: " if many else "") + text + "\n")
        else:
            out.write((f"n={spec.n}: " if many else "") + str(zz) + "\n")
    return EXIT_OK


def run_closed_form(config, out):
    seen = set()
    for spec in config.strips:
        if spec.shape_string in seen:
            continue
        seen.add(spec.shape_string)
        form = closed_form_or_zero(spec)
        if config.fmt == "json":
            _emit(out, {"shapes": form.shapes, "closed_form": form.to_dict()})
        elif config.fmt == "latex":
            out.write(form.to_latex() + "\n")
        else:
            out.write(form.to_text() + "\n")
    return EXIT_OK


def run_kekule(config, out):
    for spec in config.strips:
        for om, ka in enumerate_kekule(spec):
            payload = om.to_dict()
            payload.update(ka.to_dict())
            _emit(out, payload)
    return EXIT_OK


def run_clar(config, out):
    for spec in config.strips:
        for record in generate_clar_covers(spec):
            _emit(out, record.to_dict())
    return EXIT_OK


def run_oracle(config, out):
    status = EXIT_OK
    for spec in config.strips:
        report = oracle_report(spec, max_vertices=config.max_vertices, guard_p=config.guard_p)
        if config.fmt == "json":
            _emit(out, report.to_dict())
        else:
            out.write(f"{spec}\n")
            out.write(f"  ZZ (poset):         {report.zz_poset}\n")
            out.write(f"  ZZ (Clar covers):   {report.zz_covers}\n")
            out.write(f"  ZZ (sextets):       {report.zz_matchings}\n")
            out.write(f"  perfect matchings:  {report.matching_count}\n")
            if report.diff:
                out.write("DIFF\n")
                for line in report.diff:
                    out.write(f"  {line}\n")
        if report.agrees:
            _status(f"(OK) {spec}: all ZZ computations agree", "green")
        else:
            _status(f"(DIFF) {spec}: {len(report.diff)} disagreement(s)", "red")
            status = EXIT_DIFF
    return status


def run_catalog(config, out):
    entries = catalog_entries(config.tiers, dedup=config.dedup,
                              include_non_kekulean=config.include_non_kekulean, workers=config.workers)
    for entry in entries:
        if config.fmt == "json":
            _emit(out, entry.to_dict())
        elif config.fmt == "latex":
            out.write(f"{entry.shapes}: {entry.form.to_latex()}\n")
        else:
            out.write(f"{entry.shapes:<{config.tiers + 2}} p={entry.form.p:<3} {entry.form.to_text()}\n")
    if config.export_dir is not None:
        path = export_catalog_csv(entries, config.tiers, config.export_dir)
        _status(f"(OK) catalog saved to {path}", "green")
    return EXIT_OK


RUNNERS = {
    "profile": run_profile,
    "poset": run_poset,
    "extensions": run_extensions,
    "zz": run_zz,
    "closed-form": run_closed_form,
    "kekule": run_kekule,
    "clar": run_clar,
    "oracle": run_oracle,
    "catalog": run_catalog,
}


def run(config, out=None):
    """
    Dispatches one RunConfig.

    Returns:
        int: 0 on success, 1 if the oracle disagrees, 2 on invalid input, 3 if a guard was exceeded.
    """
    out = out or sys.stdout
    try:
        return RUNNERS[config.mode](config, out)
    except GuardExceededError as e:
        logger.error(str(e))
        _status(f"(GUARD) {e}", "yellow")
        return EXIT_GUARD
    except ZZError as e:
        logger.error(str(e))
        _status(f"(ERROR) {e}", "red")
        return EXIT_INVALID


def main(argv=None):
    args = build_parser().parse_args(argv)
    setup_logging("DEBUG" if args.verbose else None)
    try:
        config = config_from_args(args)
    except (ZZError, OSError) as e:
        logger.error(str(e))
        _status(f"(ERROR) {e}", "red")
        return EXIT_INVALID
    return run(config)
