#!/usr/bin/env python3
"""
Weak Fano Workbench - Exact Checks for Rank-2 Bundles on del Pezzo 3-folds
==========================================================================

Command-line entry point:
- Euler characteristics and Euler pairings of catalog bundles
- Anti-canonical intersection numbers on projectivizations
- Stability verdicts for 5-Kronecker representations read from JSON
- The full verification report

Usage:
    python main.py chi "Q(-1)" "E(0,4)"
    python main.py antik --degree 5 --c1 0 --c2 4
    python main.py quiver check rep.json
    python main.py report --format json
"""

import sys
import re
import json
import argparse
import logging
from typing import List, Optional

from rich.console import Console
from rich.table import Table

from src.bundles import (
    BundleClass,
    Catalog,
    chi,
    chi_pair,
    normalized_bundle,
    twist,
)
from src.config import WorkbenchConfig, load_config
from src.errors import (
    BundleSpecError,
    InconsistentChernDataError,
    RepresentationError,
    UnknownBundleError,
    WorkbenchError,
)
from src import fano, kronecker
from src.report import build_report

console = Console(stderr=True)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3

_E_SPEC = re.compile(
    r"^E\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)(?:\(\s*([+-]?\d+)\s*\))?$"
)
_RAW_SPEC = re.compile(r"^raw:\s*([+-]?\d+(?:\s*,\s*[+-]?\d+){3})$")

SPEC_HELP = """
Bundle specs:
  NAME or NAME(n)    catalog entry twisted by O(n): O, R, Q, Q^v, R^v,
                     I_l, omega; e.g. O(1), Q(-1), Q^v(1)
                     (R, Q and their duals need degree 5)
  E(c1,c2) or E(c1,c2)(n)
                     normalized rank-2 class, optionally twisted
  raw:r,c1,c2,c3     explicit rank and Chern classes
"""


def setup_logging(level: str = "WARNING", log_file: Optional[str] = None):
    """Setup logging configuration; stdout stays reserved for results."""
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def parse_bundle_spec(spec: str, catalog: Catalog) -> BundleClass:
    """
    Read a bundle spec.

    Args:
        spec: See SPEC_HELP.
        catalog: Catalog for named entries.

    Returns:
        The bundle class on the catalog's threefold.

    Raises:
        BundleSpecError: The spec cannot be parsed.
    """
    text = spec.strip()
    match = _E_SPEC.match(text)
    if match:
        c1, c2, shift = match.groups()
        bundle = normalized_bundle(int(c1), int(c2), catalog.ring)
        return twist(bundle, int(shift)) if shift else bundle
    match = _RAW_SPEC.match(text)
    if match:
        r, c1, c2, c3 = (int(x) for x in match.group(1).split(","))
        return BundleClass(r, c1, c2, c3, catalog.ring, name=text)
    try:
        return catalog.get(text)
    except UnknownBundleError as e:
        raise BundleSpecError(f"cannot parse bundle spec {spec!r}: {e}")


def cmd_chi(args, config: WorkbenchConfig) -> int:
    degree = args.degree if args.degree is not None else config.degree
    catalog = Catalog(degree=degree)
    first = parse_bundle_spec(args.bundle, catalog)
    if args.other:
        value = chi_pair(first, parse_bundle_spec(args.other, catalog))
    else:
        value = chi(first)
    print(value)
    return EXIT_OK


def cmd_antik(args, config: WorkbenchConfig) -> int:
    degree = args.degree if args.degree is not None else config.degree
    if not 1 <= degree <= 5:
        raise BundleSpecError(f"degree must be in 1..5, got {degree}")
    if args.c1 not in fano.NORMALIZED_C1:
        raise BundleSpecError(f"c1 must be 0 or -1, got {args.c1}")
    if args.k3:
        value = fano.anti_k3_xi(degree, args.c1, args.c2, args.xi_shift)
    else:
        value = fano.anti_k4(degree, args.c1, args.c2)
    print(value)
    return EXIT_OK


def cmd_quiver(args, config: WorkbenchConfig) -> int:
    rep = kronecker.load_representation(args.file)
    verdict = kronecker.stability(rep)
    result = {
        "semistable": verdict.semistable,
        "stable": verdict.stable,
        "quadric_rank": kronecker.quadric_rank(rep),
        "witnesses": [
            {"sub": list(w.sub), "certificate": w.certificate}
            for w in verdict.witnesses
        ],
    }
    print(json.dumps(result, indent=2))
    return EXIT_OK


def show_report_table(report):
    """Render the report as a rich table on stdout."""
    table = Table(title=f"Verification report (seed {report.seed})")
    table.add_column("Claim", style="cyan", no_wrap=True)
    table.add_column("Verdict")
    table.add_column("Provenance", style="magenta")
    table.add_column("Computed")
    table.add_column("Expected")
    for row in report.rows:
        d = row.as_dict()
        verdict = "[green]pass[/green]" if row.passed else "[red]fail[/red]"
        table.add_row(row.claim_id, verdict, row.provenance,
                      json.dumps(d["computed"]), json.dumps(d["expected"]))
    Console().print(table)


def cmd_report(args, config: WorkbenchConfig) -> int:
    report = build_report(config, fault=args.inject_fault)
    if args.format == "json":
        print(report.to_json())
    elif args.format == "tsv":
        sys.stdout.write(report.to_tsv())
    else:
        show_report_table(report)
    if not report.all_passed:
        console.print(f"[bold red]{report.failed} claim(s) failed[/bold red]")
        return EXIT_VERIFICATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Exact workbench for rank-2 weak Fano bundles on "
                    "del Pezzo threefolds",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=SPEC_HELP,
    )
    parser.add_argument('--verbose', action='store_true',
                        help='Enable verbose logging')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('chi', help='Euler characteristic or pairing',
                       formatter_class=argparse.RawDescriptionHelpFormatter,
                       epilog=SPEC_HELP)
    p.add_argument('bundle', help='bundle spec')
    p.add_argument('other', nargs='?', help='second bundle spec for chi(a, b)')
    p.add_argument('--degree', type=int, help='degree d of the threefold')
    p.set_defaults(handler=cmd_chi)

    p = sub.add_parser('antik', help='anti-canonical intersection numbers')
    p.add_argument('--degree', type=int, help='degree d of the threefold')
    p.add_argument('--c1', type=int, required=True)
    p.add_argument('--c2', type=int, required=True)
    p.add_argument('--k3', action='store_true',
                   help='compute (-K)^3 (xi + t h) instead of (-K)^4')
    p.add_argument('--xi-shift', type=int, default=0, help='t in xi + t h')
    p.set_defaults(handler=cmd_antik)

    p = sub.add_parser('quiver', help='Kronecker representation checks')
    p.add_argument('action', choices=['check'])
    p.add_argument('file', help='JSON file {"maps": [...]}')
    p.set_defaults(handler=cmd_quiver)

    p = sub.add_parser('report', help='full verification report')
    p.add_argument('--format', choices=['json', 'tsv', 'table'],
                   default='json')
    p.add_argument('--inject-fault', metavar='KEY=VALUE',
                   help='corrupt the catalog, e.g. catalog.c2R=3')
    p.set_defaults(handler=cmd_report)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the workbench."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        config = load_config()
    except WorkbenchError as e:
        console.print(f"[bold red]Configuration error: {e}[/bold red]")
        return EXIT_USAGE
    setup_logging("DEBUG" if args.verbose else config.log_level,
                  config.log_file)

    try:
        return args.handler(args, config)
    except (BundleSpecError, UnknownBundleError, RepresentationError,
            ValueError) as e:
        console.print(f"[bold red]Error: {e}[/bold red]")
        logging.error(f"Usage error: {e}")
        return EXIT_USAGE
    except InconsistentChernDataError as e:
        console.print(f"[bold red]Inconsistent Chern data: {e}[/bold red]")
        logging.error(f"Inconsistent Chern data: {e}")
        return EXIT_INCONSISTENT
    except WorkbenchError as e:
        console.print(f"[bold red]Internal error: {e}[/bold red]")
        logging.error(f"Internal error: {e}")
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
