# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Command-line front end.

Exit codes: 0 on success, 1 on a domain error (message printed verbatim),
2 on a usage error. Reports go to stdout, or to --out; diagnostics go to
stderr.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import re
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from regbound import __version__, catalog, liaison, quadrics
from regbound.betti import hilbert_function, koszul, regularity_of_table, render_betti
from regbound.bounds import (
    Setting,
    bound_chain,
    extremal_degrees,
    global_threefold_bound,
    normality_bound_holds,
    normality_scan,
    strictly_below_from,
)
from regbound.chow import T, chern_of_omega, chern_twist, dependency_locus_degree
from regbound.console import fail, say, success, warn
from regbound.errors import DomainError, RegboundError
from regbound.reports import FORMATS, OutputRecord, cell_json, render
from regbound.tables import CohTable

MAX_T = 20
RANGE_VALUE = re.compile(r"-?\d+\.\.-?\d+")


def twist_range(text: str) -> Tuple[int, int]:
    """Parse LO..HI."""
    try:
        lo, hi = (int(part) for part in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like LO..HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def join_range_values(argv: Sequence[str]) -> List[str]:
    """Rewrite `--range -5..10` as `--range=-5..10` so argparse does not read -5..10 as an option."""
    joined = []
    tokens = iter(argv)
    for token in tokens:
        if token == "--range":
            value = next(tokens, None)
            if value is not None and RANGE_VALUE.fullmatch(value):
                joined.append(f"--range={value}")
                continue
            joined.append(token)
            if value is not None:
                joined.append(value)
            continue
        joined.append(token)
    return joined


def family_parameter(text: str) -> int:
    try:
        t = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"t must be an integer, got {text!r}")
    if not 0 <= t <= MAX_T:
        raise argparse.ArgumentTypeError(f"t must lie in [0, {MAX_T}], got {t}")
    return t


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default='table',
                        help='Output format (default: table)')
    common.add_argument('--out', type=str, default=None,
                        help='Write the report to this file instead of stdout')
    common.add_argument('--verbose', action='store_true',
                        help='Print progress and diagnostics to stderr')
    common.add_argument('--workers', type=int, default=4,
                        help='Threads used to evaluate table cells (default: 4)')
    return common


def _variety_flags(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument('--variety', required=required,
                        help='Catalog name (see `catalog list`)')
    parser.add_argument('--t', type=family_parameter, default=None,
                        help=f'Palatini family parameter, 0..{MAX_T}')
    parser.add_argument('--degrees', type=int, nargs='+', default=None,
                        help='Degrees of a complete intersection entry')
    parser.add_argument('--class', dest='divisor_class', type=int, nargs='+', default=None,
                        help='Divisor class of a quadric entry: a b for rank 4, s for rank 3')


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog='regbound',
                                     description='Exact cohomology and regularity of projective varieties.')
    parser.add_argument('--version', action='version', version=f'regbound {__version__}')
    commands = parser.add_subparsers(dest='command', required=True)

    p = commands.add_parser('catalog', parents=[common], help='List or show built-in varieties')
    p.add_argument('action', choices=['list', 'show'])
    p.add_argument('name', nargs='?', default=None, help='Catalog name for `show`')
    p.add_argument('--t', type=family_parameter, default=None,
                   help=f'Palatini family parameter, 0..{MAX_T}')
    p.set_defaults(handler=cmd_catalog)

    p = commands.add_parser('cohomology', parents=[common], help='Cohomology table of an ideal sheaf')
    _variety_flags(p)
    p.add_argument('--i', type=int, default=None, help='Single cohomological index (default: 0..dim+1)')
    p.add_argument('--range', type=twist_range, default=(-5, 10), help='Twists LO..HI (default: -5..10)')
    p.add_argument('--source', choices=['auto', 'betti', 'sequence'], default='auto',
                   help='Which presentation to solve (default: auto)')
    p.set_defaults(handler=cmd_cohomology)

    p = commands.add_parser('regularity', parents=[common], help='Castelnuovo-Mumford regularity scan')
    _variety_flags(p)
    p.set_defaults(handler=cmd_regularity)

    p = commands.add_parser('normality', parents=[common], help='k-normality by twist')
    _variety_flags(p)
    p.add_argument('--range', type=twist_range, default=(0, 10), help='Twists LO..HI (default: 0..10)')
    p.set_defaults(handler=cmd_normality)

    p = commands.add_parser('chern', parents=[common], help='Chern classes of Omega^1(twist + twist_t * t)')
    p.add_argument('--n', type=int, default=5, help='Projective space dimension (default: 5)')
    p.add_argument('--twist', type=int, default=2, help='Constant part of the twist (default: 2)')
    p.add_argument('--twist_t', type=int, default=1, help='Coefficient of t in the twist (default: 1)')
    p.add_argument('--t', type=family_parameter, default=None, help='Specialize the family at this t')
    p.set_defaults(handler=cmd_chern)

    p = commands.add_parser('betti', parents=[common], help='Betti table of a variety or a complete intersection')
    _variety_flags(p, required=False)
    p.add_argument('--N', type=int, default=None, help='Ambient dimension for --degrees without --variety')
    p.set_defaults(handler=cmd_betti)

    p = commands.add_parser('quadric', parents=[common], help='Divisors on rank-3 and rank-4 quadric cones')
    p.add_argument('--n', type=int, required=True, help='Dimension of the divisor')
    p.add_argument('--rank', type=int, choices=[3, 4], required=True, help='Rank of the quadric')
    p.add_argument('--class', dest='divisor_class', type=int, nargs='+', required=True,
                   help='a b for rank 4, s for rank 3')
    p.add_argument('--range', type=twist_range, default=(0, 8), help='Twists LO..HI (default: 0..8)')
    p.set_defaults(handler=cmd_quadric)

    p = commands.add_parser('liaison-check', parents=[common], help='Check the liaison duality of a linked pair')
    p.add_argument('--x1', required=True, help='Catalog name of the first variety')
    p.add_argument('--x2', required=True, help='Catalog name of the second variety')
    p.add_argument('--degrees', type=int, nargs='+', required=True, help='Degrees of the linking complete intersection')
    p.set_defaults(handler=cmd_liaison)

    p = commands.add_parser('verify-bound', parents=[common], help='Derive the reg <= d - 3 bound chain')
    p.add_argument('--setting', choices=[s.value for s in Setting], required=True)
    p.set_defaults(handler=cmd_verify_bound)
    return parser


def _spec(args):
    return catalog.build_spec(args.variety, t=args.t, degrees=args.degrees, **{"class": args.divisor_class})


def evaluate_cells(table: CohTable, rows: Sequence[int], ks: Sequence[int], workers: int, verbose: bool) -> List[Dict]:
    """Evaluate (i, k) cells concurrently; the output order is rows-major regardless of completion order."""
    pairs = [(i, k) for i in rows for k in ks]
    with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        values = list(tqdm(executor.map(lambda ik: table.value(*ik), pairs), total=len(pairs),
                           desc="Evaluating cells", disable=not verbose, file=sys.stderr))
    return [cell_json(i, k, v) for (i, k), v in zip(pairs, values)]


def cmd_catalog(args) -> OutputRecord:
    if args.action == 'list':
        entries = catalog.load_catalog()
        return OutputRecord('catalog list', {}, {"varieties": [entries[name].to_json() for name in sorted(entries)]})
    if args.name is None:
        raise DomainError("`catalog show` needs a variety name")
    spec = catalog.build_spec(args.name, t=args.t)
    say(f"Computing invariants of {spec.label}", verbose=args.verbose)
    results = catalog.invariants(spec).to_json()
    ok, issues = catalog.degree_triple_check(spec)
    results["degree_check"] = {"ok": ok, "issues": issues}
    ok, issues = catalog.genus_check(spec)
    results["genus_check"] = {"ok": ok, "issues": issues}
    for issue in issues:
        warn(issue)
    return OutputRecord('catalog show', {"name": args.name, "t": args.t}, results)


def cmd_cohomology(args) -> OutputRecord:
    spec = _spec(args)
    table = catalog.ideal_table(spec, args.source)
    rows = [args.i] if args.i is not None else list(range(spec.dim + 2))
    lo, hi = args.range
    cells = evaluate_cells(table, rows, range(lo, hi + 1), args.workers, args.verbose)
    if any("interval" in c for c in cells):
        say("some cells are only known as intervals", verbose=args.verbose)
    inputs = {"variety": args.variety, "t": args.t, "degrees": args.degrees, "class": args.divisor_class, "i": args.i,
              "range": f"{lo}..{hi}", "source": args.source}
    return OutputRecord('cohomology', inputs, {"variety": spec.label, "cells": cells})


def cmd_regularity(args) -> OutputRecord:
    spec = _spec(args)
    result = catalog.regularity(spec).to_json()
    result["variety"] = spec.label
    inputs = {"variety": args.variety, "t": args.t, "degrees": args.degrees, "class": args.divisor_class}
    return OutputRecord('regularity', inputs, result)


def cmd_normality(args) -> OutputRecord:
    spec = _spec(args)
    lo, hi = args.range
    rows = normality_scan(catalog.ideal_table(spec), range(lo, hi + 1))
    scan = catalog.regularity(spec)
    results = {
        "variety": spec.label,
        "rows": [r.to_json() for r in rows],
        "first_normal_from": scan.first_normal_from,
    }
    if spec.N == 5 and spec.dim == 3:
        results["normal_from_d_minus_4"] = normality_bound_holds(scan, spec.degree)
    inputs = {"variety": args.variety, "t": args.t, "degrees": args.degrees, "class": args.divisor_class,
              "range": f"{lo}..{hi}"}
    return OutputRecord('normality', inputs, results)


def cmd_chern(args) -> OutputRecord:
    data = chern_twist(chern_of_omega(args.n), args.twist + args.twist_t * T)
    if args.t is not None:
        data = data.specialize(args.t)
    results = {
        "bundle": f"Omega^1_P{args.n}({args.twist + args.twist_t * T})",
        "rank": data.rank,
        "total": data.total.render(),
        "classes": data.total.to_json(),
    }
    if args.n >= 2:
        results["dependency_locus_degree"] = str(dependency_locus_degree(data))
    inputs = {"n": args.n, "twist": args.twist, "twist_t": args.twist_t, "t": args.t}
    return OutputRecord('chern', inputs, results)


def cmd_betti(args) -> OutputRecord:
    if args.variety is not None:
        spec = _spec(args)
        betti = catalog.presentation(spec).betti
        if betti is None:
            raise DomainError(f"{spec.label} has no Betti table; it is presented by a sequence only")
        label = spec.label
    elif args.degrees is not None and args.N is not None:
        betti = koszul(args.N, args.degrees)
        label = f"CI{tuple(args.degrees)} in P^{args.N}"
    else:
        raise DomainError("betti needs --variety, or --N with --degrees")
    reg = regularity_of_table(betti)
    results = {
        "variety": label,
        "table": betti.to_json(),
        "diagram": render_betti(betti),
        "reg": reg,
        "hilbert_function": {str(k): hilbert_function(betti, k) for k in range(reg + 4)},
    }
    inputs = {"variety": args.variety, "t": args.t, "degrees": args.degrees, "class": args.divisor_class, "N": args.N}
    return OutputRecord('betti', inputs, results)


def cmd_quadric(args) -> OutputRecord:
    spec = quadrics.QuadricDivisorSpec(args.n, args.rank, tuple(args.divisor_class))
    lo, hi = args.range
    series = quadrics.SeriesExpr(spec).table()
    results = {
        "quadric": spec.describe(),
        "degree": spec.degree,
        "classification": quadrics.classify(spec).to_json(),
        "depth_at_vertex": quadrics.depth_at_vertex(spec),
        "vertex_in_x": quadrics.vertex_containment(spec),
        "cells": [
            cell_json(i, k, series.value(i, k))
            for i in (0, 1) for k in range(lo, hi + 1)
        ],
    }
    try:
        resolution = quadrics.ideal_resolution(spec)
    except DomainError as e:
        warn(f"no resolution: {e}")
        results["resolution_note"] = str(e)
    else:
        results["resolution"] = resolution.to_json()
        results["diagram"] = render_betti(resolution)
        results["reg"] = regularity_of_table(resolution)
    inputs = {"n": args.n, "rank": args.rank, "class": list(args.divisor_class), "range": f"{lo}..{hi}"}
    return OutputRecord('quadric', inputs, results)


def cmd_liaison(args) -> OutputRecord:
    d = sum(args.degrees)
    sides = []
    for name in (args.x1, args.x2):
        spec = catalog.build_spec(name)
        sides.append(liaison.deficiency_modules(catalog.ideal_table(spec), spec.dim, d))
    ok, witnesses = liaison.duality_check(*sides)
    if ok:
        success("liaison duality holds", verbose=args.verbose)
    results = {
        "holds": ok,
        "witnesses": [{"i": i, "k": k} for i, k in witnesses],
        "x1": sides[0].to_json(),
        "x2": sides[1].to_json(),
    }
    return OutputRecord('liaison-check', {"x1": args.x1, "x2": args.x2, "degrees": args.degrees}, results)


def cmd_verify_bound(args) -> OutputRecord:
    chain = bound_chain(args.setting)
    results = chain.to_json()
    axioms = results.pop("axioms")
    if chain.setting is Setting.THREEFOLD_P5:
        results["branches"] = [{"name": b.name, "bound": str(b.bound)} for b in global_threefold_bound()]
        results["extremal_degrees"] = extremal_degrees()
        results["below_d_minus_1_from_5"] = strictly_below_from(5)
    return OutputRecord('verify-bound', {"setting": args.setting}, results, axioms)


def emit(text: str, out: Optional[str], verbose: bool) -> None:
    if out is None:
        print(text)
        return
    with open(out, 'w', encoding='utf-8') as f:
        f.write(text + "\n")
    say(f"Report written to {out}", verbose=verbose)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(join_range_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        record = args.handler(args)
        emit(render(record, args.format), args.out, args.verbose)
    except RegboundError as e:
        fail(str(e))
        return 1
    except OSError as e:
        fail(f"cannot write report: {e}")
        return 1
    return 0


def main() -> None:
    sys.exit(run())
