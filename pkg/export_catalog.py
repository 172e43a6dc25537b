#!/usr/bin/env python3

# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Export the invariant record of every catalog variety to one JSON file.

Each variety is computed in its own worker process; the output is keyed by
catalog name and sorted, so reruns produce identical files.
"""

import argparse
import json
import multiprocessing as mp
import sys

from tqdm import tqdm

from regbound import __version__
from regbound.catalog import build_spec, catalog_names, cross_check, degree_triple_check, genus_check, invariants
from regbound.console import fail, say, success, warn
from regbound.errors import RegboundError


def export_variety(name):
    """Helper function for multiprocessing - returns tuple of (name, record, error)."""
    try:
        spec = build_spec(name)
        record = invariants(spec).to_json()
        issues = []
        for validator in (degree_triple_check, genus_check, cross_check):
            _, found = validator(spec)
            issues.extend(found)
        record["issues"] = issues
        return name, record, None
    except RegboundError as e:
        return name, None, str(e)


def export_catalog(names, num_workers=4):
    """Compute every record in parallel. Returns (records, errors)."""
    say(f"Processing {len(names)} varieties with {num_workers} workers...")
    with mp.Pool(num_workers) as pool:
        results = list(tqdm(pool.imap(export_variety, names), total=len(names),
                            desc="Exporting varieties", file=sys.stderr))

    records, errors = {}, {}
    for name, record, error in results:
        if error is None:
            records[name] = record
        else:
            errors[name] = error
    return records, errors


def main():
    parser = argparse.ArgumentParser(description="Export invariants of every built-in variety")
    parser.add_argument(
        "--output",
        default="catalog_invariants.json",
        help="Output JSON file (default: catalog_invariants.json)"
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=4,
        help="Number of worker processes (default: 4)"
    )
    parser.add_argument(
        "--only",
        nargs="+",
        default=None,
        help="Export only these catalog names"
    )

    args = parser.parse_args()

    names = args.only or catalog_names()
    unknown = sorted(set(names) - set(catalog_names()))
    if unknown:
        parser.error(f"unknown catalog names: {', '.join(unknown)}")

    records, errors = export_catalog(names, args.workers)

    with open(args.output, 'w', encoding='utf-8') as f:
        json.dump({"version": __version__, "varieties": records}, f, indent=2, sort_keys=True)

    success(f"Generated {args.output} with {len(records)} varieties")

    for name, record in sorted(records.items()):
        if record["issues"]:
            warn(f"{name}: {'; '.join(record['issues'])}")
    for name, error in sorted(errors.items()):
        fail(f"{name}: {error}")

    if errors:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
