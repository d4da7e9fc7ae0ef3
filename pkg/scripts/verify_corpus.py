#!/usr/bin/env python3
"""Run the identity battery over every corpus graph and group flavour.

Exits nonzero if any check fails anywhere; prints one summary line per
(graph, group) pair and every failing record in full.
"""

import argparse
import sys

from qcolour.corpus import CORPUS
from qcolour.graphio import GraphDocument
from qcolour.groups import group_from_name
from qcolour.verify import run_battery


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--groups", default="2,3,4,2x2,f4", help="comma-separated group specs")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tol", type=float, default=1e-7)
    ap.add_argument("--max-terms", type=float, default=1e8)
    ap.add_argument("--skip", default="petersen", help="comma-separated graphs to skip")
    args = ap.parse_args()

    skip = set(args.skip.split(",")) if args.skip else set()
    failures = 0
    for name, fx in CORPUS.items():
        if name in skip:
            continue
        doc = GraphDocument(fx.graph, None, fx.rotation, fx.pfaffian_compatible)
        for spec in args.groups.split(","):
            group = group_from_name(spec)
            records = run_battery(
                doc,
                group,
                tol=args.tol,
                max_terms=int(args.max_terms),
                seed=args.seed,
            )
            bad = [r for r in records if not r.passed]
            failures += len(bad)
            print(f"{name:12s} group={spec:4s} checks={len(records):3d} failures={len(bad)}")
            for rec in bad:
                print("  " + rec.to_json())
    print(f"total failures: {failures}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
