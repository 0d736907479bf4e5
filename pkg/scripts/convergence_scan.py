#!/usr/bin/env python3
"""Tabulate the elasticity of k*s against its k -> infinity limit.

Writes one CSV row per k with the exact elasticity of k*s, the limit value,
and the exact gap between them, e.g.:

    python3 scripts/convergence_scan.py --monoid '0,1;1,2;3,5' \
        --vector 7,13 --k-max 200 --out scan.csv

Everything is exact rational arithmetic; the CSV contains no floats.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from affmon.asymptotics import SCAN_CSV_HEADER, rho_limit, scan_multiples
from affmon.cli import parse_monoid, parse_vector
from affmon.monoids import canonical_coords, canonicalize


@dataclass(frozen=True)
class ScanConfig:
    monoid_text: str
    vector_text: str
    k_max: int
    out: str  # "-" for stdout


def parse_args(argv: list[str] | None = None) -> ScanConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--monoid", required=True, help="generators, e.g. '0,1;1,2;3,5'")
    parser.add_argument("--vector", required=True, help="member to scale, e.g. '7,13'")
    parser.add_argument("--k-max", type=int, default=100, help="scan k = 1..N")
    parser.add_argument("--out", default="-", help="CSV path, or - for stdout")
    args = parser.parse_args(argv)
    return ScanConfig(
        monoid_text=args.monoid,
        vector_text=args.vector,
        k_max=args.k_max,
        out=args.out,
    )


def main(argv: list[str] | None = None) -> int:
    config = parse_args(argv)
    m = canonicalize(parse_monoid(config.monoid_text))
    cs = canonical_coords(m, parse_vector(config.vector_text))
    if cs is None:
        print("vector lies outside the monoid's cone", file=sys.stderr)
        return 1
    rows = scan_multiples(m, cs, config.k_max)
    lines = [SCAN_CSV_HEADER] + [row.to_csv_row() for row in rows]
    if config.out == "-":
        print("\n".join(lines))
    else:
        with open(config.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    _, limit = rho_limit(m, cs)
    settled = next((row.k for row in rows if row.gap.num == 0), None)
    print(
        f"scanned k=1..{config.k_max}: limit {limit}, "
        f"first exact hit at k={settled}, final gap {rows[-1].gap}",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
