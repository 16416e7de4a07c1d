#!/usr/bin/env python3
"""Scan skew shapes for symmetric quasi-Schur functions.

Uniform shapes (every inner row equal in length to the outer row above
it, in the shifted alignment) are guaranteed to give symmetric,
Schur-positive skew functions.  This script sweeps all intervals in the
composition order up to a weight bound, confirms that guarantee case by
case, and reports any *non-uniform* shape whose skew function happens to
be symmetric anyway — none are known, and finding one would be news.

Usage:
    python3 scripts/scan_symmetric_shapes.py --max-degree 7
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from qschur.compositions import compositions_of, leq
from qschur.qsym import convert, is_symmetric, schur_expansion, skew_qs_schur
from qschur.tableaux import COMPOSITION, SkewShape


@dataclass(frozen=True)
class ScanConfig:
    max_degree: int
    show_expansions: bool


def interval_pairs(max_degree: int):
    for n in range(max_degree + 1):
        for gamma in compositions_of(n):
            for k in range(n + 1):
                for beta in compositions_of(k):
                    if leq(beta, gamma):
                        yield beta, gamma


def scan(config: ScanConfig) -> int:
    uniform = non_uniform = 0
    witnesses: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for beta, gamma in interval_pairs(config.max_degree):
        shape = SkewShape(COMPOSITION, gamma, beta)
        f = skew_qs_schur(gamma, beta)
        symmetric = is_symmetric(convert(f, "M"))
        if shape.is_uniform():
            uniform += 1
            if not symmetric:
                print(f"UNEXPECTED: uniform {gamma} // {beta} not symmetric")
                return 1
            expansion = schur_expansion(f)
            if any(c < 0 for c in expansion.terms.values()):
                print(f"UNEXPECTED: uniform {gamma} // {beta} not Schur-positive")
                return 1
            if config.show_expansions and sum(gamma) > sum(beta):
                terms = ", ".join(
                    f"{c}*s{list(lam)}" for lam, c in expansion.sorted_terms()
                )
                print(f"uniform {gamma} // {beta}: {terms}")
        else:
            non_uniform += 1
            if symmetric:
                witnesses.append((gamma, beta))
    print(f"weight <= {config.max_degree}: {uniform} uniform intervals, "
          f"all symmetric and Schur-positive")
    print(f"{non_uniform} non-uniform intervals scanned")
    if witnesses:
        print(f"{len(witnesses)} symmetric non-uniform shape(s) found:")
        for gamma, beta in witnesses:
            print(f"  {gamma} // {beta}")
    else:
        print("no symmetric non-uniform shapes found")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-degree", type=int, default=7,
                        help="largest outer weight to scan (default 7)")
    parser.add_argument("--show-expansions", action="store_true",
                        help="print the Schur expansion of each uniform shape")
    args = parser.parse_args(argv)
    config = ScanConfig(args.max_degree, args.show_expansions)
    return scan(config)


if __name__ == "__main__":
    raise SystemExit(main())
