#!/usr/bin/env python3
"""Tabulate products of dual quasi-Schur functions against classical data.

For each pair of partitions (lambda, mu) up to a weight bound the script
prints the classical Littlewood-Richardson numbers c^nu_{lambda,mu}
next to the sums of noncommutative coefficients C^gamma_{alpha,beta}
taken over all rearrangements: alpha of lambda, gamma of nu, with beta
fixed per row.  The two columns must agree — the noncommutative
coefficients refine the classical ones — and the table shows how many
distinct gamma support each nu.

Usage:
    python3 scripts/tabulate_factorization.py --max-weight 5
    python3 scripts/tabulate_factorization.py --alpha 2,1 --beta 1,1
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from qschur.compositions import partitions_of, underlying_partition
from qschur.nsym import classical_lr, product_nc_schur


@dataclass(frozen=True)
class TableConfig:
    max_weight: int


def parse_composition(text: str) -> tuple[int, ...]:
    if text in ("", "empty"):
        return ()
    return tuple(int(part) for part in text.split(","))


def show_pair(alpha: tuple[int, ...], beta: tuple[int, ...]) -> int:
    product = product_nc_schur(alpha, beta)
    lam = underlying_partition(alpha)
    mu = underlying_partition(beta)
    print(f"S*{list(alpha)} . S*{list(beta)}   (shapes {list(lam)}, {list(mu)})")
    by_partition: dict[tuple[int, ...], list] = {}
    for gamma, coeff in sorted(product.terms.items()):
        by_partition.setdefault(underlying_partition(gamma), []).append(
            (gamma, coeff)
        )
    for nu in sorted(by_partition):
        spread = by_partition[nu]
        total = sum(c for _, c in spread)
        classical = classical_lr(lam, mu, nu)
        marker = "ok" if total == classical else "MISMATCH"
        pieces = " + ".join(f"{c}*C{list(g)}" for g, c in spread)
        print(f"  nu={list(nu)}: {pieces} = {total}   classical {classical} [{marker}]")
        if total != classical:
            return 1
    return 0


def tabulate(config: TableConfig) -> int:
    status = 0
    for total in range(1, config.max_weight + 1):
        for a in range(1, total):
            for lam in partitions_of(a):
                for mu in partitions_of(total - a):
                    status |= show_pair(lam, mu)
                    print()
    return status


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-weight", type=int, default=5,
                        help="largest |lambda|+|mu| to tabulate (default 5)")
    parser.add_argument("--alpha", type=parse_composition, default=None,
                        help="show a single product for this left index")
    parser.add_argument("--beta", type=parse_composition, default=None,
                        help="right index for --alpha")
    args = parser.parse_args(argv)
    if (args.alpha is None) != (args.beta is None):
        parser.error("--alpha and --beta must be given together")
    if args.alpha is not None:
        return show_pair(args.alpha, args.beta)
    return tabulate(TableConfig(args.max_weight))


if __name__ == "__main__":
    raise SystemExit(main())
