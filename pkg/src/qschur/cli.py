"""Command-line interface.

Compositions are written as comma-separated parts (``1,4,3``); the empty
composition is the literal ``empty``.  Tableaux travel as JSON files in the
format produced by :func:`qschur.tableaux.to_json_dict`.  Output is JSON by
default; commands whose result is a single graded element also accept
``--format tsv`` and then emit one ``index<TAB>coefficient`` row per term.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .applications import (
    chi_nc,
    descent_pieri_K,
    pr_product,
    qs_rs,
)
from .compositions import covers, interval_chains, leq
from .nsym import lr_coeff, pieri, product_nc_schur, strip_report
from .qsym import (
    TruncatedPolynomial,
    convert,
    element_to_json,
    qs_schur,
    skew_qs_schur,
    to_polynomial,
)
from .tableaux import (
    COMPOSITION,
    PARTITION,
    SkewShape,
    enumerate_semistandard,
    enumerate_standard,
    tableau_from_json,
    to_json_dict,
)
from .transforms import (
    pack_columns,
    pack_columns_skew,
    rect,
    rsk,
    unpack_columns,
    unpack_columns_skew,
)
from .verify import DEFAULT_SEED, SUITES, default_jobs, run_suite


def parse_composition(text: str) -> tuple[int, ...]:
    if text == "empty":
        return ()
    parts = []
    for token in text.split(","):
        token = token.strip()
        if not token.isdigit() or int(token) < 1:
            raise argparse.ArgumentTypeError(
                f"composition part {token!r} is not a positive integer"
            )
        parts.append(int(token))
    return tuple(parts)


def parse_word(text: str) -> tuple[int, ...]:
    if text == "empty":
        return ()
    letters = []
    for token in text.split(","):
        token = token.strip()
        if not token.isdigit() or int(token) < 1:
            raise argparse.ArgumentTypeError(
                f"letter {token!r} is not a positive integer"
            )
        letters.append(int(token))
    return tuple(letters)


def load_tableau(path: str):
    with open(path) as handle:
        return tableau_from_json(json.load(handle))


def emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def index_label(index: tuple) -> str:
    return ",".join(str(p) for p in index) if index else "empty"


def emit_element(element, fmt: str) -> None:
    if fmt == "tsv":
        for index, coeff in element.sorted_terms():
            print(f"{index_label(index)}\t{coeff}")
    else:
        emit(element_to_json(element))


def poly_json(p: TruncatedPolynomial) -> dict:
    key = "exponents" if p.commutative else "word"
    return {
        "m": p.m,
        "commutative": p.commutative,
        "terms": [
            {key: list(idx), "coeff": coeff} for idx, coeff in p.sorted_terms()
        ],
    }


def step_json(step) -> dict:
    return {"kind": step.kind, "row": step.row, "column": step.column}


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "tsv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qschur", description="quasisymmetric Schur function toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", help="structure constant of a dual Schur product")
    p.add_argument("--alpha", type=parse_composition, required=True)
    p.add_argument("--beta", type=parse_composition, required=True)
    p.add_argument("--gamma", type=parse_composition, default=None)
    _add_format(p)

    p = sub.add_parser("product", help="expand a product of dual Schur functions")
    p.add_argument("--alpha", type=parse_composition, required=True)
    p.add_argument("--beta", type=parse_composition, required=True)
    _add_format(p)

    p = sub.add_parser("skew", help="expand a skew quasisymmetric Schur function")
    p.add_argument("--outer", type=parse_composition, required=True)
    p.add_argument("--inner", type=parse_composition, default=())
    p.add_argument("--basis", choices=("M", "L", "S"), default="M")
    _add_format(p)

    p = sub.add_parser("enumerate", help="list tableaux or saturated chains")
    p.add_argument(
        "what", choices=("sct", "ssct", "srt", "chains"), help="family to list"
    )
    p.add_argument("--outer", type=parse_composition, required=True)
    p.add_argument("--inner", type=parse_composition, default=())
    p.add_argument("--max-entry", type=int, default=None)

    p = sub.add_parser("poset", help="composition poset queries")
    poset_sub = p.add_subparsers(dest="poset_command", required=True)
    q = poset_sub.add_parser("covers", help="covers above and below a composition")
    q.add_argument("--comp", type=parse_composition, required=True)
    q = poset_sub.add_parser("leq", help="compare two compositions")
    q.add_argument("--beta", type=parse_composition, required=True)
    q.add_argument("--gamma", type=parse_composition, required=True)
    q = poset_sub.add_parser("interval", help="saturated chains in an interval")
    q.add_argument("--beta", type=parse_composition, required=True)
    q.add_argument("--gamma", type=parse_composition, required=True)

    p = sub.add_parser("rect", help="rectify a skew composition tableau")
    p.add_argument("--tableau", required=True, help="path to a tableau JSON file")
    p.add_argument("--cross-check", action="store_true")

    p = sub.add_parser("rsk", help="insertion and recording tableaux of a word")
    p.add_argument("--word", type=parse_word, required=True)

    p = sub.add_parser("rho", help="column-sorting bijection and its inverse")
    p.add_argument("--tableau", required=True, help="path to a tableau JSON file")
    p.add_argument("--inverse", action="store_true")
    p.add_argument(
        "--beta",
        type=parse_composition,
        default=None,
        help="inner composition for the inverse skew map",
    )

    p = sub.add_parser("pieri", help="multiply by a single row or column")
    p.add_argument("--kind", choices=("row", "column"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--beta", type=parse_composition, required=True)
    p.add_argument("--diagnostic", action="store_true")
    _add_format(p)

    p = sub.add_parser("pr-product", help="product of two standard reverse tableaux")
    p.add_argument("--t1", required=True, help="path to a tableau JSON file")
    p.add_argument("--t2", required=True, help="path to a tableau JSON file")

    p = sub.add_parser("ncqsym", help="noncommutative analogues")
    nc_sub = p.add_subparsers(dest="ncqsym_command", required=True)
    q = nc_sub.add_parser("qs-rs", help="noncommutative analogue as a polynomial")
    q.add_argument("--alpha", type=parse_composition, required=True)
    q.add_argument("--vars", type=int, default=None)
    q = nc_sub.add_parser("chi-check", help="check projection onto commuting variables")
    q.add_argument("--alpha", type=parse_composition, required=True)
    q.add_argument("--vars", type=int, default=None)

    p = sub.add_parser(
        "pieri-operator", help="chain-descent series of a poset interval"
    )
    p.add_argument("--gamma", type=parse_composition, required=True)
    p.add_argument("--beta", type=parse_composition, required=True)
    _add_format(p)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="worker processes (default: QSCHUR_JOBS or 1)",
    )

    return parser


def _cmd_lr(args) -> int:
    if args.gamma is not None:
        print(lr_coeff(args.alpha, args.beta, args.gamma))
        return 0
    emit_element(product_nc_schur(args.alpha, args.beta), args.format)
    return 0


def _cmd_product(args) -> int:
    emit_element(product_nc_schur(args.alpha, args.beta), args.format)
    return 0


def _cmd_skew(args) -> int:
    f = skew_qs_schur(args.outer, args.inner)
    emit_element(convert(f, args.basis), args.format)
    return 0


def _cmd_enumerate(args) -> int:
    if args.what == "chains":
        chains = interval_chains(args.inner, args.outer)
        emit([[step_json(s) for s in chain] for chain in chains])
        return 0
    kind = PARTITION if args.what == "srt" else COMPOSITION
    shape = SkewShape(kind, args.outer, args.inner)
    if args.what == "ssct":
        if args.max_entry is None:
            raise ValueError("--max-entry is required for ssct")
        tableaux = enumerate_semistandard(shape, args.max_entry)
    else:
        tableaux = enumerate_standard(shape)
    emit([to_json_dict(t) for t in tableaux])
    return 0


def _cmd_poset(args) -> int:
    if args.poset_command == "covers":
        emit(
            [
                {"composition": list(gamma), "step": step_json(step)}
                for gamma, step in covers(args.comp)
            ]
        )
    elif args.poset_command == "leq":
        emit(leq(args.beta, args.gamma))
    else:
        chains = interval_chains(args.beta, args.gamma)
        emit([[step_json(s) for s in chain] for chain in chains])
    return 0


def _cmd_rect(args) -> int:
    t = load_tableau(args.tableau)
    try:
        emit(to_json_dict(rect(t, cross_check=args.cross_check)))
    except AssertionError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_rsk(args) -> int:
    p_tab, q_tab = rsk(args.word)
    emit({"P": to_json_dict(p_tab), "Q": to_json_dict(q_tab)})
    return 0


def _cmd_rho(args) -> int:
    t = load_tableau(args.tableau)
    if args.inverse:
        out = unpack_columns_skew(t, args.beta) if args.beta else unpack_columns(t)
    elif t.shape.inner:
        out = pack_columns_skew(t)
    else:
        out = pack_columns(t)
    emit(to_json_dict(out))
    return 0


def _cmd_pieri(args) -> int:
    if args.diagnostic:
        report = strip_report(args.kind, args.n, args.beta)
        emit(
            {
                "kind": report.kind,
                "n": report.n,
                "beta": list(report.beta),
                "predicted": [list(g) for g in report.predicted],
                "support": [list(g) for g in report.support],
                "missing": [list(g) for g in report.missing],
                "extra": [list(g) for g in report.extra],
                "nonunit": [list(g) for g in report.nonunit],
                "consistent": report.consistent,
            }
        )
        return 0
    emit_element(pieri(args.kind, args.n, args.beta), args.format)
    return 0


def _cmd_pr_product(args) -> int:
    terms = pr_product(load_tableau(args.t1), load_tableau(args.t2))
    emit({"terms": [to_json_dict(t) for t in terms], "count": len(terms)})
    return 0


def _cmd_ncqsym(args) -> int:
    n = sum(args.alpha)
    m = args.vars if args.vars is not None else max(n, 1)
    if m < 1:
        raise ValueError("--vars must be at least 1")
    if args.ncqsym_command == "qs-rs":
        emit(poly_json(qs_rs(args.alpha, m)))
        return 0
    lhs = chi_nc(qs_rs(args.alpha, m))
    rhs = math.factorial(n) * to_polynomial(qs_schur(args.alpha), m)
    ok = lhs == rhs
    emit({"alpha": list(args.alpha), "vars": m, "ok": ok})
    return 0 if ok else 1


def _cmd_pieri_operator(args) -> int:
    try:
        emit_element(descent_pieri_K(args.gamma, args.beta), args.format)
    except AssertionError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    report = run_suite(args.suite, args.max_degree, args.seed, jobs)
    emit(report)
    return 0 if report["ok"] else 1


_HANDLERS = {
    "lr": _cmd_lr,
    "product": _cmd_product,
    "skew": _cmd_skew,
    "enumerate": _cmd_enumerate,
    "poset": _cmd_poset,
    "rect": _cmd_rect,
    "rsk": _cmd_rsk,
    "rho": _cmd_rho,
    "pieri": _cmd_pieri,
    "pr-product": _cmd_pr_product,
    "ncqsym": _cmd_ncqsym,
    "pieri-operator": _cmd_pieri_operator,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except FileNotFoundError as exc:
        print(f"cannot read {exc.filename}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
