"""Consequences of the skew theory: a tableau algebra product, refinements
in noncommuting variables, and descent generating series over intervals.

Set compositions are tuples of disjoint increasing tuples of integers
whose union is an initial segment 1..n; dropping the block order (for set
partitions) we sort blocks by their minima.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable

from .compositions import (
    ChainStep,
    Composition,
    apply_step,
    comp_of_set,
    compositions_of,
    interval_chains,
    is_contained,
    partitions_of,
    underlying_partition,
)
from .qsym import (
    GradedElement,
    TruncatedPolynomial,
    basis_element,
    convert,
    let_variables_commute,
    skew_qs_schur,
)
from .tableaux import (
    COMPOSITION,
    PARTITION,
    SkewShape,
    Tableau,
    column_word,
    content,
    enumerate_semistandard,
    enumerate_standard,
    make_tableau,
    straight,
    validate,
)
from .transforms import insertion_tableau, unpack_columns

SetComposition = tuple[tuple[int, ...], ...]


def _ordered_set_partitions(items: tuple[int, ...]) -> Iterable[SetComposition]:
    if not items:
        yield ()
        return
    for r in range(1, len(items) + 1):
        for block in itertools.combinations(items, r):
            taken = set(block)
            rest = tuple(x for x in items if x not in taken)
            for tail in _ordered_set_partitions(rest):
                yield (block,) + tail


@cache
def set_compositions(n: int) -> tuple[SetComposition, ...]:
    """All set compositions of 1..n, sorted by block count then lex."""
    all_of_them = _ordered_set_partitions(tuple(range(1, n + 1)))
    return tuple(sorted(all_of_them, key=lambda pi: (len(pi), pi)))


def shape_of_blocks(pi: SetComposition) -> Composition:
    return tuple(len(block) for block in pi)


@cache
def _set_comps_by_shape(n: int) -> dict[Composition, tuple[SetComposition, ...]]:
    grouped: dict[Composition, list[SetComposition]] = {}
    for pi in set_compositions(n):
        grouped.setdefault(shape_of_blocks(pi), []).append(pi)
    return {alpha: tuple(pis) for alpha, pis in grouped.items()}


# ---------------------------------------------------------------------------
# product of standard reverse fillings


def _require_straight_srt(t: Tableau) -> None:
    if t.shape.kind != PARTITION or t.shape.inner or validate(t) != "SRT":
        raise ValueError("expected a standard reverse filling of straight shape")


def pr_product(t1: Tableau, t2: Tableau) -> tuple[Tableau, ...]:
    """Product of two standard reverse fillings.

    Terms are the standard fillings ``t`` of partition shape that restrict
    to ``t1`` (shifted up by the size of ``t2``) on the inner shape and
    whose remaining skew part has column word inserting to ``t2``.
    """
    _require_straight_srt(t1)
    _require_straight_srt(t2)
    n = t2.shape.size
    mu = t1.shape.outer
    shifted = {cell: t1.entry(*cell) + n for cell in t1.shape.cells}
    out = []
    for nu in partitions_of(t1.shape.size + n):
        if not is_contained(mu, nu):
            continue
        for s in enumerate_standard(SkewShape(PARTITION, nu, mu)):
            if insertion_tableau(column_word(s)) != t2:
                continue
            filling = dict(shifted)
            filling.update(s.entries())
            out.append(make_tableau(straight(PARTITION, nu), filling))
    out.sort(key=Tableau.sort_key)
    return tuple(out)


def _shuffles(u: tuple[int, ...], v: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    if not u or not v:
        yield u + v
        return
    for tail in _shuffles(u[1:], v):
        yield (u[0],) + tail
    for tail in _shuffles(u, v[1:]):
        yield (v[0],) + tail


@cache
def knuth_class(t: Tableau) -> tuple[tuple[int, ...], ...]:
    """All permutation words whose insertion tableau is ``t``."""
    _require_straight_srt(t)
    return tuple(
        w
        for w in itertools.permutations(range(1, t.shape.size + 1))
        if insertion_tableau(w) == t
    )


def pr_product_words(t1: Tableau, t2: Tableau) -> tuple[Counter, int]:
    """Word route to the same product.

    Shuffles every word inserting to ``t1`` (shifted up by the size of
    ``t2``) with every word inserting to ``t2`` and tallies the insertion
    tableaux of the results.  Returns the tally and the number of words;
    the tally's support should match :func:`pr_product`, with each term
    counted once per standard filling of its shape.
    """
    _require_straight_srt(t1)
    _require_straight_srt(t2)
    n = t2.shape.size
    counts: Counter = Counter()
    total = 0
    for u in knuth_class(t1):
        shifted = tuple(x + n for x in u)
        for v in knuth_class(t2):
            for w in _shuffles(shifted, v):
                total += 1
                counts[insertion_tableau(w)] += 1
    return counts, total


def nsym_image(t: Tableau) -> GradedElement:
    """Send a standard reverse filling to the dual quasi-Schur element
    indexed by the shape of its unpacked form."""
    _require_straight_srt(t)
    return basis_element("NSym", "S_star", unpack_columns(t).shape.outer)


def nsym_image_sum(terms: Iterable[Tableau]) -> GradedElement:
    total = GradedElement("NSym", "S_star")
    for t in terms:
        total = total + nsym_image(t)
    return total


# ---------------------------------------------------------------------------
# noncommuting variables


def m_pi_nc(pi: SetComposition, m: int) -> TruncatedPolynomial:
    """Monomial in noncommuting x_1..x_m attached to a set composition:
    one word per strictly increasing choice of a variable per block."""
    n = sum(len(block) for block in pi)
    block_of = {j: b for b, block in enumerate(pi) for j in block}
    terms = {}
    for chosen in itertools.combinations(range(1, m + 1), len(pi)):
        terms[tuple(chosen[block_of[j]] for j in range(1, n + 1))] = 1
    return TruncatedPolynomial(m, False, terms)


def m_pi_sym(pi: SetComposition, m: int) -> TruncatedPolynomial:
    """Set-partition analogue: any injective choice of variables, so the
    block order of ``pi`` is immaterial."""
    n = sum(len(block) for block in pi)
    block_of = {j: b for b, block in enumerate(pi) for j in block}
    terms = {}
    for chosen in itertools.permutations(range(1, m + 1), len(pi)):
        terms[tuple(chosen[block_of[j]] for j in range(1, n + 1))] = 1
    return TruncatedPolynomial(m, False, terms)


def kostka(alpha: Composition, beta: tuple[int, ...]) -> int:
    """Number of semistandard composition fillings of ``alpha`` with
    content ``beta``."""
    if sum(alpha) != sum(beta):
        return 0
    beta = tuple(beta)
    m = len(beta)
    shape = straight(COMPOSITION, alpha)
    return sum(1 for t in enumerate_semistandard(shape, m) if content(t, m) == beta)


def qs_rs(alpha: Composition, m: int) -> TruncatedPolynomial:
    """Quasi-Schur analogue in noncommuting variables, computed two ways.

    Route one sums, over semistandard fillings, every reading word of the
    entry multiset weighted by the product of content factorials.  Route
    two expands over set compositions refined by content counts.  The
    routes must agree.
    """
    n = sum(alpha)
    terms: dict[tuple[int, ...], int] = {}
    for t in enumerate_semistandard(straight(COMPOSITION, alpha), m):
        values = sorted(t.entries().values())
        repeats = math.prod(math.factorial(k) for k in Counter(values).values())
        for word in set(itertools.permutations(values)):
            terms[word] = terms.get(word, 0) + repeats
    direct = TruncatedPolynomial(m, False, terms)

    formula = TruncatedPolynomial(m, False)
    by_shape = _set_comps_by_shape(n)
    for beta in compositions_of(n):
        k = kostka(alpha, beta)
        if not k:
            continue
        weight = k * math.prod(math.factorial(p) for p in beta)
        for pi in by_shape.get(beta, ()):
            formula = formula + weight * m_pi_nc(pi, m)
    if direct != formula:
        raise AssertionError(f"evaluation routes disagree for {alpha}, m={m}")
    return direct


def s_rs(lam: Composition, m: int) -> TruncatedPolynomial:
    """Schur analogue in noncommuting variables: sum of :func:`qs_rs` over
    all rearrangements of ``lam``."""
    total = TruncatedPolynomial(m, False)
    for alpha in compositions_of(sum(lam)):
        if underlying_partition(alpha) == tuple(lam):
            total = total + qs_rs(alpha, m)
    return total


def chi_nc(p: TruncatedPolynomial) -> TruncatedPolynomial:
    """Let the variables commute."""
    return let_variables_commute(p)


def lift(f: GradedElement) -> GradedElement:
    """Lift a quasisymmetric element into noncommuting variables.

    Spreads each monomial term over the set compositions with matching
    block sizes, scaled so that projecting back is the identity.
    """
    if f.ring != "QSym":
        raise ValueError("lift applies to QSym elements")
    f = convert(f, "M")
    terms: dict = {}
    for alpha, c in f.terms.items():
        n = sum(alpha)
        factor = Fraction(
            math.prod(math.factorial(p) for p in alpha), math.factorial(n)
        )
        for pi in _set_comps_by_shape(n).get(alpha, ()):
            terms[pi] = terms.get(pi, 0) + c * factor
    return GradedElement("NCQSym", "M_Pi", terms)


def project(f: GradedElement) -> GradedElement:
    """Forget the set structure: each set composition maps to its block
    sizes."""
    if (f.ring, f.basis) != ("NCQSym", "M_Pi"):
        raise ValueError("project applies to NCQSym elements")
    terms: dict = {}
    for pi, c in f.terms.items():
        alpha = shape_of_blocks(pi)
        terms[alpha] = terms.get(alpha, 0) + c
    return GradedElement("QSym", "M", terms)


def ncqsym_to_polynomial(f: GradedElement, m: int) -> TruncatedPolynomial:
    if (f.ring, f.basis) != ("NCQSym", "M_Pi"):
        raise ValueError("expected an NCQSym element")
    total = TruncatedPolynomial(m, False)
    for pi, c in f.terms.items():
        total = total + c * m_pi_nc(pi, m)
    return total


# ---------------------------------------------------------------------------
# descent series over intervals


@dataclass(frozen=True)
class LabeledCover:
    """One cover in a descending chain, labeled by the removed cell."""

    lower: Composition
    upper: Composition
    label: tuple[int, int]


def _cover_label(upper: Composition, step: ChainStep) -> tuple[int, int]:
    row = 1 if step.kind == "prepend-row-1" else step.row
    column = 1 if step.kind == "prepend-row-1" else step.column
    return (-column, -(len(upper) - row + 1))


def labeled_chains(
    gamma: Composition, beta: Composition
) -> tuple[tuple[LabeledCover, ...], ...]:
    """Descending saturated chains from ``gamma`` to ``beta``, with the
    label of each cover (negated column, negated row from the bottom)."""
    out = []
    for steps in interval_chains(beta, gamma):
        current = beta
        ascending = []
        for step in steps:
            bigger = apply_step(current, step)
            ascending.append(LabeledCover(current, bigger, _cover_label(bigger, step)))
            current = bigger
        out.append(tuple(reversed(ascending)))
    return tuple(out)


def _label_precedes(a: tuple[int, int], b: tuple[int, int]) -> bool:
    if a[0] != b[0]:
        return a[0] < b[0]
    if a[0] == -1:
        return a[1] > b[1]
    return a[1] < b[1]


def descent_pieri_K(gamma: Composition, beta: Composition) -> GradedElement:
    """Sum, over labeled descending chains of the interval, of the
    fundamental element of each chain's descent composition.

    The result is cross-checked against the skew expansion computed by
    tableau enumeration; the two must always agree.
    """
    n = sum(gamma) - sum(beta)
    terms: dict = {}
    for chain in labeled_chains(gamma, beta):
        labels = [cover.label for cover in chain]
        des = {
            i + 1
            for i in range(len(labels) - 1)
            if not _label_precedes(labels[i], labels[i + 1])
        }
        tau = comp_of_set(des, n)
        terms[tau] = terms.get(tau, 0) + 1
    out = GradedElement("QSym", "L", terms)
    if out != skew_qs_schur(gamma, beta):
        raise AssertionError(
            f"chain-descent series disagrees with the skew expansion "
            f"for {gamma} over {beta}"
        )
    return out
