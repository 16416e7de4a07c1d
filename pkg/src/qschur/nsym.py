"""Dual quasi-Schur functions and their structure constants.

The product of two dual quasi-Schur elements expands with coefficients
counting standard composition fillings of a skew shape that rectify to a
fixed canonical filling.  The forgetful map onto symmetric functions and
the classical coefficient computations (for cross-checking) live here
too.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache

from .compositions import (
    Composition,
    canonical_key,
    covers,
    is_contained,
    leq,
    underlying_partition,
)
from .qsym import GradedElement
from .tableaux import (
    COMPOSITION,
    PARTITION,
    SkewShape,
    canonical_sct,
    canonical_srt,
    column_word,
    enumerate_semistandard,
    enumerate_standard,
    row_constant_srt,
    strip_kind,
)
from .transforms import insertion_tableau, rect


@cache
def _rect_census(beta: Composition, gamma: Composition) -> Counter:
    """How often each rectification arises over standard fillings of
    gamma over beta (keys are the rectified tableaux themselves)."""
    if not leq(beta, gamma):
        return Counter()
    shape = SkewShape(COMPOSITION, gamma, beta)
    return Counter(rect(t) for t in enumerate_standard(shape))


def lr_coeff(alpha: Composition, beta: Composition, gamma: Composition) -> int:
    """Coefficient of the dual quasi-Schur of ``gamma`` in the product of
    those of ``alpha`` and ``beta``: the number of standard fillings of
    gamma over beta rectifying to the canonical filling of ``alpha``."""
    if sum(alpha) + sum(beta) != sum(gamma):
        return 0
    return _rect_census(beta, gamma).get(canonical_sct(alpha), 0)


def _grown_from(beta: Composition, levels: int) -> frozenset[Composition]:
    frontier = {beta}
    for _ in range(levels):
        frontier = {g for b in frontier for g, _ in covers(b)}
    return frozenset(frontier)


def product_nc_schur(alpha: Composition, beta: Composition) -> GradedElement:
    """Product of the dual quasi-Schur elements of ``alpha`` and ``beta``."""
    terms = {}
    for gamma in _grown_from(beta, sum(alpha)):
        c = lr_coeff(alpha, beta, gamma)
        if c:
            terms[gamma] = c
    return GradedElement("NSym", "S_star", terms)


def multiply_nc(f: GradedElement, g: GradedElement) -> GradedElement:
    """Bilinear extension of :func:`product_nc_schur`."""
    for h in (f, g):
        if (h.ring, h.basis) != ("NSym", "S_star"):
            raise ValueError("expected NSym elements in the dual quasi-Schur basis")
    total = GradedElement("NSym", "S_star")
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            total = total + (ca * cb) * product_nc_schur(a, b)
    return total


def pieri(kind: str, n: int, beta: Composition) -> GradedElement:
    """Multiply by a single row (``kind="row"``) or column (``"column"``)."""
    if kind not in ("row", "column"):
        raise ValueError(f"kind must be 'row' or 'column', not {kind!r}")
    if n < 0:
        raise ValueError("strip size must be nonnegative")
    alpha: Composition = (n,) if kind == "row" and n else (1,) * n
    return product_nc_schur(alpha, beta)


@dataclass(frozen=True)
class StripReport:
    """Strip-shaped candidates versus the actual product support.

    ``predicted`` lists the shapes gamma over ``beta`` of weight n that
    form a horizontal (row) or vertical (column) strip; ``support`` lists
    the shapes with nonzero coefficient.  ``missing`` are predicted shapes
    whose coefficient vanishes, ``extra`` are support shapes that are not
    strips, and ``nonunit`` are support terms with coefficient != 1.
    """

    kind: str
    n: int
    beta: Composition
    predicted: tuple[Composition, ...]
    support: tuple[Composition, ...]
    missing: tuple[Composition, ...]
    extra: tuple[Composition, ...]
    nonunit: tuple[tuple[Composition, int], ...]

    @property
    def consistent(self) -> bool:
        return not (self.missing or self.extra or self.nonunit)


def strip_report(kind: str, n: int, beta: Composition) -> StripReport:
    """Compare the strip heuristic against the true product expansion."""
    product = pieri(kind, n, beta)
    which = 0 if kind == "row" else 1
    predicted = []
    for gamma in _grown_from(beta, n):
        if leq(beta, gamma) and strip_kind(SkewShape(COMPOSITION, gamma, beta))[which]:
            predicted.append(gamma)
    predicted.sort(key=canonical_key)
    support = sorted(product.terms, key=canonical_key)
    missing = tuple(g for g in predicted if g not in product.terms)
    extra = tuple(g for g in support if g not in predicted)
    nonunit = tuple(
        (g, c) for g, c in sorted(product.terms.items(), key=lambda t: canonical_key(t[0]))
        if c != 1
    )
    return StripReport(
        kind, n, beta, tuple(predicted), tuple(support), missing, extra, nonunit
    )


def forget(f: GradedElement) -> GradedElement:
    """Map a noncommutative element onto symmetric functions by sorting
    each index into a partition (dual quasi-Schur -> Schur, complete ->
    complete)."""
    if f.ring != "NSym":
        raise ValueError("the forgetful map applies to NSym elements")
    basis = "s" if f.basis == "S_star" else "h"
    terms: dict = {}
    for alpha, c in f.terms.items():
        lam = underlying_partition(alpha)
        terms[lam] = terms.get(lam, 0) + c
    return GradedElement("Sym", basis, terms)


def _classical_lr_standard(lam: Composition, mu: Composition, nu: Composition) -> int:
    target = canonical_srt(lam)
    shape = SkewShape(PARTITION, nu, mu)
    return sum(
        1
        for t in enumerate_standard(shape)
        if insertion_tableau(column_word(t)) == target
    )


def _classical_lr_semistandard(lam: Composition, mu: Composition, nu: Composition) -> int:
    target = row_constant_srt(lam)
    shape = SkewShape(PARTITION, nu, mu)
    return sum(
        1
        for t in enumerate_semistandard(shape, max(len(lam), 1))
        if insertion_tableau(column_word(t)) == target
    )


def classical_lr(lam: Composition, mu: Composition, nu: Composition) -> int:
    """Classical Littlewood-Richardson coefficient, computed two ways.

    Counts standard reverse fillings of nu/mu whose column word inserts to
    the canonical standard filling of ``lam``, and independently
    semistandard reverse fillings inserting to the row-constant filling of
    ``lam``.  The two counts must agree.
    """
    if sum(lam) + sum(mu) != sum(nu) or not is_contained(mu, nu):
        return 0
    a = _classical_lr_standard(lam, mu, nu)
    b = _classical_lr_semistandard(lam, mu, nu)
    if a != b:
        raise AssertionError(
            f"classical coefficient mismatch for {lam}, {mu}, {nu}: {a} vs {b}"
        )
    return a
