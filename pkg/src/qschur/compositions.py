"""Compositions and the cover order used to grow composition diagrams.

A composition is a tuple of positive integers, a weak composition may
contain zeros, and a partition is a weakly decreasing composition.  The
empty composition is ``()``.

The cover order on compositions ("grow by one cell") has two upward moves
from ``beta``:

* prepend a new part 1 at the front, or
* for each distinct part size ``k`` appearing in ``beta``, increment the
  *first* (leftmost) part of size ``k`` to ``k + 1``.

Saturated chains in an interval of this order are what standard
composition tableaux encode, so the chain enumeration here is the engine
behind tableau enumeration in :mod:`qschur.tableaux`.
"""

from __future__ import annotations

import itertools
from functools import cache
from typing import Iterator, NamedTuple

Composition = tuple[int, ...]


class ChainStep(NamedTuple):
    """A single cover step, recorded as the cell added to the diagram.

    ``row`` and ``column`` locate the new cell in the *larger* composition
    (English convention, 1-based).  ``kind`` is ``"prepend-row-1"`` for the
    new-top-row move (always row 1, column 1) and ``"extend-row"`` for the
    increment move (column equals the new part size).
    """

    kind: str
    row: int
    column: int


def is_weak_composition(alpha: tuple[int, ...]) -> bool:
    return all(isinstance(a, int) and a >= 0 for a in alpha)


def is_composition(alpha: tuple[int, ...]) -> bool:
    return all(isinstance(a, int) and a >= 1 for a in alpha)


def is_partition(alpha: tuple[int, ...]) -> bool:
    return is_composition(alpha) and all(
        alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1)
    )


def set_of(alpha: Composition) -> frozenset[int]:
    """Partial sums of ``alpha`` except the total, as a subset of [n-1]."""
    sums = itertools.accumulate(alpha)
    total = sum(alpha)
    return frozenset(s for s in sums if s != total)


def comp_of_set(subset: frozenset[int] | set[int], n: int) -> Composition:
    """The composition of ``n`` whose partial-sum set is ``subset``."""
    if n == 0:
        if subset:
            raise ValueError("nonempty subset for n=0")
        return ()
    cuts = sorted(subset)
    if cuts and (cuts[0] < 1 or cuts[-1] > n - 1):
        raise ValueError(f"subset {cuts} not contained in [1, {n - 1}]")
    points = [0, *cuts, n]
    return tuple(points[i + 1] - points[i] for i in range(len(points) - 1))


def refines(beta: tuple[int, ...], alpha: Composition) -> bool:
    """True if weak composition ``beta`` refines ``alpha``.

    Each part of ``alpha`` must be the sum of a consecutive run of parts
    of ``beta``, the runs covering ``beta`` in order.  Equivalently the
    partial sums of ``alpha`` all occur, in order, among those of ``beta``.
    Zero parts of ``beta`` refine into whichever run they sit in.
    """
    targets = list(itertools.accumulate(alpha))
    acc = 0
    pos = 0
    for b in beta:
        acc += b
        if pos == len(targets):
            if b:
                return False  # nonzero part left over past the last run
            continue
        if acc > targets[pos]:
            return False
        if acc == targets[pos]:
            pos += 1
    return pos == len(targets)


def reverse(gamma: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(reversed(gamma))


def strong(gamma: tuple[int, ...]) -> Composition:
    """Drop zero parts of a weak composition."""
    return tuple(p for p in gamma if p)


def underlying_partition(gamma: tuple[int, ...]) -> Composition:
    """Parts of ``gamma`` sorted into weakly decreasing order, zeros dropped."""
    return tuple(sorted(strong(gamma), reverse=True))


def normal_forms(
    gamma: tuple[int, ...],
) -> tuple[tuple[int, ...], Composition, Composition]:
    return reverse(gamma), strong(gamma), underlying_partition(gamma)


def concat(alpha: Composition, beta: Composition) -> Composition:
    return alpha + beta


def near_concat(alpha: Composition, beta: Composition) -> Composition:
    """Concatenation with the adjacent boundary parts merged."""
    if not alpha or not beta:
        raise ValueError("near-concatenation needs both compositions nonempty")
    return alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:]


def is_contained(alpha: Composition, beta: Composition) -> bool:
    """Front-aligned containment: part i of ``alpha`` fits in part i of ``beta``."""
    return len(alpha) <= len(beta) and all(a <= b for a, b in zip(alpha, beta))


def is_rev_contained(alpha: Composition, beta: Composition) -> bool:
    """Containment of the reversals: ``alpha`` fits bottom-aligned in ``beta``."""
    return is_contained(reverse(alpha), reverse(beta))


def containment(alpha: Composition, beta: Composition) -> tuple[bool, bool]:
    return is_contained(alpha, beta), is_rev_contained(alpha, beta)


def covers(beta: Composition) -> tuple[tuple[Composition, ChainStep], ...]:
    """All compositions covering ``beta``, with the cell each move adds.

    The prepend move comes first, then the increment moves by row.  The
    increment move targets the first part of each distinct size, so the
    number of covers is 1 + (number of distinct part sizes).
    """
    out: list[tuple[Composition, ChainStep]] = [
        ((1,) + beta, ChainStep("prepend-row-1", 1, 1))
    ]
    seen: set[int] = set()
    for r, part in enumerate(beta):
        if part not in seen:
            seen.add(part)
            gamma = beta[:r] + (part + 1,) + beta[r + 1 :]
            out.append((gamma, ChainStep("extend-row", r + 1, part + 1)))
    return tuple(out)


def down_covers(gamma: Composition) -> tuple[tuple[Composition, ChainStep], ...]:
    """All compositions covered by ``gamma``, with the cell removed.

    Inverse of :func:`covers`: drop the top row if it has size 1, or
    shrink a part by one provided no *earlier* row has the shrunken size
    (otherwise re-growing would target that earlier row instead).
    """
    out: list[tuple[Composition, ChainStep]] = []
    if gamma and gamma[0] == 1:
        out.append((gamma[1:], ChainStep("prepend-row-1", 1, 1)))
    for r, part in enumerate(gamma):
        if part >= 2 and all(gamma[i] != part - 1 for i in range(r)):
            beta = gamma[:r] + (part - 1,) + gamma[r + 1 :]
            out.append((beta, ChainStep("extend-row", r + 1, part)))
    return tuple(out)


def is_cover(beta: Composition, gamma: Composition) -> bool:
    return any(g == gamma for g, _ in covers(beta))


@cache
def leq(beta: Composition, gamma: Composition) -> bool:
    """Order relation generated by :func:`covers` (reflexive closure)."""
    if beta == gamma:
        return True
    if sum(beta) >= sum(gamma) or not is_rev_contained(beta, gamma):
        return False
    return any(leq(mid, gamma) for mid, _ in covers(beta))


@cache
def interval_chains(
    beta: Composition, gamma: Composition
) -> tuple[tuple[ChainStep, ...], ...]:
    """All saturated chains from ``beta`` up to ``gamma``.

    Each chain is the sequence of added cells, in the order the diagram is
    grown.  Chains are sorted lexicographically by their (row, column)
    step sequences, which is a total order since the column determines the
    move kind.
    """
    if beta == gamma:
        return ((),)
    if sum(gamma) <= sum(beta) or not is_rev_contained(beta, gamma):
        return ()
    chains: list[tuple[ChainStep, ...]] = []
    for delta, step in down_covers(gamma):
        for chain in interval_chains(beta, delta):
            chains.append(chain + (step,))
    chains.sort(key=lambda ch: tuple((s.row, s.column) for s in ch))
    return tuple(chains)


def apply_step(beta: Composition, step: ChainStep) -> Composition:
    """Apply one cover step to ``beta``, validating that it is legal."""
    if step.kind == "prepend-row-1":
        if (step.row, step.column) != (1, 1):
            raise ValueError(f"prepend step must add cell (1, 1), got {step}")
        return (1,) + beta
    if step.kind != "extend-row":
        raise ValueError(f"unknown step kind {step.kind!r}")
    r = step.row - 1
    if not 0 <= r < len(beta):
        raise ValueError(f"step {step} does not fit composition {beta}")
    part = beta[r]
    if step.column != part + 1:
        raise ValueError(f"step {step} does not extend row of length {part}")
    if any(beta[i] == part for i in range(r)):
        raise ValueError(
            f"step {step} targets row {step.row} but an earlier row has size {part}"
        )
    return beta[:r] + (part + 1,) + beta[r + 1 :]


def canonical_key(alpha: Composition) -> tuple[int, int, Composition]:
    """Sort key for the canonical composition order: weight, length, lex."""
    return (sum(alpha), len(alpha), alpha)


def compositions_of(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` in canonical order (length, then lex)."""
    if n == 0:
        yield ()
        return
    for length in range(1, n + 1):
        for cuts in itertools.combinations(range(1, n), length - 1):
            yield comp_of_set(set(cuts), n)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Composition]:
    """All partitions of ``n``, largest first within the leading part."""
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def weak_compositions(n: int, length: int) -> Iterator[tuple[int, ...]]:
    """All weak compositions of ``n`` with exactly ``length`` parts."""
    if length == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, length - 1):
            yield (first,) + rest
