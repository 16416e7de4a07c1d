"""Skew diagrams and reverse tableau fillings on them.

Two diagram kinds share one interface:

* ``"partition"``: outer/inner are partitions, the inner diagram sits in
  the top-left corner (rows aligned at the top).
* ``"composition"``: outer/inner are compositions, the inner diagram sits
  in the bottom-left corner — inner row ``i`` occupies outer row
  ``len(outer) - len(inner) + i``.

Cells are (row, column), 1-based, English orientation (row 1 on top).
Fillings are *reverse*: rows weakly decrease left to right.  On partition
shapes columns strictly decrease top to bottom; on composition shapes the
first column strictly increases and a triple rule governs the rest.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .compositions import (
    ChainStep,
    Composition,
    apply_step,
    comp_of_set,
    down_covers,
    interval_chains,
    is_contained,
    is_partition,
    is_rev_contained,
    refines,
    weak_compositions,
)

Cell = tuple[int, int]

PARTITION = "partition"
COMPOSITION = "composition"


@dataclass(frozen=True)
class SkewShape:
    kind: str
    outer: Composition
    inner: Composition = ()

    def __post_init__(self) -> None:
        if self.kind not in (PARTITION, COMPOSITION):
            raise ValueError(f"unknown shape kind {self.kind!r}")
        for name, comp in (("outer", self.outer), ("inner", self.inner)):
            if not all(isinstance(p, int) and p >= 1 for p in comp):
                raise ValueError(f"{name} shape {comp} is not a composition")
        if self.kind == PARTITION:
            if not (is_partition(self.outer) and is_partition(self.inner)):
                raise ValueError("partition-kind shapes need partition rows")
            if not is_contained(self.inner, self.outer):
                raise ValueError(f"{self.inner} does not fit inside {self.outer}")
        else:
            if not is_rev_contained(self.inner, self.outer):
                raise ValueError(
                    f"{self.inner} does not fit bottom-aligned inside {self.outer}"
                )

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def inner_in_row(self, r: int) -> int:
        """Number of inner cells in outer row ``r``."""
        if self.kind == PARTITION:
            return self.inner[r - 1] if r <= len(self.inner) else 0
        offset = len(self.outer) - len(self.inner)
        return self.inner[r - 1 - offset] if r > offset else 0

    def in_outer(self, r: int, c: int) -> bool:
        return 1 <= r <= len(self.outer) and 1 <= c <= self.outer[r - 1]

    def in_inner(self, r: int, c: int) -> bool:
        return self.in_outer(r, c) and c <= self.inner_in_row(r)

    def in_skew(self, r: int, c: int) -> bool:
        return self.in_outer(r, c) and c > self.inner_in_row(r)

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """Skew cells in row-major order."""
        return tuple(
            (r, c)
            for r in range(1, len(self.outer) + 1)
            for c in range(self.inner_in_row(r) + 1, self.outer[r - 1] + 1)
        )

    def is_uniform(self) -> bool:
        """True if every row whose first-column cell is a skew cell has equal length.

        Only composition-kind shapes carry this notion; the rows in question
        are the top ``len(outer) - len(inner)`` rows.
        """
        if self.kind != COMPOSITION:
            raise ValueError("uniformity is defined for composition-kind shapes")
        offset = len(self.outer) - len(self.inner)
        return len({self.outer[i] for i in range(offset)}) <= 1


def straight(kind: str, outer: Composition) -> SkewShape:
    return SkewShape(kind, outer, ())


def strip_kind(shape: SkewShape) -> tuple[bool, bool]:
    """(horizontal, vertical): at most one skew cell per column / per row."""
    cols = Counter(c for _, c in shape.cells)
    rows = Counter(r for r, _ in shape.cells)
    horizontal = all(v <= 1 for v in cols.values())
    vertical = all(v <= 1 for v in rows.values())
    return horizontal, vertical


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape; ``rows`` cover the full outer diagram.

    Inner cells hold ``None``, skew cells hold positive integers.  Rows are
    padded to the outer row lengths so two tableaux are equal exactly when
    their shapes and fillings agree.
    """

    shape: SkewShape
    rows: tuple[tuple[int | None, ...], ...]

    def __post_init__(self) -> None:
        outer = self.shape.outer
        if len(self.rows) != len(outer):
            raise ValueError("row count does not match outer shape")
        for r, row in enumerate(self.rows, start=1):
            if len(row) != outer[r - 1]:
                raise ValueError(f"row {r} has length {len(row)}, expected {outer[r - 1]}")
            boundary = self.shape.inner_in_row(r)
            for c, x in enumerate(row, start=1):
                if c <= boundary:
                    if x is not None:
                        raise ValueError(f"inner cell ({r}, {c}) must be empty")
                elif not (isinstance(x, int) and x >= 1):
                    raise ValueError(f"cell ({r}, {c}) needs a positive integer, got {x!r}")

    @property
    def n(self) -> int:
        return self.shape.size

    def entry(self, r: int, c: int) -> int:
        if not self.shape.in_skew(r, c):
            raise KeyError(f"({r}, {c}) is not a skew cell")
        return self.rows[r - 1][c - 1]  # type: ignore[return-value]

    def entries(self) -> dict[Cell, int]:
        return {cell: self.entry(*cell) for cell in self.shape.cells}

    def map_entries(self, f) -> "Tableau":
        rows = tuple(
            tuple(x if x is None else f(x) for x in row) for row in self.rows
        )
        return Tableau(self.shape, rows)

    def is_standard(self) -> bool:
        vals = sorted(self.entry(*cell) for cell in self.shape.cells)
        return vals == list(range(1, self.n + 1))

    def sort_key(self):
        rows = tuple(tuple(0 if x is None else x for x in row) for row in self.rows)
        return (self.shape.kind, self.shape.outer, self.shape.inner, rows)


def make_tableau(shape: SkewShape, entries: dict[Cell, int]) -> Tableau:
    if set(entries) != set(shape.cells):
        raise ValueError("entries must cover the skew cells exactly")
    rows = tuple(
        tuple(
            entries[(r, c)] if shape.in_skew(r, c) else None
            for c in range(1, shape.outer[r - 1] + 1)
        )
        for r in range(1, len(shape.outer) + 1)
    )
    return Tableau(shape, rows)


def from_rows(kind: str, rows) -> Tableau:
    """Build a tableau from row lists, inferring the shape.

    ``None`` marks inner cells; they must form a prefix of each row, a
    bottom-aligned block of rows for composition kind and a top-aligned
    block for partition kind.
    """
    rows = tuple(tuple(row) for row in rows)
    outer = tuple(len(row) for row in rows)
    counts = []
    for row in rows:
        c = 0
        while c < len(row) and row[c] is None:
            c += 1
        if any(x is None for x in row[c:]):
            raise ValueError("inner cells must form a prefix of each row")
        counts.append(c)
    marked = [i for i, c in enumerate(counts) if c]
    if kind == COMPOSITION:
        first = marked[0] if marked else len(counts)
        if any(c == 0 for c in counts[first:]):
            raise ValueError("inner rows must be the bottom rows")
        inner = tuple(counts[first:])
    else:
        last = marked[-1] if marked else -1
        if any(c == 0 for c in counts[: last + 1]):
            raise ValueError("inner rows must be the top rows")
        inner = tuple(counts[: last + 1])
    return Tableau(SkewShape(kind, outer, inner), rows)


def _row_runs_ok(t: Tableau) -> bool:
    for r in range(1, len(t.shape.outer) + 1):
        lo = t.shape.inner_in_row(r) + 1
        hi = t.shape.outer[r - 1]
        for c in range(lo, hi):
            if t.entry(r, c) < t.entry(r, c + 1):
                return False
    return True


def _triple_rule_ok(t: Tableau) -> bool:
    """The composition-shape column rule.

    A cell (i, k) of the outer diagram attacks a skew cell (j, k+1) below
    it (i < j) provided (i, k+1) is not an inner cell.  The attack fires
    when (i, k) is inner or when T(j, k+1) <= T(i, k); a firing attack
    demands that (i, k+1) is a skew cell with a strictly larger entry than
    T(j, k+1).
    """
    sh = t.shape
    for (j, c) in sh.cells:
        if c < 2:
            continue
        k = c - 1
        for i in range(1, j):
            if not sh.in_outer(i, k) or sh.in_inner(i, k + 1):
                continue
            fires = sh.in_inner(i, k) or t.entry(j, c) <= t.entry(i, k)
            if fires:
                if not sh.in_skew(i, k + 1) or not t.entry(j, c) < t.entry(i, k + 1):
                    return False
    return True


def validate(t: Tableau) -> str:
    """Classify a filling: SSRT/SRT on partition shapes, SSCT/SCT on
    composition shapes, else ``"invalid"``."""
    sh = t.shape
    if not _row_runs_ok(t):
        return "invalid"
    if sh.kind == PARTITION:
        for (r, c) in sh.cells:
            if sh.in_skew(r + 1, c) and not t.entry(r, c) > t.entry(r + 1, c):
                return "invalid"
        return "SRT" if t.is_standard() else "SSRT"
    first_col = [t.entry(r, 1) for r in range(1, len(sh.outer) + 1) if sh.in_skew(r, 1)]
    if any(a >= b for a, b in zip(first_col, first_col[1:])):
        return "invalid"
    if not _triple_rule_ok(t):
        return "invalid"
    return "SCT" if t.is_standard() else "SSCT"


def content(t: Tableau, max_entry: int | None = None) -> tuple[int, ...]:
    """Multiplicity of each value 1..max as a weak composition."""
    counts = Counter(t.entry(*cell) for cell in t.shape.cells)
    top = max(counts, default=0)
    if max_entry is not None:
        if top > max_entry:
            raise ValueError(f"entry {top} exceeds max_entry={max_entry}")
        top = max_entry
    return tuple(counts.get(v, 0) for v in range(1, top + 1))


def column_word(t: Tableau) -> tuple[int, ...]:
    """Entries of each column in increasing order, columns left to right."""
    cols: dict[int, list[int]] = {}
    for (r, c) in t.shape.cells:
        cols.setdefault(c, []).append(t.entry(r, c))
    out: list[int] = []
    for c in sorted(cols):
        out.extend(sorted(cols[c]))
    return tuple(out)


def _positions(t: Tableau) -> dict[int, Cell]:
    pos = {}
    for cell in t.shape.cells:
        v = t.entry(*cell)
        if v in pos:
            raise ValueError("tableau is not standard (repeated entry)")
        pos[v] = cell
    return pos


def descents(t: Tableau) -> frozenset[int]:
    """{i : i+1 sits in a column weakly right of i} for a standard filling."""
    pos = _positions(t)
    if sorted(pos) != list(range(1, t.n + 1)):
        raise ValueError("descents need a standard tableau")
    return frozenset(
        i for i in range(1, t.n) if pos[i + 1][1] >= pos[i][1]
    )


def descent_composition(t: Tableau) -> Composition:
    return comp_of_set(descents(t), t.n)


def colseq(t: Tableau) -> tuple[int, ...]:
    """Columns of the entries n, n-1, ..., 1 of a standard filling."""
    pos = _positions(t)
    if sorted(pos) != list(range(1, t.n + 1)):
        raise ValueError("colseq needs a standard tableau")
    return tuple(pos[k][1] for k in range(t.n, 0, -1))


def standardize(t: Tableau) -> tuple[Tableau, tuple[int, ...]]:
    """Relabel entries 1..n by value, ties broken right-to-left.

    Returns the standard tableau and the original content; among equal
    entries the one in the larger column receives the smaller label, which
    is the unique choice keeping composition fillings valid.
    """
    order = sorted(t.shape.cells, key=lambda cell: (t.entry(*cell), -cell[1]))
    labels = {cell: i for i, cell in enumerate(order, start=1)}
    return make_tableau(t.shape, labels), content(t)


def destandardize(that: Tableau, tau: tuple[int, ...]) -> Tableau:
    """Inverse of :func:`standardize` at a coarser content ``tau``.

    ``tau`` must be a weak composition of n refining the descent
    composition of ``that``; standard label p becomes the value v with
    tau_1 + ... + tau_{v-1} < p <= tau_1 + ... + tau_v.
    """
    if sum(tau) != that.n:
        raise ValueError(f"content {tau} has weight {sum(tau)}, need {that.n}")
    if not refines(tau, descent_composition(that)):
        raise ValueError(f"{tau} does not refine the descent composition")
    bounds = list(itertools.accumulate(tau))

    def value(p: int) -> int:
        for v, bound in enumerate(bounds, start=1):
            if p <= bound:
                return v
        raise AssertionError

    return that.map_entries(value)


def canonical_sct(alpha: Composition) -> Tableau:
    """The standard composition filling of ``alpha`` with descent
    composition ``alpha``: cells numbered n..1 bottom row first, each row
    left to right."""
    rows: list[tuple[int, ...]] = []
    v = sum(alpha)
    for part in reversed(alpha):
        rows.append(tuple(range(v, v - part, -1)))
        v -= part
    rows.reverse()
    return Tableau(straight(COMPOSITION, alpha), tuple(rows))


def canonical_srt(lam: Composition) -> Tableau:
    """The standard reverse filling of partition ``lam`` numbered n..1 along
    rows, top row first."""
    rows: list[tuple[int, ...]] = []
    v = sum(lam)
    for part in lam:
        rows.append(tuple(range(v, v - part, -1)))
        v -= part
    return Tableau(straight(PARTITION, lam), tuple(rows))


def row_constant_srt(lam: Composition) -> Tableau:
    """The reverse filling of partition ``lam`` whose row ``i`` is constant
    ``len(lam) - i + 1``; its content is ``reverse(lam)``."""
    ell = len(lam)
    rows = tuple(tuple([ell - i] * lam[i]) for i in range(ell))
    return Tableau(straight(PARTITION, lam), rows)


def chain_to_tableau(beta: Composition, chain: tuple[ChainStep, ...]) -> Tableau:
    """The standard composition tableau encoding a saturated chain.

    The chain grows ``beta`` one cell at a time; the cell added at step t
    (1-based) receives entry n - t + 1.  Raises if any step is illegal.
    """
    n = len(chain)
    current = beta
    ids: list[object] = [("base", i) for i in range(len(beta))]
    placed: list[tuple[object, int, int]] = []  # (row id, column, entry)
    for t_idx, step in enumerate(chain, start=1):
        entry = n - t_idx + 1
        if step.kind == "prepend-row-1":
            current = apply_step(current, step)
            ids.insert(0, ("new", t_idx))
            placed.append((ids[0], 1, entry))
        else:
            current = apply_step(current, step)
            placed.append((ids[step.row - 1], step.column, entry))
    final_row = {rid: i + 1 for i, rid in enumerate(ids)}
    entries = {(final_row[rid], col): entry for rid, col, entry in placed}
    return make_tableau(SkewShape(COMPOSITION, current, beta), entries)


def tableau_to_chain(t: Tableau) -> tuple[ChainStep, ...]:
    """Inverse of :func:`chain_to_tableau` for a standard composition filling."""
    if validate(t) != "SCT":
        raise ValueError("chain extraction needs an SCT")
    pos = _positions(t)
    outer = t.shape.outer
    current = outer
    steps_removal: list[ChainStep] = []
    for k in range(1, t.n + 1):
        r, c = pos[k]
        row = r - (len(outer) - len(current))
        wanted = (
            ChainStep("prepend-row-1", 1, 1)
            if c == 1
            else ChainStep("extend-row", row, c)
        )
        legal = dict((step, smaller) for smaller, step in down_covers(current))
        if wanted not in legal or (c == 1 and row != 1):
            raise ValueError(f"entry {k} at cell ({r}, {c}) cannot be removed")
        steps_removal.append(wanted)
        current = legal[wanted]
    if current != t.shape.inner:
        raise ValueError("removal did not land on the inner shape")
    return tuple(reversed(steps_removal))


def _partition_pred(nu: Composition, floor: Composition) -> Iterator[tuple[Composition, Cell]]:
    """Remove one corner cell of ``nu`` keeping a partition containing ``floor``."""
    for r in range(len(nu)):
        below = nu[r + 1] if r + 1 < len(nu) else 0
        minimum = floor[r] if r < len(floor) else 0
        if nu[r] - 1 >= below and nu[r] - 1 >= minimum:
            smaller = nu[:r] + (nu[r] - 1,) + nu[r + 1 :]
            while smaller and smaller[-1] == 0:
                smaller = smaller[:-1]
            yield smaller, (r + 1, nu[r])


def _srt_fillings(nu: Composition, mu: Composition) -> Iterator[dict[Cell, int]]:
    """All standard reverse fillings of nu/mu via growth chains in the
    partition containment order (entry e on the e-th removed cell)."""

    def walk(shape: Composition, next_entry: int) -> Iterator[dict[Cell, int]]:
        if shape == mu:
            yield {}
            return
        for smaller, cell in _partition_pred(shape, mu):
            for partial in walk(smaller, next_entry + 1):
                partial[cell] = next_entry
                yield partial

    yield from walk(nu, 1)


def enumerate_standard(shape: SkewShape) -> tuple[Tableau, ...]:
    """All standard reverse fillings of ``shape``, sorted canonically."""
    if shape.kind == COMPOSITION:
        out = [
            chain_to_tableau(shape.inner, chain)
            for chain in interval_chains(shape.inner, shape.outer)
        ]
    else:
        out = [
            make_tableau(shape, dict(filling))
            for filling in _srt_fillings(shape.outer, shape.inner)
        ]
    return tuple(sorted(out, key=Tableau.sort_key))


def _ssrt_fillings(shape: SkewShape, max_entry: int) -> Iterator[Tableau]:
    cells = shape.cells
    entries: dict[Cell, int] = {}

    def fill(i: int) -> Iterator[Tableau]:
        if i == len(cells):
            yield make_tableau(shape, dict(entries))
            return
        r, c = cells[i]
        hi = max_entry
        if shape.in_skew(r, c - 1):
            hi = min(hi, entries[(r, c - 1)])
        if shape.in_skew(r - 1, c):
            hi = min(hi, entries[(r - 1, c)] - 1)
        for v in range(1, hi + 1):
            entries[(r, c)] = v
            yield from fill(i + 1)
        entries.pop((r, c), None)

    yield from fill(0)


def enumerate_semistandard(shape: SkewShape, max_entry: int) -> tuple[Tableau, ...]:
    """All semistandard reverse fillings with entries at most ``max_entry``.

    Composition shapes go through standardization: each standard filling is
    destandardized at every weak content of length ``max_entry`` refining
    its descent composition, which hits every semistandard filling exactly
    once.  Partition shapes are filled directly.
    """
    if shape.kind == PARTITION:
        out = list(_ssrt_fillings(shape, max_entry))
    else:
        out = []
        for that in enumerate_standard(shape):
            des = descent_composition(that)
            for tau in weak_compositions(that.n, max_entry):
                if refines(tau, des):
                    out.append(destandardize(that, tau))
    return tuple(sorted(out, key=Tableau.sort_key))


def split_tableau(t: Tableau, k: int) -> tuple[Tableau, Tableau]:
    """Split a standard composition filling at value ``k``.

    Returns ``(upper, lower)``: ``upper`` keeps entries 1..k on the outer
    shape over the enlarged base occupied by the inner shape together with
    entries above k; ``lower`` keeps entries k+1..n, shifted down by k, on
    that enlarged base over the original inner shape.  The two reassemble
    to ``t``.
    """
    if validate(t) != "SCT":
        raise ValueError("split needs an SCT")
    if not 0 <= k <= t.n:
        raise ValueError(f"split point {k} outside 0..{t.n}")
    sh = t.shape
    ell = len(sh.outer)
    base_len = [
        sh.inner_in_row(r)
        + sum(1 for c in range(1, sh.outer[r - 1] + 1) if sh.in_skew(r, c) and t.entry(r, c) > k)
        for r in range(1, ell + 1)
    ]
    for r in range(1, ell + 1):
        for c in range(sh.inner_in_row(r) + 1, sh.outer[r - 1] + 1):
            big = t.entry(r, c) > k
            if big != (c <= base_len[r - 1]):
                raise ValueError("entries above the split are not left-justified")
    first = next((i for i, b in enumerate(base_len) if b), ell)
    if any(b == 0 for b in base_len[first:]):
        raise ValueError("rows above the split are not bottom-aligned")
    mid = tuple(base_len[first:])
    upper_entries = {
        (r, c): t.entry(r, c)
        for (r, c) in sh.cells
        if t.entry(r, c) <= k
    }
    upper = make_tableau(SkewShape(COMPOSITION, sh.outer, mid), upper_entries)
    drop = ell - len(mid)
    lower_entries = {
        (r - drop, c): t.entry(r, c) - k
        for (r, c) in sh.cells
        if t.entry(r, c) > k
    }
    lower = make_tableau(SkewShape(COMPOSITION, mid, sh.inner), lower_entries)
    return upper, lower


def join_split(upper: Tableau, lower: Tableau) -> Tableau:
    """Reassemble the two halves produced by :func:`split_tableau`."""
    if upper.shape.inner != lower.shape.outer:
        raise ValueError("halves do not share the middle shape")
    k = upper.n
    drop = len(upper.shape.outer) - len(lower.shape.outer)
    entries = upper.entries()
    for (r, c), v in lower.entries().items():
        entries[(r + drop, c)] = v + k
    return make_tableau(
        SkewShape(COMPOSITION, upper.shape.outer, lower.shape.inner), entries
    )


def to_json_dict(t: Tableau) -> dict:
    return {
        "kind": t.shape.kind,
        "outer": list(t.shape.outer),
        "inner": list(t.shape.inner) or None,
        "rows": [list(row) for row in t.rows],
    }


def tableau_from_json(d: dict) -> Tableau:
    shape = SkewShape(d["kind"], tuple(d["outer"]), tuple(d.get("inner") or ()))
    rows = tuple(tuple(row) for row in d["rows"])
    return Tableau(shape, rows)
