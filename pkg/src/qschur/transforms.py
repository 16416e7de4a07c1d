"""Bijections and moves connecting composition and partition fillings.

``pack_columns`` / ``unpack_columns`` exchange straight composition
fillings with straight partition fillings by sorting columns; the skew
variants replay column sequences through the respective growth orders.
Insertion, rectification, and the (dual) Knuth moves live here too.
"""

from __future__ import annotations

from .compositions import (
    ChainStep,
    Composition,
    underlying_partition,
)
from .tableaux import (
    COMPOSITION,
    PARTITION,
    SkewShape,
    Tableau,
    chain_to_tableau,
    colseq,
    column_word,
    destandardize,
    enumerate_standard,
    make_tableau,
    standardize,
    straight,
)

Word = tuple[int, ...]


def _require_straight(t: Tableau, kind: str) -> None:
    if t.shape.kind != kind or t.shape.inner != ():
        raise ValueError(f"expected a straight {kind}-shape tableau")


def pack_columns(t: Tableau) -> Tableau:
    """Sort each column into decreasing order, top-justified.

    Sends a straight composition filling to the partition filling of the
    underlying partition shape; inverse of :func:`unpack_columns`.
    """
    _require_straight(t, COMPOSITION)
    cols: dict[int, list[int]] = {}
    for (r, c) in t.shape.cells:
        cols.setdefault(c, []).append(t.entry(r, c))
    for col in cols.values():
        col.sort(reverse=True)
    lam = underlying_partition(t.shape.outer)
    rows = tuple(
        tuple(cols[c][r] for c in range(1, lam[r] + 1)) for r in range(len(lam))
    )
    return Tableau(straight(PARTITION, lam), rows)


def unpack_columns(t: Tableau) -> Tableau:
    """Rebuild the composition filling whose sorted columns give ``t``.

    The first column, sorted increasingly, seeds the rows; later columns
    are placed in decreasing order, each entry going to the highest row of
    the right current length whose last entry can sit to its left.
    """
    _require_straight(t, PARTITION)
    cols: dict[int, list[int]] = {}
    for (r, c) in t.shape.cells:
        cols.setdefault(c, []).append(t.entry(r, c))
    rows = [[e] for e in sorted(cols.get(1, []))]
    for c in range(2, len(cols) + 1):
        for e in sorted(cols[c], reverse=True):
            for row in rows:
                if len(row) == c - 1 and row[-1] >= e:
                    row.append(e)
                    break
            else:
                raise ValueError(f"entry {e} in column {c} has no valid row")
    shape = tuple(len(row) for row in rows)
    return Tableau(straight(COMPOSITION, shape), tuple(tuple(r) for r in rows))


def pack_columns_skew(t: Tableau) -> Tableau:
    """Skew analogue of :func:`pack_columns`.

    The column sequence of the standardization is replayed as a growth
    chain of partition diagrams over the underlying partition of the inner
    shape: column 1 appends a new bottom row, column j > 1 extends the
    topmost row of length j - 1.
    """
    if t.shape.kind != COMPOSITION:
        raise ValueError("expected a composition-shape tableau")
    that, tau = standardize(t)
    seq = colseq(that)
    n = that.n
    mu = underlying_partition(t.shape.inner)
    lengths = list(mu)
    entries: dict[tuple[int, int], int] = {}
    for idx, j in enumerate(seq):
        entry = n - idx
        if j == 1:
            lengths.append(1)
            entries[(len(lengths), 1)] = entry
        else:
            for r, length in enumerate(lengths):
                if length == j - 1:
                    lengths[r] += 1
                    entries[(r + 1, j)] = entry
                    break
            else:
                raise ValueError(f"column sequence {seq} is not a partition growth")
    partner = make_tableau(SkewShape(PARTITION, tuple(lengths), mu), entries)
    return partner if t.is_standard() else destandardize(partner, tau)


def unpack_columns_skew(t: Tableau, beta: Composition) -> Tableau:
    """Inverse of :func:`pack_columns_skew` over the composition base ``beta``.

    Requires the inner shape of ``t`` to be the underlying partition of
    ``beta``; the column sequence is replayed through the composition cover
    order instead (column 1 prepends a row, column j > 1 extends the first
    part of size j - 1).
    """
    if t.shape.kind != PARTITION:
        raise ValueError("expected a partition-shape tableau")
    if underlying_partition(beta) != t.shape.inner:
        raise ValueError(
            f"base {beta} does not have underlying partition {t.shape.inner}"
        )
    that, tau = standardize(t)
    seq = colseq(that)
    current = beta
    steps: list[ChainStep] = []
    for j in seq:
        if j == 1:
            step = ChainStep("prepend-row-1", 1, 1)
        else:
            for r, part in enumerate(current):
                if part == j - 1:
                    step = ChainStep("extend-row", r + 1, j)
                    break
            else:
                raise ValueError(f"column sequence {seq} does not grow from {beta}")
        steps.append(step)
        current = (1,) + current if j == 1 else (
            current[: step.row - 1] + (j,) + current[step.row :]
        )
    partner = chain_to_tableau(beta, tuple(steps))
    return partner if t.is_standard() else destandardize(partner, tau)


def insert_ssrt(t: Tableau, k: int) -> tuple[Tableau, tuple[int, int]]:
    """Row-insert ``k`` into a straight partition filling.

    Scanning each row, ``k`` bumps the first entry strictly smaller than
    it, or lands at the end of the row.  Returns the new tableau and the
    cell that was created.
    """
    _require_straight(t, PARTITION)
    rows = [list(row) for row in t.rows]
    cur = k
    for r, row in enumerate(rows):
        for i, x in enumerate(row):
            if x < cur:
                row[i], cur = cur, x
                break
        else:
            row.append(cur)
            new_cell = (r + 1, len(row))
            break
    else:
        rows.append([cur])
        new_cell = (len(rows), 1)
    shape = tuple(len(row) for row in rows)
    return Tableau(straight(PARTITION, shape), tuple(tuple(r) for r in rows)), new_cell


def rsk(word: Word) -> tuple[Tableau, Tableau]:
    """Insert a word letter by letter.

    Returns (P, Q) where P is the insertion tableau (a straight partition
    filling) and Q records, in the cell created at step t, the label t.
    """
    p = Tableau(straight(PARTITION, ()), ())
    q_entries: dict[tuple[int, int], int] = {}
    for step, letter in enumerate(word, start=1):
        p, cell = insert_ssrt(p, letter)
        q_entries[cell] = step
    q = make_tableau(straight(PARTITION, p.shape.outer), q_entries)
    return p, q


def insertion_tableau(word: Word) -> Tableau:
    return rsk(word)[0]


def insert_ssct(t: Tableau, k: int) -> Tableau:
    """Insert ``k`` into a straight composition filling.

    Cells of the enclosing rectangle (one column wider than the longest
    row) are scanned down successive columns from the right.  The carried
    value settles into the first empty end-of-row cell that keeps its row
    weakly decreasing, bumping smaller entries along the way; a carry that
    survives to column 1 starts a new row placed to keep the first column
    increasing.
    """
    _require_straight(t, COMPOSITION)
    rows = [list(row) for row in t.rows]
    m = max((len(row) for row in rows), default=0)
    z = k
    for j in range(m + 1, 1, -1):
        for row in rows:
            if len(row) == j - 1 and z <= row[j - 2]:
                row.append(z)
                shape = tuple(len(r) for r in rows)
                return Tableau(straight(COMPOSITION, shape), tuple(tuple(r) for r in rows))
            if len(row) >= j and row[j - 1] < z <= row[j - 2]:
                row[j - 1], z = z, row[j - 1]
    p = 0
    while p < len(rows) and rows[p][0] < z:
        p += 1
    if p < len(rows) and rows[p][0] == z:
        raise ValueError(f"cannot start a new row: {z} repeats in the first column")
    rows.insert(p, [z])
    shape = tuple(len(r) for r in rows)
    return Tableau(straight(COMPOSITION, shape), tuple(tuple(r) for r in rows))


def rect(t: Tableau, cross_check: bool = False) -> Tableau:
    """Rectify a composition filling to a straight one.

    Computed by inserting the column word into an empty partition filling
    and unpacking its columns.  With ``cross_check`` the same word is also
    folded through :func:`insert_ssct` and the results must agree.
    """
    if t.shape.kind != COMPOSITION:
        raise ValueError("rectification applies to composition-shape tableaux")
    word = column_word(t)
    out = unpack_columns(insertion_tableau(word))
    if cross_check:
        alt = Tableau(straight(COMPOSITION, ()), ())
        for letter in word:
            alt = insert_ssct(alt, letter)
        if alt != out:
            raise AssertionError(
                f"rectification mismatch for {word}: {out.rows} vs {alt.rows}"
            )
    return out


def c_shape(t: Tableau, cross_check: bool = False) -> Composition:
    """Shape of the rectification."""
    return rect(t, cross_check=cross_check).shape.outer


def p_shape(t: Tableau) -> Composition:
    """Partition shape of the insertion tableau of the column word."""
    return insertion_tableau(column_word(t)).shape.outer


def word_c_shape(word: Word) -> Composition:
    return unpack_columns(insertion_tableau(word)).shape.outer


def p_move(word: Word, k: int) -> Word:
    """Elementary Knuth move on positions k, k+1, k+2 (1-based).

    Raises ValueError when no move applies at that window.
    """
    if not 1 <= k <= len(word) - 2:
        raise ValueError(f"window {k} out of range for word of length {len(word)}")
    x, y, z = word[k - 1], word[k], word[k + 1]
    out = list(word)
    if x < z < y or y < z < x:
        out[k - 1], out[k] = y, x
    elif y < x < z or z < x < y:
        out[k], out[k + 1] = z, y
    else:
        raise ValueError(f"no Knuth move applies at window {k} of {word}")
    return tuple(out)


def q_move(word: Word, k: int) -> Word:
    """Elementary dual Knuth move on the values k, k+1, k+2.

    Writing the positions of these three values left to right, the move
    exchanges the letters at the two outer positions; it applies only when
    the middle position does not hold k+1.
    """
    pos: dict[int, int] = {}
    for i, x in enumerate(word):
        if x in (k, k + 1, k + 2):
            if x in pos:
                raise ValueError(f"value {x} repeats; dual move undefined")
            pos[x] = i
    if len(pos) != 3:
        raise ValueError(f"values {k}..{k + 2} must all occur in {word}")
    left, mid, right = sorted(pos.values())
    if word[mid] == k + 1:
        raise ValueError(f"dual move q_{k} does not apply to {word}")
    out = list(word)
    out[left], out[right] = out[right], out[left]
    return tuple(out)


def c_equivalent(w1: Word, w2: Word) -> bool:
    """Same recording tableau and same rectified composition shape."""
    if len(w1) != len(w2):
        return False
    p1, q1 = rsk(w1)
    p2, q2 = rsk(w2)
    if q1 != q2:
        return False
    return unpack_columns(p1).shape.outer == unpack_columns(p2).shape.outer


def c_class(word: Word) -> frozenset[Word]:
    """The equivalence class of ``word`` under :func:`c_equivalent`.

    Explored by dual Knuth moves restricted to words of the same rectified
    shape; dual moves preserve the recording tableau, and the restricted
    move graph reaches the whole class.
    """
    target = word_c_shape(word)
    seen = {word}
    frontier = [word]
    while frontier:
        w = frontier.pop()
        for k in range(1, len(w) - 1):
            try:
                nxt = q_move(w, k)
            except ValueError:
                continue
            if nxt not in seen and word_c_shape(nxt) == target:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def standard_words_of_shape(alpha: Composition) -> frozenset[Word]:
    """Column words of all standard composition fillings of ``alpha``."""
    return frozenset(
        column_word(t) for t in enumerate_standard(straight(COMPOSITION, alpha))
    )


def restricted_move_components(alpha: Composition) -> tuple[bool, int]:
    """Connectivity of the dual-move graph on the words of shape ``alpha``.

    Vertices are the column words of standard fillings of ``alpha``; edges
    are dual Knuth moves whose result stays in the vertex set.  Returns
    (connected, number of components).
    """
    words = standard_words_of_shape(alpha)
    if not words:
        return True, 0
    unseen = set(words)
    components = 0
    while unseen:
        components += 1
        start = unseen.pop()
        frontier = [start]
        while frontier:
            w = frontier.pop()
            for k in range(1, len(w) - 1):
                try:
                    nxt = q_move(w, k)
                except ValueError:
                    continue
                if nxt in unseen:
                    unseen.remove(nxt)
                    frontier.append(nxt)
    return components <= 1, components


def is_rigid_row_pair(t: Tableau, r: int) -> bool:
    """Whether rows r, r+1 form a rigid pair.

    The rows must have different lengths and every triple
    ((r, j), (r, j+1), (r+1, j)) for j up to the length of row r+1 must be
    rigid: the first triple's entries are three consecutive values, and
    later triples satisfy T(r+1, j) < T(r, j+1).
    """
    sh = t.shape
    if not 1 <= r < len(sh.outer):
        raise ValueError(f"rows {r}, {r + 1} not both present")
    if sh.outer[r - 1] == sh.outer[r]:
        return False
    for j in range(1, sh.outer[r] + 1):
        if j == 1:
            cells = [(r, 1), (r, 2), (r + 1, 1)]
            if not all(sh.in_skew(*cell) for cell in cells):
                return False
            vals = sorted(t.entry(*cell) for cell in cells)
            if not (len(set(vals)) == 3 and vals[2] - vals[0] == 2):
                return False
        else:
            if not (sh.in_skew(r + 1, j) and sh.in_skew(r, j + 1)):
                return False
            if not t.entry(r + 1, j) < t.entry(r, j + 1):
                return False
    return True
