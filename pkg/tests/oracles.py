"""Brute-force reference implementations used to pin down expected values.

Everything here is written directly from the defining conditions and knows
nothing about the package internals: tableaux are dicts mapping (row, column)
cells to entries, polynomials are dicts mapping exponent vectors (or words)
to coefficients.
"""

from __future__ import annotations

import itertools


def composition_cells(gamma, beta):
    """Skew cells of a composition diagram, inner rows aligned at the bottom."""
    offset = len(gamma) - len(beta)
    inner = {}
    for r, part in enumerate(beta, start=1):
        for c in range(1, part + 1):
            inner[(offset + r, c)] = True
    cells = []
    for r, part in enumerate(gamma, start=1):
        for c in range(1, part + 1):
            if (r, c) not in inner:
                cells.append((r, c))
    return cells, inner


def partition_cells(nu, mu):
    """Skew cells of a partition diagram, inner rows aligned at the top."""
    inner = {}
    for r, part in enumerate(mu, start=1):
        for c in range(1, part + 1):
            inner[(r, c)] = True
    cells = []
    for r, part in enumerate(nu, start=1):
        for c in range(1, part + 1):
            if (r, c) not in inner:
                cells.append((r, c))
    return cells, inner


def is_ssct_filling(gamma, beta, filling):
    """The three semistandard conditions, straight from the definition."""
    cells, inner = composition_cells(gamma, beta)
    outer = {(r, c) for r, part in enumerate(gamma, start=1) for c in range(1, part + 1)}

    def entry(cell):
        return filling.get(cell)

    # rows weakly decreasing
    for r, c in cells:
        if (r, c + 1) in filling and filling[(r, c + 1)] > filling[(r, c)]:
            return False
    # first column strictly increasing downward
    first = [filling[(r, 1)] for r in range(1, len(gamma) + 1) if (r, 1) in filling]
    if any(a >= b for a, b in zip(first, first[1:])):
        return False
    # attacking triples
    for i, k in outer:
        for j in range(i + 1, len(gamma) + 1):
            target = (j, k + 1)
            if target not in filling or (i, k + 1) in inner:
                continue  # (i, k) does not attack (j, k + 1)
            if (i, k) in inner or filling[target] <= entry((i, k)):
                right = (i, k + 1)
                if right not in filling or not filling[target] < filling[right]:
                    return False
    return True


def is_ssrt_filling(nu, mu, filling):
    for r, c in filling:
        if (r, c + 1) in filling and filling[(r, c + 1)] > filling[(r, c)]:
            return False
        if (r + 1, c) in filling and filling[(r + 1, c)] >= filling[(r, c)]:
            return False
    return True


def _fillings(cells, max_entry):
    for values in itertools.product(range(1, max_entry + 1), repeat=len(cells)):
        yield dict(zip(cells, values))


def brute_ssct(gamma, beta, max_entry):
    cells, _ = composition_cells(gamma, beta)
    return [
        f for f in _fillings(cells, max_entry) if is_ssct_filling(gamma, beta, f)
    ]


def brute_sct(gamma, beta):
    cells, _ = composition_cells(gamma, beta)
    out = []
    for perm in itertools.permutations(range(1, len(cells) + 1)):
        f = dict(zip(cells, perm))
        if is_ssct_filling(gamma, beta, f):
            out.append(f)
    return out


def brute_ssrt(nu, mu, max_entry):
    cells, _ = partition_cells(nu, mu)
    return [f for f in _fillings(cells, max_entry) if is_ssrt_filling(nu, mu, f)]


def brute_srt(nu, mu):
    cells, _ = partition_cells(nu, mu)
    out = []
    for perm in itertools.permutations(range(1, len(cells) + 1)):
        f = dict(zip(cells, perm))
        if is_ssrt_filling(nu, mu, f):
            out.append(f)
    return out


def filling_content(filling, m):
    exp = [0] * m
    for v in filling.values():
        exp[v - 1] += 1
    return tuple(exp)


# --- exact polynomial dictionaries ---------------------------------------


def poly_add(p, q):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + v
        if not out[k]:
            del out[k]
    return out


def poly_mul(p, q, commutative=True):
    out = {}
    for a, ca in p.items():
        for b, cb in q.items():
            key = tuple(x + y for x, y in zip(a, b)) if commutative else a + b
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def monomial_quasi_poly(alpha, m):
    """Placements of the parts of alpha on strictly increasing variables."""
    out = {}
    for positions in itertools.combinations(range(m), len(alpha)):
        exp = [0] * m
        for pos, part in zip(positions, alpha):
            exp[pos] = part
        out[tuple(exp)] = out.get(tuple(exp), 0) + 1
    return out


def fundamental_poly(alpha, m):
    """Words weakly increasing, strictly at the partial sums of alpha."""
    n = sum(alpha)
    strict = set(itertools.accumulate(alpha[:-1]))
    out = {}
    for word in itertools.combinations_with_replacement(range(1, m + 1), n):
        if any(word[j - 1] >= word[j] for j in strict):
            continue
        exp = [0] * m
        for v in word:
            exp[v - 1] += 1
        out[tuple(exp)] = out.get(tuple(exp), 0) + 1
    return out


def schur_poly(lam, m):
    out = {}
    for f in brute_ssrt(lam, (), m):
        exp = filling_content(f, m)
        out[exp] = out.get(exp, 0) + 1
    return out


def qschur_poly(alpha, m):
    out = {}
    for f in brute_ssct(alpha, (), m):
        exp = filling_content(f, m)
        out[exp] = out.get(exp, 0) + 1
    return out


def schur_expand(poly, m):
    """Schur coefficients of a symmetric polynomial, by peeling leading terms.

    Only faithful when the polynomial is symmetric in at least as many
    variables as its degree.
    """
    rest = dict(poly)
    out = {}
    while rest:
        lead = max(rest)
        lam = tuple(sorted((e for e in lead if e), reverse=True))
        coeff = rest[lead]
        out[lam] = coeff
        rest = poly_add(rest, {k: -coeff * v for k, v in schur_poly(lam, m).items()})
    return out


def classical_lr_oracle(lam, mu, nu):
    m = sum(lam) + sum(mu)
    if m == 0:
        return 1 if nu == () else 0
    product = poly_mul(schur_poly(lam, m), schur_poly(mu, m))
    return schur_expand(product, m).get(nu, 0)


# --- reverse row insertion -------------------------------------------------


def insert_word(word):
    """Row insertion for reverse tableaux: bump the first strictly smaller
    entry, append when none exists.  Returns the rows as a tuple of tuples."""
    rows: list[list[int]] = []
    for letter in word:
        k = letter
        for row in rows:
            spot = next((i for i, v in enumerate(row) if v < k), None)
            if spot is None:
                row.append(k)
                k = None
                break
            row[spot], k = k, row[spot]
        if k is not None:
            rows.append([k])
    return tuple(tuple(r) for r in rows)


def shuffles(u, v):
    if not u or not v:
        yield u + v
        return
    for tail in shuffles(u[1:], v):
        yield (u[0],) + tail
    for tail in shuffles(u, v[1:]):
        yield (v[0],) + tail
