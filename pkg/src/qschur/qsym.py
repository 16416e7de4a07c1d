"""Graded ring elements, truncated polynomial models, and basis changes.

Elements are sparse integer (or Fraction) combinations over a tagged
basis.  Ring/basis tags:

* ``QSym``: ``M`` (monomial), ``L`` (fundamental), ``S`` (quasi-Schur) —
  indexed by compositions;
* ``Sym``: ``m``, ``s``, ``h`` — indexed by partitions;
* ``NSym``: ``S_star``, ``h_nc`` — indexed by compositions;
* ``NCQSym``: ``M_Pi`` — indexed by set compositions (tuples of disjoint
  increasing tuples).

Polynomial truncations use ``m`` variables; commutative monomials are
exponent vectors of length ``m``, noncommutative ones are words over
``1..m``.  Products of elements are computed through the polynomial model
in enough variables, which is faithful on each graded piece.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from functools import cache

from .compositions import (
    Composition,
    compositions_of,
    is_partition,
    leq,
    strong,
    underlying_partition,
    weak_compositions,
)
from .tableaux import (
    COMPOSITION,
    SkewShape,
    descent_composition,
    enumerate_standard,
)

RING_BASES = {
    "QSym": ("M", "L", "S"),
    "Sym": ("m", "s", "h"),
    "NSym": ("S_star", "h_nc"),
    "NCQSym": ("M_Pi",),
}


def index_degree(index) -> int:
    if index and isinstance(index[0], tuple):
        return sum(len(block) for block in index)
    return sum(index)


def index_key(index):
    """Canonical sort key: weight, then length, then lexicographic."""
    return (index_degree(index), len(index), index)


class GradedElement:
    """A finitely supported combination of basis elements of one ring."""

    __slots__ = ("ring", "basis", "terms")

    def __init__(self, ring: str, basis: str, terms=()):
        if basis not in RING_BASES.get(ring, ()):
            raise ValueError(f"basis {basis!r} does not belong to ring {ring!r}")
        self.ring = ring
        self.basis = basis
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for index, coeff in items:
            if coeff:
                acc[index] = acc.get(index, 0) + coeff
        self.terms = {i: c for i, c in acc.items() if c}

    def _like(self, terms) -> "GradedElement":
        return GradedElement(self.ring, self.basis, terms)

    def _check_compatible(self, other: "GradedElement") -> None:
        if (self.ring, self.basis) != (other.ring, other.basis):
            raise ValueError(
                f"mixing {self.ring}/{self.basis} with {other.ring}/{other.basis}"
            )

    def __add__(self, other: "GradedElement") -> "GradedElement":
        self._check_compatible(other)
        return self._like(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        self._check_compatible(other)
        return self + (-1) * other

    def __rmul__(self, scalar) -> "GradedElement":
        return self._like({i: scalar * c for i, c in self.terms.items()})

    def __neg__(self) -> "GradedElement":
        return (-1) * self

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedElement)
            and (self.ring, self.basis) == (other.ring, other.basis)
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        return hash((self.ring, self.basis, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"<{self.ring} 0>"
        bits = " + ".join(
            f"{c}*{self.basis}_{i}" for i, c in self.sorted_terms()
        )
        return f"<{self.ring} {bits}>"

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: index_key(t[0]))

    def degrees(self) -> set[int]:
        return {index_degree(i) for i in self.terms}

    def degree(self) -> int:
        return max(self.degrees(), default=0)

    def coefficient(self, index):
        return self.terms.get(index, 0)


def element(ring: str, basis: str, terms=()) -> GradedElement:
    return GradedElement(ring, basis, terms)


def basis_element(ring: str, basis: str, index, coeff=1) -> GradedElement:
    return GradedElement(ring, basis, {index: coeff})


def zero(ring: str, basis: str) -> GradedElement:
    return GradedElement(ring, basis)


class TruncatedPolynomial:
    """A polynomial in x_1..x_m, commutative or word-valued."""

    __slots__ = ("m", "commutative", "terms")

    def __init__(self, m: int, commutative: bool, terms=()):
        self.m = m
        self.commutative = commutative
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for mono, coeff in items:
            if coeff:
                acc[mono] = acc.get(mono, 0) + coeff
        self.terms = {k: c for k, c in acc.items() if c}

    def _like(self, terms) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self.m, self.commutative, terms)

    def _check(self, other: "TruncatedPolynomial") -> None:
        if self.m != other.m or self.commutative != other.commutative:
            raise ValueError("polynomial models do not match")

    def __add__(self, other):
        self._check(other)
        return self._like(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        self._check(other)
        return self + (-1) * other

    def __rmul__(self, scalar):
        return self._like({k: scalar * c for k, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        out: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                if self.commutative:
                    key = tuple(x + y for x, y in zip(a, b))
                else:
                    key = a + b
                out[key] = out.get(key, 0) + ca * cb
        return self._like(out)

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedPolynomial)
            and (self.m, self.commutative) == (other.m, other.commutative)
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        kind = "comm" if self.commutative else "words"
        return f"<poly m={self.m} {kind} {len(self.terms)} terms>"

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))


def commutative_monomial(m: int, exponents, coeff=1) -> TruncatedPolynomial:
    return TruncatedPolynomial(m, True, {tuple(exponents): coeff})


def word_monomial(m: int, word, coeff=1) -> TruncatedPolynomial:
    word = tuple(word)
    if any(not 1 <= x <= m for x in word):
        raise ValueError(f"word {word} uses variables outside 1..{m}")
    return TruncatedPolynomial(m, False, {word: coeff})


def let_variables_commute(p: TruncatedPolynomial) -> TruncatedPolynomial:
    """Abelianization: each word becomes its exponent vector."""
    if p.commutative:
        return p
    out: dict = {}
    for word, c in p.terms.items():
        exps = [0] * p.m
        for x in word:
            exps[x - 1] += 1
        key = tuple(exps)
        out[key] = out.get(key, 0) + c
    return TruncatedPolynomial(p.m, True, out)


# ---------------------------------------------------------------------------
# the quasi-Schur basis


@cache
def qs_schur(alpha: Composition) -> GradedElement:
    """The quasi-Schur function of ``alpha`` in the fundamental basis."""
    return skew_qs_schur(alpha, ())


@cache
def skew_qs_schur(gamma: Composition, beta: Composition) -> GradedElement:
    """Fundamental-basis expansion over standard fillings of gamma over beta.

    Zero when ``beta`` is not below ``gamma`` in the cover order.
    """
    if not leq(beta, gamma):
        return zero("QSym", "L")
    shape = SkewShape(COMPOSITION, gamma, beta)
    terms = [(descent_composition(t), 1) for t in enumerate_standard(shape)]
    return GradedElement("QSym", "L", terms)


# ---------------------------------------------------------------------------
# basis conversion


@cache
def _comps(n: int) -> tuple[Composition, ...]:
    return tuple(compositions_of(n))


def _strong_refinements(alpha: Composition):
    """Strong compositions refining ``alpha``: blockwise concatenations."""
    for parts in itertools.product(*(tuple(compositions_of(a)) for a in alpha)):
        out: tuple[int, ...] = ()
        for p in parts:
            out += p
        yield out


def _l_to_m(terms: dict) -> dict:
    out: dict = {}
    for alpha, c in terms.items():
        for beta in _strong_refinements(alpha):
            out[beta] = out.get(beta, 0) + c
    return out


def _m_to_l(terms: dict) -> dict:
    out: dict = {}
    for alpha, c in terms.items():
        for beta in _strong_refinements(alpha):
            sign = -1 if (len(beta) - len(alpha)) % 2 else 1
            out[beta] = out.get(beta, 0) + sign * c
    return out


def _s_to_l(terms: dict) -> dict:
    out: dict = {}
    for alpha, c in terms.items():
        for delta, k in qs_schur(alpha).terms.items():
            out[delta] = out.get(delta, 0) + c * k
    return out


def _solve_exact(matrix, rhs):
    """Gaussian elimination over Fraction; matrix must be invertible."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col])
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


@cache
def _l_to_s_matrix(n: int):
    """Column j holds the fundamental expansion of the quasi-Schur of comp j."""
    comps = _comps(n)
    pos = {c: i for i, c in enumerate(comps)}
    size = len(comps)
    matrix = [[0] * size for _ in range(size)]
    for j, alpha in enumerate(comps):
        for delta, k in qs_schur(alpha).terms.items():
            matrix[pos[delta]][j] = k
    return comps, matrix


def _l_to_s(terms: dict) -> dict:
    out: dict = {}
    by_degree: dict[int, dict] = {}
    for alpha, c in terms.items():
        by_degree.setdefault(sum(alpha), {})[alpha] = c
    for n, part in by_degree.items():
        comps, matrix = _l_to_s_matrix(n)
        rhs = [part.get(c, 0) for c in comps]
        solution = _solve_exact(matrix, rhs)
        for alpha, x in zip(comps, solution):
            if x:
                if x.denominator != 1:
                    raise AssertionError(
                        f"non-integer quasi-Schur coefficient {x} at {alpha}"
                    )
                out[alpha] = out.get(alpha, 0) + int(x)
    return out


@cache
def _schur_in_monomial(lam: Composition) -> dict:
    """m-basis expansion of the Schur function of ``lam`` (as a dict)."""
    total = zero("QSym", "M")
    for alpha in _comps(sum(lam)):
        if underlying_partition(alpha) == lam:
            total = total + convert(qs_schur(alpha), "M")
    out = {}
    for index, c in total.terms.items():
        if is_partition(index):
            out[index] = c
    return out


def _distinct_rearrangements(lam: Composition) -> int:
    counts = Counter(lam)
    total = math.factorial(len(lam))
    for v in counts.values():
        total //= math.factorial(v)
    return total


def convert(f: GradedElement, basis: str) -> GradedElement:
    """Rewrite ``f`` in another basis of the same ring (exactly)."""
    if basis == f.basis:
        return GradedElement(f.ring, basis, dict(f.terms))
    if f.ring == "QSym":
        routes = {
            ("L", "M"): lambda t: _l_to_m(t),
            ("M", "L"): lambda t: _m_to_l(t),
            ("S", "L"): lambda t: _s_to_l(t),
            ("L", "S"): lambda t: _l_to_s(t),
            ("S", "M"): lambda t: _l_to_m(_s_to_l(t)),
            ("M", "S"): lambda t: _l_to_s(_m_to_l(t)),
        }
        if (f.basis, basis) not in routes:
            raise ValueError(f"no conversion {f.basis} -> {basis} in QSym")
        return GradedElement("QSym", basis, routes[(f.basis, basis)](f.terms))
    if f.ring == "Sym":
        if (f.basis, basis) == ("s", "m"):
            out: dict = {}
            for lam, c in f.terms.items():
                for mu, k in _schur_in_monomial(lam).items():
                    out[mu] = out.get(mu, 0) + c * k
            return GradedElement("Sym", "m", out)
        if (f.basis, basis) == ("m", "s"):
            remaining = dict(f.terms)
            out = {}
            while remaining:
                lam = max(remaining, key=lambda i: (sum(i), i))
                c = remaining[lam]
                out[lam] = out.get(lam, 0) + c
                for mu, k in _schur_in_monomial(lam).items():
                    val = remaining.get(mu, 0) - c * k
                    if val:
                        remaining[mu] = val
                    else:
                        remaining.pop(mu, None)
            return GradedElement("Sym", "s", out)
        raise ValueError(f"no conversion {f.basis} -> {basis} in Sym")
    raise ValueError(f"no conversions within ring {f.ring}")


def sym_to_qsym(f: GradedElement) -> GradedElement:
    """The inclusion of symmetric functions, landing in the M basis."""
    if f.ring != "Sym":
        raise ValueError("expected a Sym element")
    if f.basis == "h":
        raise ValueError("expand h through to_polynomial; inclusion needs m or s")
    if f.basis == "s":
        f = convert(f, "m")
    terms: dict = {}
    for lam, c in f.terms.items():
        for alpha in _comps(sum(lam)):
            if underlying_partition(alpha) == lam:
                terms[alpha] = terms.get(alpha, 0) + c
    return GradedElement("QSym", "M", terms)


# ---------------------------------------------------------------------------
# polynomial realization


def to_polynomial(f: GradedElement, m: int) -> TruncatedPolynomial:
    """Evaluate ``f`` at (x_1, ..., x_m, 0, 0, ...)."""
    if f.ring == "Sym":
        if f.basis == "h":
            out = TruncatedPolynomial(m, True, {})
            for lam, c in f.terms.items():
                prod = TruncatedPolynomial(m, True, {(0,) * m: 1})
                for part in lam:
                    factor = TruncatedPolynomial(
                        m, True, {g: 1 for g in weak_compositions(part, m)}
                    )
                    prod = prod * factor
                out = out + c * prod
            return out
        f = sym_to_qsym(f)
    if f.ring != "QSym":
        raise ValueError(f"no polynomial model for ring {f.ring}")
    f = convert(f, "M")
    terms: dict = {}
    for alpha, c in f.terms.items():
        if len(alpha) > m:
            continue
        for positions in itertools.combinations(range(m), len(alpha)):
            exps = [0] * m
            for p, part in zip(positions, alpha):
                exps[p] = part
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + c
    return TruncatedPolynomial(m, True, terms)


def from_polynomial(p: TruncatedPolynomial, n: int) -> GradedElement:
    """Recover the M-basis element whose evaluation is ``p``.

    ``p`` must be quasisymmetric in its ``m`` variables with m at least the
    degree; otherwise a ValueError names an offending pair of monomials.
    """
    if not p.commutative:
        raise ValueError("expected a commutative polynomial")
    top = max((sum(k) for k in p.terms), default=0)
    if p.m < max(top, n):
        raise ValueError(f"need at least {max(top, n)} variables, have {p.m}")

    def monomial_str(exps) -> str:
        return (
            "".join(f"x{i + 1}^{e}" for i, e in enumerate(exps) if e) or "1"
        )

    seen: dict[Composition, tuple] = {}
    for exps, c in p.terms.items():
        alpha = strong(exps)
        seen.setdefault(alpha, exps)
    terms: dict = {}
    for alpha, witness in seen.items():
        placements = []
        for positions in itertools.combinations(range(p.m), len(alpha)):
            exps = [0] * p.m
            for pos, part in zip(positions, alpha):
                exps[pos] = part
            placements.append(tuple(exps))
        coeffs = {key: p.terms.get(key, 0) for key in placements}
        values = set(coeffs.values())
        if len(values) > 1:
            good = seen[alpha]
            bad = next(k for k, v in coeffs.items() if v != p.terms.get(good, 0))
            raise ValueError(
                "not quasisymmetric: "
                f"{monomial_str(good)} has coefficient {p.terms.get(good, 0)} "
                f"but {monomial_str(bad)} has {coeffs[bad]}"
            )
        coeff = values.pop()
        if coeff:
            terms[alpha] = coeff
    return GradedElement("QSym", "M", terms)


# ---------------------------------------------------------------------------
# products and coproducts


def multiply(f: GradedElement, g: GradedElement) -> GradedElement:
    """Product computed through the polynomial model.

    QSym inputs give an M-basis result; Sym inputs give an m-basis result.
    """
    if f.ring != g.ring:
        raise ValueError("cannot multiply across rings")
    if f.ring == "Sym":
        product = multiply(sym_to_qsym(f), sym_to_qsym(g))
        out = {}
        for alpha, c in product.terms.items():
            if is_partition(alpha):
                out[alpha] = c
        return GradedElement("Sym", "m", out)
    if f.ring != "QSym":
        raise ValueError(f"no polynomial product for ring {f.ring}")
    m = f.degree() + g.degree()
    m = max(m, 1)
    p = to_polynomial(f, m) * to_polynomial(g, m)
    return from_polynomial(p, m)


def _deconcatenations(alpha: Composition):
    for i in range(len(alpha) + 1):
        yield alpha[:i], alpha[i:]


def _near_deconcatenations(alpha: Composition):
    for i, part in enumerate(alpha):
        for a in range(1, part):
            yield alpha[: i] + (a,), (part - a,) + alpha[i + 1 :]


def coproduct(f: GradedElement) -> dict:
    """Coproduct as a dict (left index, right index) -> coefficient.

    Supports the QSym bases: deconcatenations for M, deconcatenations plus
    near-deconcatenations for L, and skew expansion for S.
    """
    if f.ring != "QSym":
        raise ValueError("coproduct implemented on QSym")
    out: dict = {}

    def add(left, right, c):
        if c:
            out[(left, right)] = out.get((left, right), 0) + c
            if not out[(left, right)]:
                del out[(left, right)]

    for alpha, c in f.terms.items():
        if f.basis == "M":
            for left, right in _deconcatenations(alpha):
                add(left, right, c)
        elif f.basis == "L":
            for left, right in _deconcatenations(alpha):
                add(left, right, c)
            for left, right in _near_deconcatenations(alpha):
                add(left, right, c)
        else:
            for beta in _all_lower(alpha):
                skew = convert(skew_qs_schur(alpha, beta), "S")
                for idx, k in skew.terms.items():
                    add(idx, beta, c * k)
    return out


@cache
def _all_lower(gamma: Composition) -> tuple[Composition, ...]:
    """Every composition below ``gamma`` in the cover order (incl. both ends)."""
    out = []
    for n in range(sum(gamma) + 1):
        for beta in compositions_of(n):
            if leq(beta, gamma):
                out.append(beta)
    return tuple(out)


# ---------------------------------------------------------------------------
# symmetry tests


def is_symmetric(f: GradedElement) -> bool:
    """Whether a QSym element is invariant under rearranging its indices."""
    if f.ring == "Sym":
        return True
    g = convert(f, "M")
    by_partition: dict[Composition, list] = {}
    for alpha, c in g.terms.items():
        by_partition.setdefault(underlying_partition(alpha), []).append(c)
    for lam, coeffs in by_partition.items():
        if len(set(coeffs)) != 1:
            return False
        if len(coeffs) != _distinct_rearrangements(lam):
            return False
    return True


def schur_expansion(f: GradedElement) -> GradedElement:
    """Expand a symmetric element in the Schur basis (exactly)."""
    if f.ring == "Sym":
        return convert(f, "s")
    if not is_symmetric(f):
        raise ValueError("element is not symmetric")
    g = convert(f, "M")
    mono: dict = {}
    for alpha, c in g.terms.items():
        if is_partition(alpha):
            mono[alpha] = c
    return convert(GradedElement("Sym", "m", mono), "s")


# ---------------------------------------------------------------------------
# JSON forms


def _index_to_json(index):
    if index and isinstance(index[0], tuple):
        return [list(block) for block in index]
    return list(index)


def _index_from_json(raw):
    if raw and isinstance(raw[0], list):
        return tuple(tuple(block) for block in raw)
    return tuple(raw)


def _coeff_to_json(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return {"numerator": c.numerator, "denominator": c.denominator}
    return c


def element_to_json(f: GradedElement) -> dict:
    return {
        "ring": f.ring,
        "basis": f.basis,
        "terms": [
            {"index": _index_to_json(i), "coeff": _coeff_to_json(c)}
            for i, c in f.sorted_terms()
        ],
    }


def element_from_json(d: dict) -> GradedElement:
    def coeff(raw):
        if isinstance(raw, dict):
            return Fraction(raw["numerator"], raw["denominator"])
        return raw

    return GradedElement(
        d["ring"],
        d["basis"],
        [(_index_from_json(t["index"]), coeff(t["coeff"])) for t in d["terms"]],
    )
