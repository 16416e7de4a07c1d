import itertools
import math
from fractions import Fraction

import pytest

from qschur.applications import (
    chi_nc,
    descent_pieri_K,
    knuth_class,
    kostka,
    labeled_chains,
    lift,
    m_pi_nc,
    m_pi_sym,
    ncqsym_to_polynomial,
    nsym_image,
    nsym_image_sum,
    pr_product,
    pr_product_words,
    project,
    qs_rs,
    s_rs,
    set_compositions,
    shape_of_blocks,
)
from qschur.compositions import compositions_of
from qschur.nsym import product_nc_schur
from qschur.qsym import (
    GradedElement,
    basis_element,
    qs_schur,
    skew_qs_schur,
    to_polynomial,
)
from qschur.tableaux import COMPOSITION, PARTITION, content, from_rows, straight
from qschur.tableaux import enumerate_semistandard

from oracles import brute_ssct, filling_content, insert_word, shuffles


def test_pr_product_golden():
    t1 = from_rows(PARTITION, [[3, 2], [1]])
    t2 = from_rows(PARTITION, [[3, 2, 1]])
    terms = pr_product(t1, t2)
    assert len(terms) == 4
    assert {t.rows for t in terms} == {
        ((6, 5, 3, 2, 1), (4,)),
        ((6, 5, 2, 1), (4, 3)),
        ((6, 5, 2, 1), (4,), (3,)),
        ((6, 5, 1), (4, 2), (3,)),
    }


def test_pr_image_is_anti_morphism_golden():
    t1 = from_rows(PARTITION, [[3, 2], [1]])
    t2 = from_rows(PARTITION, [[3, 2, 1]])
    image = nsym_image_sum(pr_product(t1, t2))
    assert nsym_image(t2) == basis_element("NSym", "S_star", (3,))
    assert nsym_image(t1) == basis_element("NSym", "S_star", (1, 2))
    assert image == product_nc_schur((3,), (1, 2))
    assert image.terms == {(1, 5): 1, (4, 2): 1, (1, 1, 4): 1, (3, 1, 2): 1}


def oracle_classes(n):
    classes: dict = {}
    for w in itertools.permutations(range(1, n + 1)):
        classes.setdefault(insert_word(w), []).append(w)
    return classes


def test_pr_product_matches_word_shuffles():
    t1 = from_rows(PARTITION, [[1]])
    t2 = from_rows(PARTITION, [[3, 1], [2]])
    n = 3
    census: dict = {}
    total = 0
    for u in oracle_classes(1)[insert_word((1,))]:
        shifted = tuple(x + n for x in u)
        for v in oracle_classes(3)[tuple(t2.rows)]:
            for w in shuffles(shifted, v):
                census[insert_word(w)] = census.get(insert_word(w), 0) + 1
                total += 1
    terms = pr_product(t1, t2)
    assert set(census) == {tuple(t.rows) for t in terms}
    big = oracle_classes(4)
    for t in terms:
        assert census[tuple(t.rows)] == len(big[tuple(t.rows)])
    assert total == 1 * 2 * math.comb(4, 1)

    counts, package_total = pr_product_words(t1, t2)
    assert package_total == total
    assert {tuple(t.rows): c for t, c in counts.items()} == census


def test_knuth_class_golden():
    t = from_rows(PARTITION, [[3, 1], [2]])
    assert set(knuth_class(t)) == {(2, 3, 1), (2, 1, 3)}
    row = from_rows(PARTITION, [[2, 1]])
    assert knuth_class(row) == ((2, 1),)


def test_knuth_classes_partition_permutations():
    n = 4
    seen = [w for w in itertools.permutations(range(1, n + 1))]
    grouped: dict = {}
    for w in seen:
        grouped.setdefault(insert_word(w), []).append(w)
    covered = set()
    for rows in grouped:
        t = from_rows(PARTITION, [list(r) for r in rows])
        covered.update(knuth_class(t))
    assert covered == set(seen)


def test_pr_product_rejects_skew_input():
    skew = from_rows(PARTITION, [[None, 2], [1]])
    straight_row = from_rows(PARTITION, [[1]])
    with pytest.raises(ValueError):
        pr_product(skew, straight_row)


def test_set_composition_counts_are_ordered_bell():
    assert [len(set_compositions(n)) for n in range(5)] == [1, 1, 3, 13, 75]
    assert set(set_compositions(2)) == {((1,), (2,)), ((2,), (1,)), ((1, 2),)}


def test_shape_of_blocks():
    assert shape_of_blocks(((2,), (1, 3))) == (1, 2)
    assert shape_of_blocks(()) == ()


def test_nc_monomial_golden():
    p = m_pi_nc(((2,), (1, 3)), 3)
    assert p.terms == {(2, 1, 2): 1, (3, 1, 3): 1, (3, 2, 3): 1}
    assert not p.commutative


def test_symmetric_nc_monomial_ignores_block_order():
    pi = ((2,), (1, 3))
    swapped = ((1, 3), (2,))
    assert m_pi_sym(pi, 3) != m_pi_nc(pi, 3)
    for word in m_pi_nc(pi, 3).terms:
        assert word in m_pi_sym(pi, 3).terms
    assert m_pi_sym(pi, 3).terms.keys() == {
        (b, a, b) for a, b in itertools.permutations((1, 2, 3), 2)
    }
    assert m_pi_sym(swapped, 3) == m_pi_sym(pi, 3)


def test_kostka_counts_fillings_with_content():
    assert kostka((2, 1), (1, 1, 1)) == 1
    assert kostka((2, 1), (2, 1)) == 1
    assert kostka((1, 2), (1, 1, 1)) == 1
    assert kostka((2,), (1, 1)) == 1
    assert kostka((2, 1), (3,)) == 0
    assert kostka((2, 1), (1, 1)) == 0


def test_kostka_matches_brute_enumeration():
    for alpha in [(2, 1), (1, 2), (3,), (1, 1, 1), (2, 2)]:
        n = sum(alpha)
        for beta_weak in itertools.product(range(n + 1), repeat=3):
            if sum(beta_weak) != n:
                continue
            expected = sum(
                1
                for f in brute_ssct(alpha, (), 3)
                if filling_content(f, 3) == beta_weak
            )
            assert kostka(alpha, beta_weak) == expected


def test_qs_rs_golden():
    p = qs_rs((1, 2), 2)
    assert p.terms == {(1, 2, 2): 2, (2, 1, 2): 2, (2, 2, 1): 2}


def test_schur_analogue_sums_rearrangements():
    lam = (2, 1)
    total = qs_rs((2, 1), 3) + qs_rs((1, 2), 3)
    assert s_rs(lam, 3) == total


def test_projection_recovers_quasi_schur():
    for alpha in [(1,), (2,), (1, 1), (2, 1), (1, 2), (1, 1, 1)]:
        n = sum(alpha)
        for m in (n, n + 1):
            scaled = chi_nc(qs_rs(alpha, m))
            expected = math.factorial(n) * to_polynomial(qs_schur(alpha), m)
            assert scaled == expected


def test_lift_golden():
    f = basis_element("QSym", "M", (1, 1))
    lifted = lift(f)
    assert lifted.terms == {
        ((1,), (2,)): Fraction(1, 2),
        ((2,), (1,)): Fraction(1, 2),
    }


def test_lift_then_project_is_identity():
    f = GradedElement(
        "QSym", "M", {(2, 1): 3, (1, 1, 1): -2, (4,): Fraction(1, 3)}
    )
    assert project(lift(f)) == f


def test_lift_lands_in_polynomial_model():
    f = basis_element("QSym", "M", (2,)) + 2 * basis_element("QSym", "M", (1, 1))
    m = 3
    commuted = chi_nc(ncqsym_to_polynomial(lift(f), m))
    assert commuted == to_polynomial(f, m)


def test_labeled_chains_structure():
    chains = labeled_chains((1, 2), (1,))
    assert len(chains) == 1
    (chain,) = chains
    assert [c.upper for c in chain] == [(1, 2), (2,)]
    assert [c.lower for c in chain] == [(2,), (1,)]


def test_descent_series_golden():
    assert descent_pieri_K((1, 2), (1,)).terms == {(1, 1): 1}
    assert descent_pieri_K((2, 1), ()).terms == {(2, 1): 1}


def test_descent_series_matches_skew_expansion():
    for n in range(6):
        for gamma in compositions_of(n):
            for k in range(n):
                for beta in compositions_of(k):
                    expected = skew_qs_schur(gamma, beta)
                    if not expected.terms:
                        continue
                    assert descent_pieri_K(gamma, beta) == expected
