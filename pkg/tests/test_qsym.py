import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qschur.compositions import compositions_of, refines
from qschur.qsym import (
    GradedElement,
    basis_element,
    commutative_monomial,
    convert,
    coproduct,
    element_from_json,
    element_to_json,
    from_polynomial,
    is_symmetric,
    multiply,
    qs_schur,
    schur_expansion,
    skew_qs_schur,
    sym_to_qsym,
    to_polynomial,
    zero,
)

from oracles import (
    brute_ssct,
    filling_content,
    fundamental_poly,
    monomial_quasi_poly,
    qschur_poly,
    schur_poly,
)


def M(alpha, coeff=1):
    return basis_element("QSym", "M", tuple(alpha), coeff)


def L(alpha, coeff=1):
    return basis_element("QSym", "L", tuple(alpha), coeff)


def comps_upto(d):
    return [a for n in range(d + 1) for a in compositions_of(n)]


def test_monomial_product_golden():
    assert multiply(M((1,)), M((1,))) == M((2,)) + 2 * M((1, 1))


def test_monomial_coproduct_golden():
    assert coproduct(M((2, 1))) == {
        ((), (2, 1)): 1,
        ((2,), (1,)): 1,
        ((2, 1), ()): 1,
    }


def test_fundamental_coproduct_golden():
    assert coproduct(L((2, 1))) == {
        ((), (2, 1)): 1,
        ((2,), (1,)): 1,
        ((1,), (1, 1)): 1,
        ((2, 1), ()): 1,
    }


def test_fundamental_expands_over_refinements():
    for alpha in comps_upto(5):
        assert convert(L(alpha), "M").terms == {
            beta: 1 for beta in compositions_of(sum(alpha)) if refines(beta, alpha)
        }


def test_monomial_realization_matches_reference():
    for alpha in comps_upto(4):
        for m in (len(alpha), sum(alpha) + 1):
            if m == 0:
                continue
            assert to_polynomial(M(alpha), m).terms == monomial_quasi_poly(alpha, m)


def test_fundamental_realization_matches_reference():
    for alpha in comps_upto(4):
        assert to_polynomial(L(alpha), 4).terms == fundamental_poly(alpha, 4)


def test_quasi_schur_realization_matches_reference():
    for alpha in comps_upto(4):
        assert to_polynomial(qs_schur(alpha), 4).terms == qschur_poly(alpha, 4)


def test_schur_realization_matches_reference():
    for lam in [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)]:
        f = basis_element("Sym", "s", lam)
        assert to_polynomial(f, 4).terms == schur_poly(lam, 4)


def test_skew_quasi_schur_goldens():
    assert skew_qs_schur((1, 2), (1,)) == L((1, 1))
    assert skew_qs_schur((1, 2), (2,)) == L((1,))
    assert skew_qs_schur((1, 2), (1, 1)) == zero("QSym", "L")
    assert skew_qs_schur((2, 1), ()) == L((2, 1))
    assert qs_schur((1, 2)) == L((1, 2))
    assert qs_schur((2, 2)) == L((2, 2)) + L((1, 2, 1))


def test_skew_realization_counts_semistandard_fillings():
    cases = [((4, 4, 2), (3, 2, 1)), ((1, 4, 3), (1, 2)), ((2, 3), (1,))]
    for gamma, beta in cases:
        f = convert(skew_qs_schur(gamma, beta), "M")
        expected: dict = {}
        for filling in brute_ssct(gamma, beta, 4):
            key = filling_content(filling, 4)
            expected[key] = expected.get(key, 0) + 1
        assert to_polynomial(f, 4).terms == expected


def test_uniform_skew_shape_is_schur_positive():
    f = skew_qs_schur((4, 4, 2), (3, 2, 1))
    assert is_symmetric(f)
    expansion = schur_expansion(f)
    assert expansion.terms
    assert all(c > 0 for c in expansion.terms.values())


def test_conversion_round_trips():
    for alpha in comps_upto(4):
        for src in ("M", "L", "S"):
            f = basis_element("QSym", src, alpha)
            for dst in ("M", "L", "S"):
                assert convert(convert(f, dst), src) == f


def test_schur_basis_inverts_quasi_schur():
    for alpha in comps_upto(5):
        f = convert(basis_element("QSym", "S", alpha), "L")
        assert f == qs_schur(alpha)


def test_from_polynomial_rejects_unbalanced_coefficients():
    p = commutative_monomial(2, (1, 0))
    with pytest.raises(ValueError, match="not quasisymmetric"):
        from_polynomial(p, 1)


def test_from_polynomial_requires_enough_variables():
    p = commutative_monomial(1, (2,))
    with pytest.raises(ValueError, match="variables"):
        from_polynomial(p, 2)


composition_lists = st.lists(
    st.tuples(
        st.lists(st.integers(1, 3), min_size=1, max_size=3).map(tuple),
        st.integers(-3, 3),
    ),
    max_size=4,
)


@given(composition_lists)
@settings(deadline=None, max_examples=40)
def test_polynomial_round_trip(raw):
    f = GradedElement("QSym", "M", raw)
    m = max(f.degree(), 1)
    assert from_polynomial(to_polynomial(f, m), m) == f


def test_rearrangement_sums_are_schur():
    for lam in [(2, 1), (3, 1), (2, 2)]:
        f = zero("QSym", "L")
        for alpha in compositions_of(sum(lam)):
            if tuple(sorted(alpha, reverse=True)) == lam:
                f = f + qs_schur(alpha)
        assert is_symmetric(f)
        assert schur_expansion(f) == basis_element("Sym", "s", lam)


def test_single_quasi_schur_is_rarely_symmetric():
    assert not is_symmetric(qs_schur((2, 1)))
    assert is_symmetric(qs_schur((1, 1, 1)))
    with pytest.raises(ValueError, match="not symmetric"):
        schur_expansion(qs_schur((2, 1)))


def test_sym_inclusion_sums_rearrangements():
    f = sym_to_qsym(basis_element("Sym", "m", (2, 1)))
    assert f == M((2, 1)) + M((1, 2))


def test_element_json_round_trip():
    f = M((2, 1), Fraction(1, 2)) + M((3,), -4)
    d = element_to_json(f)
    assert d["terms"] == [
        {"index": [3], "coeff": -4},
        {"index": [2, 1], "coeff": {"numerator": 1, "denominator": 2}},
    ]
    assert element_from_json(json.loads(json.dumps(d))) == f
