import pytest
from hypothesis import given, settings, strategies as st

from sqpbands import LaurentPolynomial
from sqpbands.laurent import int_det, laurent_det

polys = st.builds(
    LaurentPolynomial,
    st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=5),
)


def test_construction_drops_zeros():
    p = LaurentPolynomial({0: 1, 3: 0, -2: 5})
    assert p.to_pairs() == [[-2, 5], [0, 1]]


def test_arithmetic_basics():
    t = LaurentPolynomial({1: 1})
    p = (t - 1) * (t - 1)
    assert p == LaurentPolynomial({0: 1, 1: -2, 2: 1})
    assert p.evaluate_int(3) == 4
    assert (t ** 3).coeffs == {3: 1}
    inv_t = LaurentPolynomial({-1: 1})
    assert (t * inv_t) == LaurentPolynomial.one()


def test_evaluate_with_negative_exponents():
    p = LaurentPolynomial({-2: 4, 0: 1})
    assert p.evaluate_int(2) == 2
    assert p.evaluate_int(-1) == 5


def test_normalized_form():
    p = LaurentPolynomial({-3: -1, -2: 1, -1: -1})  # -(t^-3)(1 - t + t^2) up to sign
    n = p.normalized()
    assert n.min_exp() == 0
    assert n.coeffs[n.max_exp()] > 0
    assert n == LaurentPolynomial({0: 1, 1: -1, 2: 1})


def test_unit_equivalence_and_palindromes():
    trefoil = LaurentPolynomial({0: 1, 1: -1, 2: 1})
    shifted = LaurentPolynomial({-5: -1, -4: 1, -3: -1})
    assert trefoil.is_unit_equivalent(shifted)
    assert trefoil.is_palindromic()
    assert not LaurentPolynomial({0: 1, 1: 2}).is_palindromic()


def test_divide_exact():
    t = LaurentPolynomial({1: 1})
    num = (t ** 4) - 1
    den = t - 1
    assert num.divide_exact(den) == LaurentPolynomial({0: 1, 1: 1, 2: 1, 3: 1})
    with pytest.raises(ValueError):
        (t + 1).divide_exact(t - 1)


def test_format_quarter_exponents():
    jones = LaurentPolynomial({4: 1, 2: -1})
    assert "t" in jones.format("t", 4)


@given(polys, polys)
@settings(max_examples=60)
def test_mul_commutes_and_distributes(p, q):
    assert p * q == q * p
    assert (p + q) * p == p * p + q * p


@given(polys, polys)
@settings(max_examples=60)
def test_exact_division_roundtrip(p, q):
    if q.is_zero():
        return
    assert (p * q).divide_exact(q) == p


def test_int_det_examples():
    assert int_det([]) == 1
    assert int_det([[5]]) == 5
    assert int_det([[1, 2], [3, 4]]) == -2
    assert int_det([[0, 1], [1, 0]]) == -1
    assert int_det([[0, 0], [0, 1]]) == 0


@given(st.integers(1, 5), st.data())
@settings(max_examples=40)
def test_laurent_det_matches_cofactor_expansion(n, data):
    matrix = [
        [
            LaurentPolynomial(
                data.draw(
                    st.dictionaries(st.integers(-2, 2), st.integers(-4, 4), max_size=3)
                )
            )
            for _ in range(n)
        ]
        for _ in range(n)
    ]

    def cofactor(m):
        if not m:
            return LaurentPolynomial.one()
        total = LaurentPolynomial.zero()
        for j in range(len(m)):
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            term = m[0][j] * cofactor(minor)
            total = total + (term if j % 2 == 0 else -term)
        return total

    assert laurent_det(matrix) == cofactor(matrix)
