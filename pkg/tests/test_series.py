import pytest
from hypothesis import given, strategies as st

from qdissect.ring import INTEGER_RING, LAURENT_RING, LaurentPoly, PHI5, quotient_ring
from qdissect.series import (
    TruncatedSeries,
    crank_gf,
    euler_product,
    partition_gf,
    pochhammer_fin,
    pochhammer_inf,
    rank_gf,
    reassemble,
    theta,
)

A = LaurentPoly.monomial(1, 1)
A_INV = LaurentPoly.monomial(1, -1)


def S(*coeffs):
    return TruncatedSeries(coeffs, INTEGER_RING)


# independent oracle: the literal product (1-q)(1-q^2)...(1-q^N) on int lists
def naive_euler(order):
    out = [0] * (order + 1)
    out[0] = 1
    for k in range(1, order + 1):
        for n in range(order, k - 1, -1):
            out[n] -= out[n - k]
    return out


# independent oracle: count partitions of n with parts <= m by bare recursion
def count_partitions(n, m=None):
    if m is None:
        m = n
    if n == 0:
        return 1
    return sum(count_partitions(n - k, k) for k in range(1, min(n, m) + 1))


int_series = st.lists(st.integers(-9, 9), min_size=1, max_size=24).map(
    lambda cs: TruncatedSeries(cs, INTEGER_RING)
)


# --- arithmetic ---------------------------------------------------------------

def test_mul_examples():
    assert S(1, 1, 0) * S(1, -1, 0) == S(1, 0, -1)
    x = S(3, 1, 4, 1, 5)
    assert x * TruncatedSeries.one(4) == x
    assert S(1, -1, 0, 0) * S(1, 1, 1, 1) == S(1, 0, 0, 0)


def test_add_and_truncation_to_smaller_order():
    assert S(1, 2) + S(3, 4, 5) == S(4, 6)
    assert (S(1, 2) * S(0, 1, 7)).order == 1


def test_ring_mismatch_rejected():
    x = S(1, 1)
    y = TruncatedSeries((LaurentPoly.ONE, A), LAURENT_RING)
    with pytest.raises(ValueError):
        x + y
    with pytest.raises(ValueError):
        x * y


def test_equality_needs_same_order():
    assert S(1, 2) != S(1, 2, 0)
    assert S(1, 2) == S(1, 2)


def test_shift_truncate_scale():
    x = S(1, 2, 3)
    assert x.shift(2) == S(0, 0, 1, 2, 3)
    assert x.truncate(1) == S(1, 2)
    with pytest.raises(ValueError):
        x.truncate(5)
    assert x.scale(-2) == S(-2, -4, -6)
    with pytest.raises(ValueError):
        x.shift(-1)


def test_coefficient_bounds_checked():
    with pytest.raises(ValueError):
        S(1, 2).coefficient(3)
    with pytest.raises(ValueError):
        TruncatedSeries((), INTEGER_RING)


# --- inversion -----------------------------------------------------------------

def test_invert_geometric():
    assert S(1, -1, 0, 0, 0, 0).inverse() == S(1, 1, 1, 1, 1, 1)
    one = TruncatedSeries.one(7)
    assert one.inverse() == one


def test_invert_euler_gives_partition_numbers():
    # frozen from the enumeration oracle: p(0)..p(9)
    expected = [count_partitions(n) for n in range(10)]
    assert expected == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert list(euler_product(9).inverse().coefficients) == expected
    assert list(partition_gf(9).coefficients) == expected


def test_invert_requires_unit_constant():
    with pytest.raises(ValueError):
        S(2, 1).inverse()
    with pytest.raises(ValueError):
        S(0, 1).inverse()


@given(int_series)
def test_invert_roundtrip(x):
    coeffs = (1,) + x.coefficients[1:]
    x = TruncatedSeries(coeffs, INTEGER_RING)
    assert x * x.inverse() == TruncatedSeries.one(x.order)


def test_invert_roundtrip_laurent_unit_constant():
    x = TruncatedSeries((LaurentPoly.monomial(-1, 3), A, LaurentPoly({2: 5, 0: 1})),
                        LAURENT_RING)
    assert x * x.inverse() == TruncatedSeries.one(2, LAURENT_RING)


# --- substitution and dissection --------------------------------------------------

def test_substitute_power_examples():
    assert S(1, 1, 0, 0, 0).substitute_power(2) == S(1, 0, 1, 0, 0)
    x = S(2, 3, 4)
    assert x.substitute_power(1) == x
    assert S(1, 1, 1).substitute_power(3, order=6) == S(1, 0, 0, 1, 0, 0, 1)
    with pytest.raises(ValueError):
        S(1, 1).substitute_power(2, order=4)   # q^4 needs the unknown c_2
    with pytest.raises(ValueError):
        x.substitute_power(0)


def test_dissect_geometric():
    geo = S(*[1] * 11)
    parts = geo.dissect(2)
    assert parts[0] == S(*[1] * 6)
    assert parts[1] == S(*[1] * 5)
    assert geo.dissect(1) == [geo]


def test_dissect_partition_gf_component_4():
    parts = partition_gf(14).dissect(5)
    assert list(parts[4].coefficients) == [5, 30, 135]
    assert all(c % 5 == 0 for c in parts[4].coefficients)


@given(int_series, st.sampled_from((2, 3, 5, 7)))
def test_dissection_roundtrip(x, m):
    assert reassemble(x.dissect(m), x.order) == x


# --- named products -----------------------------------------------------------------

def test_euler_product_matches_naive_product():
    for order in (0, 1, 12, 60, 121):
        assert list(euler_product(order).coefficients) == naive_euler(order)


def test_euler_product_frozen_low_order():
    assert list(euler_product(12).coefficients) == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]
    assert euler_product(0) == S(1)


def test_euler_equals_its_theta_form():
    for order in (5, 40):
        assert euler_product(order) == theta(1, 2, order)


def test_pochhammer_inf_examples():
    assert pochhammer_inf(1, 1, 1, 30) == euler_product(30)
    x = pochhammer_inf(A, 1, 1, 2, ring=LAURENT_RING)
    assert x == TruncatedSeries(
        (LaurentPoly.ONE, LaurentPoly.monomial(-1, 1), LaurentPoly.monomial(-1, 1)),
        LAURENT_RING,
    )
    # frozen from (1+q^2)(1+q^4)(1+q^6) by hand
    assert pochhammer_inf(-1, 2, 2, 6) == S(1, 0, 1, 0, 1, 0, 2)
    with pytest.raises(ValueError):
        pochhammer_inf(1, 0, 1, 5)
    with pytest.raises(ValueError):
        pochhammer_inf(1, 1, 0, 5)


def test_pochhammer_fin_examples():
    assert pochhammer_fin(1, 0, 6) == TruncatedSeries.one(6)
    one_factor = pochhammer_fin(A, 1, 3, start=1, ring=LAURENT_RING)
    assert one_factor.coefficient(1) == LaurentPoly.monomial(-1, 1)
    # frozen from (1-aq)(1-aq^2) by hand
    two = pochhammer_fin(A, 2, 3, start=1, ring=LAURENT_RING)
    assert two == TruncatedSeries(
        (LaurentPoly.ONE, LaurentPoly.monomial(-1, 1), LaurentPoly.monomial(-1, 1),
         LaurentPoly.monomial(1, 2)),
        LAURENT_RING,
    )
    # start=0 multiplies in the constant factor (1 - z)
    assert pochhammer_fin(1, 1, 2, start=0) == S(0, 0, 0)


def test_theta_examples():
    assert theta(1, 2, 12) == euler_product(12)
    assert theta(3, 5, 8) == S(1, 0, 0, -1, 0, -1, 0, 0, 0)
    with pytest.raises(ValueError):
        theta(0, 0, 5)
    with pytest.raises(ValueError):
        theta(1, 2, 5, sign_r=2)


@given(st.integers(1, 10), st.integers(1, 10))
def test_theta_argument_symmetry(r, s):
    assert theta(r, s, 30) == theta(s, r, 30)


def test_theta_positive_signs():
    # f(q, q) = sum q^(n^2): exponents T(n)+T(n-1) = n^2, all signs +
    x = theta(1, 1, 10, sign_r=1, sign_s=1)
    assert list(x.coefficients) == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0]


# --- the two statistic generating functions ---------------------------------------

def test_crank_gf_low_coefficients():
    gf = crank_gf(2)
    assert gf.coefficient(0) == LaurentPoly.ONE
    assert gf.coefficient(1) == LaurentPoly({1: 1, 0: -1, -1: 1})
    assert gf.coefficient(2) == LaurentPoly({2: 1, -2: 1})


def test_crank_gf_palindromic_and_bounded_support():
    gf = crank_gf(25)
    for n in range(26):
        c = gf.coefficient(n)
        assert c.is_palindromic()
        assert c == LaurentPoly.ZERO or (-n <= c.min_exponent and c.max_exponent <= n)


def test_crank_gf_at_one_counts_partitions():
    gf = crank_gf(30)
    for n in range(31):
        assert gf.coefficient(n).evaluate_at_one() == partition_gf(30).coefficient(n)


def test_rank_gf_low_coefficients():
    gf = rank_gf(4)
    assert gf.coefficient(0) == LaurentPoly.ONE
    assert gf.coefficient(1) == LaurentPoly.ONE
    assert gf.coefficient(4) == LaurentPoly({3: 1, 1: 1, 0: 1, -1: 1, -3: 1})


def test_rank_gf_palindromic():
    gf = rank_gf(20)
    assert all(gf.coefficient(n).is_palindromic() for n in range(21))


def test_gf_cache_consistency():
    # asking for a smaller order after a bigger one must slice, not recompute
    big = crank_gf(15)
    small = crank_gf(6)
    assert small == big.truncate(6)


# --- quotient-ring series ----------------------------------------------------------

def test_series_over_quotient_ring():
    ring = quotient_ring(PHI5)
    x = theta(5, 20, 25, ring=ring)
    y = x * x.inverse()
    assert y == TruncatedSeries.one(25, ring)


def test_str_rendering():
    assert str(S(1, -1, 0, 2)) == "1 - q + 2*q^3 + O(q^4)"
    lam = LaurentPoly({1: 1, 0: -1, -1: 1})
    x = TruncatedSeries((LaurentPoly.ONE, lam), LAURENT_RING)
    assert str(x) == "1 + (a - 1 + a^-1)*q + O(q^2)"
