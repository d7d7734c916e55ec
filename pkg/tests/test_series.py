"""Series core: ring operations, truncation contract, dissection algebra."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rrseries.errors import InvalidModulus, NonUnitConstantTerm, ResidueOutOfRange
from rrseries.series import ModSeries, Series, reduce_mod


def pentagonal_oracle(order):
    """Euler's pentagonal expansion of (q;q)_inf, written independently."""
    c = [0] * order
    k = 0
    while k * (3 * k - 1) // 2 < order:
        sign = (-1) ** k
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        c[e1] += sign
        if k and e2 < order:
            c[e2] += sign
        k += 1
    return c


def partition_oracle(order):
    """Unrestricted partition numbers by the classic coin-style DP."""
    dp = [1] + [0] * (order - 1)
    for part in range(1, order):
        for total in range(part, order):
            dp[total] += dp[total - part]
    return dp


def geometric(order):
    return Series([1] * order)


small_series = st.builds(
    Series,
    st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=32),
)
unit_series = st.builds(
    lambda head, tail: Series([head] + tail),
    st.sampled_from([1, -1]),
    st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=31),
)


class TestBasics:
    def test_add_cancellation(self):
        one_minus_q = Series([1, -1, 0, 0])
        q = Series([0, 1, 0, 0])
        assert one_minus_q + q == Series.one(4)

    def test_sub_self_is_zero(self):
        s = Series([3, -2, 7, 1, 4])
        assert s - s == Series.zero(5)

    def test_scalar_mul(self):
        q = Series.monomial(1, 1, 4)
        assert 11 * q == Series([0, 11, 0, 0])

    def test_min_order_contract(self):
        a = Series([1, 2, 3, 4, 5])
        b = Series([1, 1, 1])
        assert (a + b).order == 3
        assert (a - b).order == 3
        assert (a * b).order == 3

    def test_mul_telescoping(self):
        assert Series([1, -1] + [0] * 18) * geometric(20) == Series.one(20)

    def test_pentagonal_product(self):
        prod = Series.one(8)
        for e in range(1, 8):
            prod = prod * Series.monomial(-1, e, 8).__add__(Series.one(8))
        assert prod.coeffs == (1, -1, -1, 0, 0, 1, 0, 1)
        assert list(prod.coeffs) == pentagonal_oracle(8)

    def test_immutable(self):
        s = Series([1, 2])
        with pytest.raises(AttributeError):
            s.coeffs = (3, 4)


class TestInvert:
    def test_geometric(self):
        assert Series([1, -1, 0, 0, 0]).invert() == geometric(5)

    def test_partition_generating_function(self):
        order = 64
        f1 = Series(pentagonal_oracle(order))
        assert list(f1.invert().coeffs) == partition_oracle(order)
        assert f1.invert().coeffs[:10] == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30)

    def test_non_unit_constant_rejected(self):
        with pytest.raises(NonUnitConstantTerm):
            Series([2, 1, 0]).invert()

    def test_negative_unit(self):
        s = Series([-1, 3, -2, 5])
        assert (s * s.invert()) == Series.one(4)

    @given(unit_series)
    @settings(max_examples=60)
    def test_round_trip(self, s):
        assert s * s.invert() == Series.one(s.order)


class TestPow:
    def test_zeroth_power(self):
        assert Series([5, 1, 2]) ** 0 == Series.one(3)

    def test_square(self):
        assert Series([1, 1, 0]) ** 2 == Series([1, 2, 1])

    def test_negative_exponent(self):
        s = Series([1, -1, 0, 0, 0, 0])
        assert s ** -2 == (s.invert()) ** 2

    @given(small_series, st.integers(0, 4), st.integers(0, 4))
    @settings(max_examples=40)
    def test_additivity(self, s, m, n):
        assert s ** (m + n) == (s**m) * (s**n)


class TestRingLaws:
    @given(small_series, small_series)
    @settings(max_examples=60)
    def test_mul_commutative(self, a, b):
        assert a * b == b * a

    @given(small_series, small_series, small_series)
    @settings(max_examples=60)
    def test_mul_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(small_series, small_series, small_series)
    @settings(max_examples=60)
    def test_distributive(self, a, b, c):
        n = min(a.order, b.order, c.order)
        lhs = a * (b + c)
        rhs = a * b + a * c
        assert lhs.truncate(n) == rhs.truncate(n)


class TestDilateDissect:
    def test_dilate_simple(self):
        assert Series([1, 1]).dilate(5) == Series([1, 0, 0, 0, 0, 1])

    def test_dilate_order_formula(self):
        s = Series([1, 2, 3])
        assert s.dilate(4).order == (s.order - 1) * 4 + 1

    def test_dissect_odd_indices(self):
        s = Series(range(10))
        assert s.dissect(2, 1) == Series([1, 3, 5, 7, 9])

    def test_dissect_order_formula(self):
        s = Series(range(8))
        for t in (2, 3, 5):
            for j in range(t):
                assert s.dissect(t, j).order == (s.order - 1 - j) // t + 1

    def test_dissect_residue_out_of_range(self):
        with pytest.raises(ResidueOutOfRange):
            Series([1, 2, 3]).dissect(2, 2)

    def test_dilate_of_dissect_agrees_on_residue_class(self):
        s = Series([3, 1, 4, 1, 5, 9, 2, 6])
        t = 3
        back = s.dissect(t, 0).dilate(t)
        for n in range(back.order):
            if n % t == 0:
                assert back[n] == s[n]

    @given(small_series, st.sampled_from([2, 3, 5]))
    @settings(max_examples=60)
    def test_reassembly(self, s, t):
        if s.order <= t:
            return
        total = None
        for j in range(t):
            piece = s.dissect(t, j).dilate(t).shift(j)
            total = piece if total is None else total + piece
        n = total.order
        assert total == s.truncate(n)

    def test_negate_q_involution(self):
        s = Series([3, 1, 4, 1, 5, 9])
        assert s.negate_q().negate_q() == s

    def test_negate_q_simple(self):
        assert Series([1, 1]).negate_q() == Series([1, -1])

    def test_shift(self):
        assert Series([1, 2]).shift(2) == Series([0, 0, 1, 2])


class TestModSeries:
    def test_reduce_simple(self):
        assert reduce_mod(Series([0, 3, 0]), 3).is_zero()

    def test_invalid_modulus(self):
        with pytest.raises(InvalidModulus):
            reduce_mod(Series([1]), 1)

    def test_negative_coefficients_normalize(self):
        assert Series([-1, -4]).reduce_mod(3).coeffs == (2, 2)

    def test_mod_ops(self):
        a = ModSeries([1, 2, 3], 5)
        b = ModSeries([4, 4, 4], 5)
        assert (a + b).coeffs == (0, 1, 2)
        assert (a - b).coeffs == (2, 3, 4)
        assert (a * b).coeffs == (4, 2, 4)
        assert (a**2).coeffs == (1, 4, 0)
        assert ModSeries(range(10), 7).dissect(2, 1).coeffs == (1, 3, 5, 0, 2)

    @given(small_series, small_series, st.integers(2, 12))
    @settings(max_examples=60)
    def test_reduction_is_ring_homomorphism(self, a, b, m):
        assert (a * b).reduce_mod(m) == a.reduce_mod(m) * b.reduce_mod(m)
        assert (a + b).reduce_mod(m) == a.reduce_mod(m) + b.reduce_mod(m)

    def test_power_tower_congruence(self):
        # f_k^(2^l) = f_(2k)^(2^(l-1)) mod 2^l, here (k, l) = (1, 3)
        from rrseries.qfunctions import euler_f

        order = 120
        lhs = euler_f(1, order) ** 8
        rhs = euler_f(2, order) ** 4
        assert (lhs - rhs).reduce_mod(8).is_zero()
