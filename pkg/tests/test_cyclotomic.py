import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symsig.cyclotomic import (
    CycloNum,
    DivisionByZero,
    NotADivisor,
    cyclotomic_polynomial,
    euler_phi,
    format_value,
    minimize_conductor,
    parse_value,
)


def zeta(n, k=1):
    return CycloNum.root_of_unity(n, k)


class TestCyclotomicPolynomial:
    def test_n1(self):
        assert cyclotomic_polynomial(1) == (-1, 1)

    def test_n4(self):
        assert cyclotomic_polynomial(4) == (1, 0, 1)

    def test_n8(self):
        # divide x^8 - 1 by Phi_1 * Phi_2 * Phi_4 by hand: x^4 + 1
        assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)

    @pytest.mark.parametrize("n", range(1, 40))
    def test_degree_and_monic(self, n):
        poly = cyclotomic_polynomial(n)
        assert len(poly) == euler_phi(n) + 1
        assert poly[-1] == 1

    def test_product_over_divisors_is_xn_minus_1(self):
        # multiply back Phi_d over all d | 12
        from symsig.cyclotomic import _poly_mul, divisors

        prod = [1]
        for d in divisors(12):
            prod = _poly_mul(prod, list(cyclotomic_polynomial(d)))
        expected = [0] * 13
        expected[0], expected[12] = -1, 1
        assert prod == expected


class TestArithmetic:
    def test_sqrt2_squares_to_two(self):
        sqrt2 = zeta(8) + zeta(8, 7)
        assert sqrt2 * sqrt2 == 2

    def test_primitive_cube_roots_sum(self):
        assert zeta(3) + zeta(3, 2) == -1

    def test_sqrt5_inverse(self):
        sqrt5 = zeta(5) - zeta(5, 2) - zeta(5, 3) + zeta(5, 4)
        assert sqrt5 * sqrt5 == 5
        assert 1 / sqrt5 == sqrt5 / 5

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            1 / CycloNum.zero(4)

    def test_mixed_conductor_lifting(self):
        assert zeta(3) + zeta(4) == zeta(12, 4) + zeta(12, 3)

    def test_rational_mixing(self):
        assert zeta(4) * 2 + Fraction(1, 2) == CycloNum.from_coeffs(4, [Fraction(1, 2), 2])


class TestConjugate:
    def test_i_conjugates_to_minus_i(self):
        assert zeta(4).conjugate() == zeta(4, 3)

    def test_rational_fixed(self):
        x = CycloNum.from_rational(Fraction(3, 2), 12)
        assert x.conjugate() == x

    def test_sqrt2_is_real(self):
        sqrt2 = zeta(8) + zeta(8, 7)
        assert sqrt2.conjugate() == sqrt2


class TestEmbed:
    def test_zeta2_in_conductor_4(self):
        assert zeta(2).embed(4) == zeta(4, 2)

    def test_identity_lift(self):
        assert CycloNum.one(1).embed(24) == CycloNum.one(24)

    def test_zeta3_into_6(self):
        assert zeta(3).embed(6) == zeta(6, 2)

    def test_not_a_divisor(self):
        with pytest.raises(NotADivisor):
            zeta(4).embed(6)

    def test_round_trip(self):
        a = zeta(6) + 3
        assert a.embed(24).restrict(6) == a

    def test_minimize(self):
        lifted = zeta(3).embed(24)
        assert minimize_conductor(lifted).conductor == 3


class TestApprox:
    def test_sqrt2(self):
        assert abs((zeta(8) + zeta(8, 7)).approx() - math.sqrt(2)) < 1e-12

    def test_golden_ratio(self):
        phi_plus = -(zeta(5, 2) + zeta(5, 3))
        assert abs(phi_plus.approx() - (1 + math.sqrt(5)) / 2) < 1e-12

    def test_zero(self):
        assert CycloNum.zero(7).approx() == 0


small_rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


def cyclo_values(conductor):
    return st.lists(
        small_rationals, min_size=euler_phi(conductor), max_size=euler_phi(conductor)
    ).map(lambda cs: CycloNum.from_coeffs(conductor, cs))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 4, 5, 8, 12]).flatmap(cyclo_values))
def test_conjugation_gives_real_norm(a):
    norm = a * a.conjugate()
    assert abs(norm.approx().imag) < 1e-9
    assert norm.conjugate() == norm


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 4, 5, 8, 12]).flatmap(cyclo_values))
def test_inverse_round_trip(a):
    if not a.is_zero():
        assert a * (1 / a) == 1


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([4, 5, 8]).flatmap(
        lambda n: st.tuples(cyclo_values(n), cyclo_values(n))
    )
)
def test_approx_is_a_homomorphism(pair):
    a, b = pair
    assert abs((a + b).approx() - (a.approx() + b.approx())) < 1e-9
    assert abs((a * b).approx() - (a.approx() * b.approx())) < 1e-9


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([4, 5, 8]).flatmap(
        lambda n: st.tuples(cyclo_values(n), cyclo_values(n))
    )
)
def test_canonical_equality(pair):
    a, b = pair
    assert ((a - b).is_zero()) == (a.coeffs == b.coeffs)


class TestSerialization:
    def test_format_fixed_width(self):
        a = CycloNum.from_coeffs(4, [Fraction(1, 2), -3])
        assert format_value(a) == "1/2 + -3*z"

    @pytest.mark.parametrize("n", [1, 3, 8, 20])
    def test_round_trip(self, n):
        a = sum((CycloNum.root_of_unity(n, k) * Fraction(k + 1, 3) for k in range(euler_phi(n))), CycloNum.zero(n))
        assert parse_value(format_value(a), n) == a

    def test_power_basis_header_width(self):
        assert len(format_value(CycloNum.zero(20)).split(" + ")) == euler_phi(20)
