from fractions import Fraction

import pytest

from symsig.bundles import (
    BundleSum,
    EmptySum,
    IndecomposableBundle,
    SingularCurve,
    TorsionLabel,
    UndeterminedDecomposition,
    UnsupportedTensor,
    atiyah_bundle,
    differential_ratio_series,
    differential_sym_sequence,
    dual,
    frk_report,
    frk_upper_bound_series,
    is_nonsingular_cubic,
    line_bundle,
    rank_degree_slope,
    repeated_tensor_syz,
    sym_power,
    syzygy_bundle,
    tensor,
    tensor_power_syz,
    weierstrass_cubic,
)

FERMAT = {(3, 0, 0): Fraction(1), (0, 3, 0): Fraction(1), (0, 0, 3): Fraction(1)}


class TestRankDegreeSlope:
    def test_f2(self):
        assert rank_degree_slope(BundleSum.of(atiyah_bundle(2))) == (2, 0, 0)

    def test_syzygy(self):
        assert rank_degree_slope(BundleSum.of(syzygy_bundle())) == (2, -9, Fraction(-9, 2))

    def test_additivity(self):
        s = BundleSum.from_pairs([(IndecomposableBundle.make(3, 1), 2)])
        assert rank_degree_slope(s) == (6, 2, Fraction(1, 3))

    def test_empty(self):
        with pytest.raises(EmptySum):
            rank_degree_slope(BundleSum.from_pairs([]))


class TestTensor:
    def test_f2_squared(self):
        f2 = BundleSum.of(atiyah_bundle(2))
        assert tensor(f2, f2) == BundleSum.of(atiyah_bundle(1), atiyah_bundle(3))

    def test_clebsch_gordan_ranks(self):
        for r in range(1, 8):
            for s in range(1, r + 1):
                prod = tensor(BundleSum.of(atiyah_bundle(r)), BundleSum.of(atiyah_bundle(s)))
                ranks = sorted(b.rank for b, _ in prod.items)
                assert ranks == list(range(r - s + 1, r + s, 2))
                assert sum(ranks) == r * s

    def test_two_torsion_square(self):
        e = BundleSum.of(IndecomposableBundle.make(2, -9))
        prod = tensor(e, e)
        assert len(prod.items) == 4
        assert all(b.rank == 1 and b.degree == -9 for b, _ in prod.items)
        torsions = {b.twist.torsion for b, _ in prod.items}
        assert torsions == {
            (Fraction(0), Fraction(0)),
            (Fraction(1, 2), Fraction(0)),
            (Fraction(0), Fraction(1, 2)),
            (Fraction(1, 2), Fraction(1, 2)),
        }

    def test_coprime_rule(self):
        a = BundleSum.of(IndecomposableBundle.make(1, -9))
        b = BundleSum.of(IndecomposableBundle.make(2, -9))
        assert tensor(a, b) == BundleSum.of(IndecomposableBundle.make(2, -27))

    def test_prime_power_distinct_exponents(self):
        a = BundleSum.of(IndecomposableBundle.make(4, 1))
        b = BundleSum.of(IndecomposableBundle.make(2, 1))
        prod = tensor(a, b)
        ((bundle, mult),) = prod.items
        assert (bundle.rank, bundle.degree, mult) == (4, 3, 2)
        assert prod.rank == 8 and prod.degree == 4 * 1 + 2 * 1

    def test_conservation_random(self):
        import random

        rng = random.Random(11)
        for _ in range(40):
            r1, r2 = rng.randrange(1, 7), rng.randrange(1, 7)
            d1, d2 = rng.randrange(-8, 9), rng.randrange(-8, 9)
            a = BundleSum.of(IndecomposableBundle.make(r1, d1))
            b = BundleSum.of(IndecomposableBundle.make(r2, d2))
            try:
                prod = tensor(a, b)
            except UnsupportedTensor:
                continue
            assert prod.rank == r1 * r2
            assert prod.degree == r1 * d2 + r2 * d1
            for bundle, _ in prod.items:
                assert bundle.slope == Fraction(d1, r1) + Fraction(d2, r2)

    def test_unsupported_mixed_ranks(self):
        a = BundleSum.of(IndecomposableBundle.make(6, 1))
        b = BundleSum.of(IndecomposableBundle.make(10, 1))
        with pytest.raises(UnsupportedTensor):
            tensor(a, b)

    def test_twists_add(self):
        tau = TorsionLabel.make((Fraction(1, 3), 0))
        a = BundleSum.of(line_bundle(0, tau))
        prod = tensor(a, a)
        ((bundle, _),) = prod.items
        assert bundle.twist.torsion == (Fraction(2, 3), Fraction(0))


class TestDuality:
    def test_degree_negates(self):
        e = IndecomposableBundle.make(3, 2, TorsionLabel.make((Fraction(1, 3), 0)))
        assert e.dual().degree == -2
        assert e.dual().dual() == e

    def test_line_bundle_twist_inverts(self):
        tau = TorsionLabel.make((Fraction(1, 5), Fraction(2, 5)), {"L": 3})
        l = line_bundle(4, tau)
        paired = tensor(BundleSum.of(l), BundleSum.of(l.dual()))
        ((bundle, _),) = paired.items
        assert bundle == line_bundle(0)

    def test_sum_dual(self):
        s = tensor_power_syz(3)
        d = dual(s)
        assert d.degree == -s.degree and d.rank == s.rank


class TestSymPower:
    @pytest.mark.parametrize("q", [0, 1, 2, 7, 25, 50])
    def test_f2(self, q):
        assert sym_power(BundleSum.of(atiyah_bundle(2)), q) == BundleSum.of(
            atiyah_bundle(q + 1)
        )

    def test_f2_twisted(self):
        # the line-bundle twist comes out with exponent q
        f2l = IndecomposableBundle.make(2, 6)  # F_2 (x) degree-3 line bundle
        out = sym_power(BundleSum.of(f2l), 4)
        ((bundle, mult),) = out.items
        assert (bundle.rank, bundle.degree, mult) == (5, 3 * 4 * 5, 1)

    def test_multinomial_lines(self):
        l1 = line_bundle(0, TorsionLabel.make((Fraction(1, 3), 0)))
        l2 = line_bundle(1)
        out = sym_power(BundleSum.of(l1, l2), 2)
        assert out.rank == 3 and out.degree == 3
        torsions = sorted(b.twist.torsion[0] for b, _ in out.items)
        assert torsions == [Fraction(0), Fraction(1, 3), Fraction(2, 3)]

    def test_slope_scaling_semistable(self):
        f2 = BundleSum.of(IndecomposableBundle.make(2, 4))
        for q in (1, 2, 5):
            out = sym_power(f2, q)
            for b, _ in out.items:
                assert b.slope == q * Fraction(4, 2)

    def test_syzygy_not_determined(self):
        with pytest.raises(UndeterminedDecomposition):
            sym_power(BundleSum.of(syzygy_bundle()), 2)

    def test_higher_atiyah_not_determined(self):
        with pytest.raises(UndeterminedDecomposition):
            sym_power(BundleSum.of(atiyah_bundle(3)), 2)


class TestTensorPowerSyz:
    @pytest.mark.parametrize("q", range(1, 9))
    def test_closed_form_matches_repeated_tensor(self, q):
        assert tensor_power_syz(q) == repeated_tensor_syz(q)

    @pytest.mark.parametrize("q", range(1, 11))
    def test_conservation(self, q):
        total = tensor_power_syz(q)
        assert total.rank == 2 ** q
        assert total.degree == -9 * q * 2 ** (q - 1)
        for b, _ in total.items:
            assert b.slope == Fraction(-9 * q, 2)

    def test_q2_shape(self):
        total = tensor_power_syz(2)
        assert len(total.items) == 4
        assert all(m == 1 and b.rank == 1 and b.degree == -9 for b, m in total.items)

    def test_q3_shape(self):
        total = tensor_power_syz(3)
        ((bundle, mult),) = total.items
        assert (bundle.rank, bundle.degree, mult) == (2, -27, 4)

    def test_q4_shape(self):
        total = tensor_power_syz(4)
        assert len(total.items) == 4
        assert all(m == 4 and b.degree == -18 for b, m in total.items)


class TestNonsingularity:
    def test_default_curve(self):
        assert is_nonsingular_cubic(weierstrass_cubic(1, 0))

    def test_fermat(self):
        assert is_nonsingular_cubic(FERMAT)

    def test_cusp(self):
        assert not is_nonsingular_cubic(weierstrass_cubic(0, 0))

    def test_triple_line(self):
        assert not is_nonsingular_cubic({(3, 0, 0): Fraction(1)})


class TestFrkReport:
    @pytest.mark.parametrize("q", [1, 3, 5, 7, 9])
    def test_odd_q_slope_certificate(self, q):
        low, up, cert = frk_report(q)
        assert (low, up) == (0, 0)
        assert "slope" in cert["reason"]

    def test_q0(self):
        assert frk_report(0)[:2] == (1, 1)

    @pytest.mark.parametrize("f", [None, FERMAT, weierstrass_cubic(2, 1)])
    def test_q2_no_kernel(self, f):
        low, up, cert = frk_report(2, f)
        assert (low, up) == (0, 0)
        assert (cert["unknowns"], cert["equations"]) == (18, 18)

    def test_q4_exact_kernel_dimension(self):
        # the 90x90 system modulo the cubic has a two-dimensional kernel
        # (the isotypic count: h0(T^4) = 4 splits as Sym^4:2 + 3*0 + 2*1);
        # the certified lower bound stays 0
        low, up, cert = frk_report(4)
        assert (low, up) == (0, 2)
        assert (cert["unknowns"], cert["equations"]) == (90, 90)

    def test_q4_kernel_is_curve_independent(self):
        assert frk_report(4, FERMAT)[1] == 2
        assert frk_report(4, weierstrass_cubic(2, 1))[1] == 2

    def test_q6_isotypic_prediction(self):
        # h0(T^6) = 16 = Sym^6 + 5*Sym^4(6) + 9*Sym^2(3) + 5*O: forces 1
        assert frk_report(6)[1] == 1

    def test_singular_curve_rejected(self):
        with pytest.raises(SingularCurve):
            frk_report(2, weierstrass_cubic(0, 0))


class TestDifferentialSequence:
    def test_q1_is_indecomposable_rank2(self):
        seq = differential_sym_sequence(5)
        ((bundle, mult),) = seq[1].items
        assert (bundle.rank, mult) == (2, 1)

    def test_q5_rank(self):
        seq = differential_sym_sequence(5)
        assert seq[5].rank == 6
        assert len(seq[5].items) == 1

    def test_ratio_at_100(self):
        assert differential_ratio_series(100)[-1] == Fraction(1, 5151)


def test_upper_bound_series():
    ratios = frk_upper_bound_series(5000)
    for n, r in enumerate(ratios):
        if n:
            assert r <= Fraction(1, 2) + Fraction(2, n)
    assert abs(ratios[-1] - Fraction(1, 2)) < Fraction(1, 1000)
