"""Tests for the re-expansion maps, quadrature oracle, and summability reports.

Closed-form expectations come from the orthogonality integrals
(2/pi) int_0^pi cos kt sin nt dt = (2/pi) (1/(n+k) + 1/(n-k)) for
k - n odd, evaluated by hand; every map is also compared against the
independent Gauss-Legendre oracle.
"""

import numpy as np
import pytest

from reexpansion import (
    Coeff1D,
    CoeffND,
    ParityVector,
    ReexpandSpec,
    WeightExponent,
    cos_to_sin,
    dht_even_halved,
    l1_norm,
    quadrature_oracle,
    quadrature_oracle_box,
    reexpand_nd,
    reexpand_weighted,
    sin_to_cos,
    summability_report,
    weight_apply,
)
from reexpansion.reexpand import TWO_OVER_PI

E1 = Coeff1D.impulse(1)
COS = ParityVector((1,))
SIN = ParityVector((0,))
Q0 = WeightExponent((0,))


class TestOneDimensionalMaps:
    def test_cos_to_sin_impulse(self):
        b = cos_to_sin(E1, (1, 4))
        np.testing.assert_allclose(b[2], 8 / (3 * np.pi), atol=1e-15)
        np.testing.assert_allclose(b[3], 0.0, atol=1e-15)
        np.testing.assert_allclose(b[4], 16 / (15 * np.pi), atol=1e-15)

    def test_cos_to_sin_zero(self):
        assert l1_norm(cos_to_sin(Coeff1D(1, np.zeros(2)), (1, 8))) == 0.0

    def test_cos_to_sin_two_term_fixture(self):
        # f = cos t - cos 3t; b_2 = (2/pi)(4/3 + 4/5): the k=3 kernel value
        # 2n/(n^2-9) = -4/5 meets the coefficient -1.  Confirmed by the
        # quadrature oracle below.
        a = Coeff1D.from_dict({1: 1, 3: -1})
        b = cos_to_sin(a, (1, 6))
        expected = TWO_OVER_PI * (4.0 / 3.0 + 4.0 / 5.0)
        np.testing.assert_allclose(b[2], expected, atol=1e-15)
        oracle = quadrature_oracle(a, COS, Q0, 2)
        np.testing.assert_allclose(b[2], oracle, atol=1e-12)

    def test_sin_to_cos_impulse(self):
        b = sin_to_cos(E1, (0, 2))
        np.testing.assert_allclose(b[0], 4 / np.pi, atol=1e-15)
        np.testing.assert_allclose(b[1], 0.0, atol=1e-15)
        np.testing.assert_allclose(b[2], -4 / (3 * np.pi), atol=1e-15)

    def test_sin_to_cos_zero(self):
        assert l1_norm(sin_to_cos(Coeff1D(1, np.zeros(3)), (0, 8))) == 0.0

    def test_prefactor_identity_exact(self):
        rng = np.random.default_rng(4)
        a = Coeff1D(1, rng.standard_normal(16))
        lhs = cos_to_sin(a, (1, 40)).values
        rhs = TWO_OVER_PI * dht_even_halved(a, (1, 40)).values
        np.testing.assert_array_equal(lhs, rhs)


class TestReexpandNd:
    def test_2d_example(self):
        a = CoeffND.impulse((1, 1))
        spec = ReexpandSpec(ParityVector((1, 0)), WeightExponent.zero(2), ((1, 3), (0, 3)))
        out = reexpand_nd(a, spec)
        np.testing.assert_allclose(out[(2, 2)], -32 / (9 * np.pi**2), atol=1e-15)

    def test_zero(self):
        a = CoeffND((1, 1), np.zeros((2, 2)))
        spec = ReexpandSpec(ParityVector((1, 0)), WeightExponent.zero(2), ((1, 4), (0, 4)))
        assert l1_norm(reexpand_nd(a, spec)) == 0.0

    def test_separable_outer_product(self):
        rng = np.random.default_rng(14)
        u = Coeff1D(1, rng.standard_normal(6))
        v = Coeff1D(1, rng.standard_normal(4))
        a = CoeffND((1, 1), np.outer(u.values, v.values))
        spec = ReexpandSpec(ParityVector((1, 0)), WeightExponent.zero(2), ((1, 16), (0, 16)))
        out = reexpand_nd(a, spec)
        expected = np.outer(cos_to_sin(u, (1, 16)).values, sin_to_cos(v, (0, 16)).values)
        # one (2/pi) factor per axis
        np.testing.assert_allclose(out.values, expected, atol=1e-13)

    def test_rejects_weighted_spec(self):
        a = CoeffND.impulse((1,))
        spec = ReexpandSpec(COS, WeightExponent((1,)), ((1, 4),))
        with pytest.raises(ValueError):
            reexpand_nd(a, spec)

    def test_dimension_mismatch(self):
        spec = ReexpandSpec(ParityVector((1, 0)), WeightExponent.zero(2), ((1, 3), (0, 3)))
        with pytest.raises(ValueError):
            reexpand_nd(E1, spec)


class TestSubtractMean:
    def test_1d_constant_removed(self):
        # f = cos t, f(0) = 1: re-expanding f - f(0) shifts odd outputs by
        # the sine coefficients of the constant, -(2/pi) * 2/n.
        spec = ReexpandSpec(COS, Q0, ((1, 5),), subtract_mean=True)
        b = reexpand_nd(E1, spec)
        plain = cos_to_sin(E1, (1, 5))
        np.testing.assert_allclose(b[1], -4 / np.pi, atol=1e-14)
        np.testing.assert_allclose(b[3], -TWO_OVER_PI * 2.0 / 3.0, atol=1e-14)
        np.testing.assert_allclose(b[2], plain[2], atol=1e-15)
        np.testing.assert_allclose(b[4], plain[4], atol=1e-15)

    def test_1d_matches_oracle_of_modified_series(self):
        from reexpansion.reexpand import _subtract_face_means

        rng = np.random.default_rng(21)
        a = Coeff1D(1, rng.standard_normal(5))
        spec = ReexpandSpec(COS, Q0, ((1, 12),), subtract_mean=True)
        out = reexpand_nd(a, spec)
        modified = _subtract_face_means(a.as_nd(), COS)
        oracle = quadrature_oracle_box(modified, COS, Q0, [(1, 12)])
        np.testing.assert_allclose(out.values, oracle.values, atol=1e-10)

    def test_2d_vanishes_on_cosine_faces(self):
        from reexpansion.reexpand import _subtract_face_means
        from reexpansion.sequences import series_eval

        rng = np.random.default_rng(22)
        a = CoeffND((1, 1), rng.standard_normal((4, 3)))
        eta = ParityVector((1, 1))
        modified = _subtract_face_means(a, eta)
        for t in ([0.0, 0.83], [0.83, 0.0], [0.0, 0.0]):
            val = series_eval(modified, eta, WeightExponent.zero(2), t)
            assert abs(val) < 1e-13


class TestQuadratureOracle:
    def test_closed_form_impulse(self):
        v = quadrature_oracle(E1, COS, Q0, 2)
        np.testing.assert_allclose(v, 8 / (3 * np.pi), atol=1e-12)

    def test_parity_orthogonality(self):
        assert abs(quadrature_oracle(E1, COS, Q0, 3)) < 1e-10

    def test_2d_product(self):
        a = CoeffND.impulse((1, 1))
        v = quadrature_oracle(a, ParityVector((1, 0)), WeightExponent.zero(2), (2, 2))
        np.testing.assert_allclose(v, -32 / (9 * np.pi**2), atol=1e-12)

    def test_box_matches_maps_small(self):
        rng = np.random.default_rng(33)
        for seed in range(3):
            vals = np.random.default_rng(seed).standard_normal(8)
            a = Coeff1D(1, vals)
            got = quadrature_oracle_box(a, COS, Q0, [(1, 20)])
            np.testing.assert_allclose(got.values, cos_to_sin(a, (1, 20)).values, atol=1e-10)
            got = quadrature_oracle_box(a, SIN, Q0, [(0, 20)])
            np.testing.assert_allclose(got.values, sin_to_cos(a, (0, 20)).values, atol=1e-10)

    def test_unreachable_tolerance_fails_loudly(self):
        with pytest.raises(RuntimeError):
            quadrature_oracle(E1, COS, Q0, 2, tol=0.0)


class TestWeighted:
    def test_q0_reduces_to_reexpand_nd(self):
        rng = np.random.default_rng(6)
        a = Coeff1D(1, rng.standard_normal(6))
        spec = ReexpandSpec(COS, Q0, ((1, 10),))
        res = reexpand_weighted(a, spec)
        plain = reexpand_nd(a, spec)
        np.testing.assert_array_equal(res.raw.values, plain.values)
        np.testing.assert_array_equal(res.deweighted.values, plain.values)
        assert res.sign == 1.0 and res.eta_effective.bits == (1,)

    def test_q1_matches_derivative_oracle(self):
        # f = cos t - cos 3t, f' = -sin t + 3 sin 3t; raw output carries
        # m b_m = (2/pi) int f'(t) sin(mt + pi/2) dt.
        a = Coeff1D.from_dict({1: 1, 3: -1})
        spec = ReexpandSpec(COS, WeightExponent((1,)), ((0, 10),))
        res = reexpand_weighted(a, spec)
        oracle = quadrature_oracle_box(a, COS, WeightExponent((1,)), [(0, 10)])
        np.testing.assert_allclose(res.raw.values, oracle.values, atol=1e-10)
        assert res.sign == -1.0
        assert res.eta_effective.bits == (0,)
        assert res.warnings == ()  # fixture satisfies f(0) = f(pi) = 0

    def test_q1_bookkeeping_identity_exact(self):
        a = Coeff1D.from_dict({1: 1, 3: -1})
        spec = ReexpandSpec(COS, WeightExponent((1,)), ((0, 10),))
        res = reexpand_weighted(a, spec)
        inner = ReexpandSpec(SIN, Q0, ((0, 10),))
        expected = reexpand_nd(weight_apply(a, WeightExponent((1,))), inner).scaled(-1.0)
        np.testing.assert_array_equal(res.raw.values, expected.values)

    def test_q2_identity_is_literal(self):
        a = Coeff1D.from_dict({1: 1, 3: -1})
        q = WeightExponent((2,))
        spec = ReexpandSpec(COS, q, ((1, 10),))
        res = reexpand_weighted(a, spec)
        expected = reexpand_nd(weight_apply(a, q), ReexpandSpec(COS, Q0, ((1, 10),)))
        np.testing.assert_array_equal(res.raw.values, expected.values)
        oracle = quadrature_oracle_box(a, COS, q, [(1, 10)])
        np.testing.assert_allclose(res.raw.values, oracle.values, atol=1e-10)

    def test_deweighting_and_flags(self):
        a = Coeff1D.from_dict({1: 1, 3: -1})
        spec = ReexpandSpec(COS, WeightExponent((1,)), ((0, 6),))
        res = reexpand_weighted(a, spec)
        assert res.flagged == ((0,),)
        assert np.isnan(res.deweighted[(0,)].real)
        for m in range(1, 7):
            np.testing.assert_allclose(
                res.deweighted[(m,)], res.raw[(m,)] / m, atol=1e-15
            )

    def test_boundary_failure_warns_but_computes(self):
        spec = ReexpandSpec(COS, WeightExponent((1,)), ((0, 6),))
        res = reexpand_weighted(E1, spec)  # cos t has f(0) = 1
        assert res.warnings and "boundary" in res.warnings[0]
        assert not res.boundary.passed
        oracle = quadrature_oracle_box(E1, COS, WeightExponent((1,)), [(0, 6)])
        np.testing.assert_allclose(res.raw.values, oracle.values, atol=1e-10)

    def test_zero(self):
        spec = ReexpandSpec(COS, WeightExponent((1,)), ((0, 4),))
        res = reexpand_weighted(Coeff1D(1, np.zeros(2)), spec)
        assert l1_norm(res.raw) == 0.0

    def test_2d_mixed_weights_vs_oracle(self):
        rng = np.random.default_rng(40)
        vals = rng.standard_normal((3, 3))
        a = CoeffND((1, 1), vals)
        eta = ParityVector((1, 0))
        q = WeightExponent((1, 2))
        spec = ReexpandSpec(eta, q, ((0, 6), (0, 6)), boundary_tol=1e-9)
        res = reexpand_weighted(a, spec)
        oracle = quadrature_oracle_box(a, eta, q, [(0, 6), (0, 6)])
        np.testing.assert_allclose(res.raw.values, oracle.values, atol=1e-9)
        assert res.eta_effective.bits == (0, 0)
        assert res.sign == -1.0


class TestSummabilityReport:
    WINDOWS = (64, 128, 256, 512, 1024)

    def test_decaying_fixture_converges(self):
        a = Coeff1D.from_dict({1: 1, 3: -1})
        rep = summability_report(a, "even_halved", self.WINDOWS)
        assert rep.verdict_hint == "converging"
        assert abs(rep.moment_sum) < 1e-15
        assert abs(rep.moment_sum_alternating) < 1e-15
        # increments decay at least quadratically across doublings
        between = rep.increments[1:]
        for prev, cur in zip(between, between[1:]):
            assert cur <= 0.3 * prev

    def test_harmonic_fixture_diverges(self):
        rep = summability_report(E1, "even_halved", self.WINDOWS)
        assert rep.verdict_hint == "diverging"
        between = np.array(rep.increments[1:])
        np.testing.assert_allclose(between, np.log(2), rtol=0.12)

    def test_zero_sequence(self):
        rep = summability_report(Coeff1D(1, np.zeros(2)), "even_halved", (8, 16, 32))
        assert rep.verdict_hint == "converging"
        assert all(n == 0.0 for n in rep.norms)

    def test_norms_nondecreasing_and_rows(self):
        rng = np.random.default_rng(3)
        a = Coeff1D(1, rng.standard_normal(10))
        rep = summability_report(a, "full", (16, 32, 64))
        assert list(rep.norms) == sorted(rep.norms)
        rows = rep.rows()
        assert rows[0][0] == 16 and len(rows) == 3

    def test_window_validation(self):
        with pytest.raises(ValueError):
            summability_report(E1, "even_halved", (64, 64))
        with pytest.raises(ValueError):
            summability_report(E1, "nope", (8, 16))

    def test_log_weighted_field_matches_module(self):
        from reexpansion import log_weighted_sum

        a = Coeff1D.from_dict({1: 0.5, 3: 0.25})
        rep = summability_report(a, "even_halved", (16, 32, 64))
        assert rep.log_weighted == log_weighted_sum(a, Q0)

    def test_two_sided_input_full_kind(self):
        a = Coeff1D.from_dict({-2: 1.0, 2: 1.0})
        rep = summability_report(a, "full", (16, 32, 64))
        assert rep.kind == "full"
        # |k|-weighted logarithm for two-sided support
        np.testing.assert_allclose(rep.log_weighted, 2 * np.log(3), atol=1e-14)
        assert rep.norms[-1] > 0
