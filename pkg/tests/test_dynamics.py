"""Variance propagation, relative variance, optimal times and the
measurement-family constructor."""
import math

import numpy as np
import pytest
from helpers import draw_cat2

from contractive import (
    Cat2Params,
    Cat3Params,
    ContractivityRegion,
    GAUSSIAN_MOMENTS,
    InvalidBeta,
    NonPositiveTime,
    VarianceCurve,
    YuenParams,
    ZeroOutcome,
    ZeroXi,
    cat2_moments,
    cat3_moments,
    contractivity_region,
    curve_from_moments,
    eta_from_time,
    gl_family_member,
    is_contractive,
    lambda_at,
    optimal_eta,
    sql_crossings,
    variance_at,
    yuen_lambda_min,
    yuen_moments,
    yuen_times,
)
from contractive.reference import CAT2_REFERENCE, CAT3_REFERENCE

# frozen values computed independently from the closed forms, the overlap
# engine and the quadrature oracle (all three agree to ~1e-15)
CAT2_REFERENCE_LAMBDA_AT_1105 = 0.7581179854259954
CAT2_REFERENCE_OPT = (1.099438080833994, 0.7581038049133669)

GAUSS_CURVE = VarianceCurve(0.5, 0.0, 0.5)


class TestCurveFromMoments:
    def test_gaussian(self):
        c = curve_from_moments(GAUSSIAN_MOMENTS)
        assert (c.a, c.b, c.c) == (0.5, 0.0, 0.5)

    def test_yuen_reference(self):
        c = curve_from_moments(yuen_moments(YuenParams(xi=0.5, var_x=0.5)))
        assert (c.a, c.b, c.c) == (0.5, -1.0, 1.0)

    def test_cat2_reference_is_contractive(self):
        c = curve_from_moments(cat2_moments(CAT2_REFERENCE))
        assert c.b < 0.0

    def test_invalid_curves_rejected(self):
        with pytest.raises(Exception):
            VarianceCurve(0.5, -3.0, 0.5)  # uncertainty violated
        with pytest.raises(Exception):
            VarianceCurve(-0.5, 0.0, 0.5)


class TestVarianceAt:
    def test_gaussian_at_unit_time(self):
        assert variance_at(GAUSS_CURVE, 1.0) == 1.0

    def test_initial_value(self):
        c = curve_from_moments(cat2_moments(CAT2_REFERENCE))
        assert variance_at(c, 0.0) == c.a

    def test_yuen_at_optimal_time(self):
        c = VarianceCurve(0.5, -1.0, 1.0)
        assert variance_at(c, 1 / math.sqrt(2)) == pytest.approx(1.0 - 1 / math.sqrt(2), rel=1e-14)

    def test_negative_time_rejected(self):
        with pytest.raises(NonPositiveTime):
            variance_at(GAUSS_CURVE, -0.1)

    def test_strictly_positive_for_all_times(self):
        rng = np.random.default_rng(61)
        for _ in range(100):
            c = curve_from_moments(cat2_moments(draw_cat2(rng)))
            etas = rng.uniform(0.0, 10.0, size=50)
            assert all(variance_at(c, e) > 0.0 for e in etas)


class TestLambdaAt:
    def test_gaussian_at_unit_time(self):
        assert lambda_at(GAUSS_CURVE, 1.0) == 1.0

    def test_cat2_reference_value(self):
        c = curve_from_moments(cat2_moments(CAT2_REFERENCE))
        assert lambda_at(c, 1.105) == pytest.approx(CAT2_REFERENCE_LAMBDA_AT_1105, rel=1e-13)

    def test_in_phase_reference_never_contractive(self):
        c = curve_from_moments(cat2_moments(Cat2Params(2.26, 0.0, 0.49)))
        for eta in np.linspace(0.01, 10.0, 300):
            assert lambda_at(c, float(eta)) >= 1.0 - 1e-12

    def test_pole_rejected(self):
        with pytest.raises(NonPositiveTime):
            lambda_at(GAUSS_CURVE, 0.0)


class TestOptimalEta:
    def test_gaussian(self):
        assert optimal_eta(GAUSS_CURVE) == (1.0, 1.0)

    def test_yuen_reference(self):
        eta_star, lam = optimal_eta(VarianceCurve(0.5, -1.0, 1.0))
        assert eta_star == pytest.approx(1 / math.sqrt(2), rel=1e-15)
        assert lam == pytest.approx(math.sqrt(2) - 1.0, rel=1e-15)

    def test_cat2_reference(self):
        eta_star, lam = optimal_eta(curve_from_moments(cat2_moments(CAT2_REFERENCE)))
        assert eta_star == pytest.approx(CAT2_REFERENCE_OPT[0], rel=1e-13)
        assert lam == pytest.approx(CAT2_REFERENCE_OPT[1], rel=1e-13)

    def test_consistency_with_lambda_at(self):
        rng = np.random.default_rng(62)
        for _ in range(100):
            c = curve_from_moments(cat2_moments(draw_cat2(rng)))
            eta_star, lam = optimal_eta(c)
            assert lambda_at(c, eta_star) == pytest.approx(lam, abs=1e-12)
            for eta in rng.uniform(1e-3, 10.0, size=10):
                assert lambda_at(c, float(eta)) >= lam - 1e-12


class TestYuenAnalytic:
    def test_lambda_min_values(self):
        assert yuen_lambda_min(0.0) == 1.0
        assert yuen_lambda_min(0.5) == pytest.approx(math.sqrt(2) - 1.0, abs=1e-15)
        assert yuen_lambda_min(1.0) == pytest.approx(math.sqrt(5) - 2.0, abs=1e-15)

    def test_monotone_decreasing_for_positive_xi(self):
        xs = np.linspace(0.0, 10.0, 200)
        vals = [yuen_lambda_min(float(x)) for x in xs]
        assert all(b < a for a, b in zip(vals, vals[1:]))

    def test_times_reference(self):
        t_star, t_bar, ratio = yuen_times(YuenParams(xi=0.5, var_x=0.5))
        assert t_star == pytest.approx(1 / math.sqrt(2), rel=1e-15)
        assert t_bar == pytest.approx(0.5, rel=1e-15)
        assert ratio == pytest.approx(math.sqrt(2), rel=1e-15)

    def test_times_ratio_approaches_unity(self):
        _, _, ratio = yuen_times(YuenParams(xi=10.0, var_x=0.5))
        assert ratio == pytest.approx(1.00125, abs=5e-6)

    def test_zero_xi_raises(self):
        with pytest.raises(ZeroXi):
            yuen_times(YuenParams(xi=0.0, var_x=0.5))

    def test_consistency_with_curve_route(self):
        rng = np.random.default_rng(63)
        for _ in range(50):
            xi = float(rng.uniform(0.05, 3.0))
            var_x = float(rng.uniform(0.1, 4.0))
            p = YuenParams(xi=xi, var_x=var_x)
            eta_star, lam = optimal_eta(curve_from_moments(yuen_moments(p)))
            t_star, _, _ = yuen_times(p)
            assert lam == pytest.approx(yuen_lambda_min(xi), abs=1e-12)
            assert eta_star == pytest.approx(t_star, abs=1e-12)


class TestContractivity:
    def test_region_examples(self):
        assert contractivity_region(Cat2Params(2.26, 127.0, 0.49)) is ContractivityRegion.REGION_I
        assert contractivity_region(Cat2Params(1.0, 90.0, 1.0)) is ContractivityRegion.NONE
        assert contractivity_region(Cat2Params(0.5, 270.0, 1.0)) is ContractivityRegion.REGION_II

    def test_exact_phase_boundaries_are_neutral(self):
        assert contractivity_region(Cat2Params(2.0, 180.0, 1.0)) is ContractivityRegion.NONE
        assert contractivity_region(Cat2Params(2.0, 0.0, 1.0)) is ContractivityRegion.NONE

    def test_region_consistent_with_correlation_sign(self):
        rng = np.random.default_rng(64)
        for _ in range(300):
            p = draw_cat2(rng)
            region = contractivity_region(p)
            corr = cat2_moments(p).corr_xp
            assert (corr < 0.0) == (region is not ContractivityRegion.NONE)

    def test_is_contractive(self):
        assert is_contractive(yuen_moments(YuenParams(0.5, 0.5)))
        assert not is_contractive(GAUSSIAN_MOMENTS)
        assert is_contractive(cat3_moments(Cat3Params(1.0, 1.0, 270.0, 270.0, 1.0)))


class TestSqlCrossings:
    def test_gaussian_tangency(self):
        assert sql_crossings(GAUSS_CURVE) is None
        assert variance_at(GAUSS_CURVE, 1.0) == 1.0  # touches the SQL line exactly

    def test_contractive_interval_is_single(self):
        c = curve_from_moments(cat2_moments(CAT2_REFERENCE))
        lo, hi = sql_crossings(c)
        assert 0 < lo < hi
        assert lambda_at(c, 0.5 * (lo + hi)) < 1.0
        assert lambda_at(c, lo * 0.9) > 1.0
        assert lambda_at(c, hi * 1.1) > 1.0


class TestGlFamily:
    def test_positive_branch(self):
        params, x0, width = gl_family_member(a=1.0, beta=2.0, delta=0.49)
        assert params.kappa == pytest.approx(math.sqrt(3.0), rel=1e-15)
        assert params.theta == 90.0
        assert x0 == pytest.approx(2.0)
        assert width == pytest.approx(2.0 / 0.49)
        assert cat2_moments(params).mean_x * width == pytest.approx(1.0, abs=1e-12)

    def test_negative_branch_mirrors(self):
        params, x0, width = gl_family_member(a=-1.0, beta=2.0, delta=0.49)
        assert params.kappa == pytest.approx(1.0 / math.sqrt(3.0), rel=1e-15)
        assert params.theta == 270.0
        assert cat2_moments(params).mean_x * width == pytest.approx(-1.0, abs=1e-12)

    def test_members_are_contractive(self):
        rng = np.random.default_rng(65)
        for _ in range(20):
            a = float(rng.uniform(0.1, 5.0)) * (1 if rng.random() < 0.5 else -1)
            beta = float(rng.uniform(1.01, 6.0))
            delta = float(rng.uniform(0.05, 2.5))
            params, _, _ = gl_family_member(a, beta, delta)
            assert cat2_moments(params).corr_xp < 0.0

    def test_invalid_beta(self):
        with pytest.raises(InvalidBeta):
            gl_family_member(a=0.5, beta=1.0, delta=0.49)

    def test_zero_outcome(self):
        with pytest.raises(ZeroOutcome):
            gl_family_member(a=0.0, beta=2.0, delta=0.49)


class TestEtaFromTime:
    def test_unit_inputs(self):
        assert eta_from_time(1.0, 1.0, 1.0, hbar=1.0) == 1.0

    def test_mass_linearity(self):
        assert eta_from_time(2.0, 1.0, 1.0, hbar=1.0) == 0.5

    def test_atomic_scale(self):
        eta = eta_from_time(mass=1e-25, delta0=1e-6, t=1e-3)
        assert eta == pytest.approx(1.054571817, rel=1e-9)

    def test_rejects_nonpositive(self):
        with pytest.raises(Exception):
            eta_from_time(0.0, 1.0, 1.0)
