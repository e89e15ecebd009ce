"""Parameter validation, superposition conversion and exact norms."""
import math

import numpy as np
import pytest
from helpers import draw_cat2, draw_cat3

from contractive import (
    Cat2Params,
    Cat3Params,
    DegenerateNorm,
    GaussianSuperposition,
    Moments,
    NonPositiveParameter,
    YuenParams,
    make_cat2,
    make_cat3,
    make_yuen,
    norm_squared,
    to_superposition,
)

SQRT_PI = math.sqrt(math.pi)


class TestMakeCat2:
    def test_reference_point_is_valid(self):
        p = make_cat2(kappa=2.26, theta=127.0, delta=0.49)
        assert p.kappa == 2.26 and p.theta == 127.0 and p.delta == 0.49

    def test_antiphase_full_overlap_degenerates(self):
        with pytest.raises(DegenerateNorm):
            make_cat2(kappa=1.0, theta=180.0, delta=1e-9)

    def test_symmetric_in_phase_is_valid(self):
        assert make_cat2(kappa=1.0, theta=0.0, delta=1.0).theta == 0.0

    def test_theta_reduced_mod_360(self):
        assert make_cat2(2.0, 370.0, 1.0).theta == pytest.approx(10.0)
        assert make_cat2(2.0, -90.0, 1.0).theta == pytest.approx(270.0)

    @pytest.mark.parametrize("kappa,delta", [(0.0, 1.0), (-2.0, 1.0), (1.0, 0.0), (1.0, -0.5)])
    def test_nonpositive_parameters_rejected(self, kappa, delta):
        with pytest.raises(NonPositiveParameter):
            make_cat2(kappa=kappa, theta=0.0, delta=delta)

    def test_nonfinite_rejected(self):
        with pytest.raises(NonPositiveParameter):
            make_cat2(kappa=math.nan, theta=0.0, delta=1.0)


class TestMakeCat3:
    def test_reference_point_is_valid(self):
        p = make_cat3(1.0, 2.38, 249.0, 249.0, 1.21)
        assert p.kappa_minus == 2.38

    def test_degenerate_combination_rejected(self):
        # amplitudes (-1, 2, -1) at vanishing separation cancel exactly
        with pytest.raises(DegenerateNorm):
            make_cat3(1.0, 2.0, 180.0, 180.0, 1e-9)

    def test_nonpositive_ratio_rejected(self):
        with pytest.raises(NonPositiveParameter):
            make_cat3(1.0, -1.0, 0.0, 0.0, 1.0)


class TestYuenParams:
    def test_var_p_saturates_uncertainty(self):
        p = make_yuen(xi=1.0, var_x=2.0)
        assert p.var_x * p.var_p - p.xi**2 == pytest.approx(0.25, abs=1e-15)

    def test_invalid_var_x(self):
        with pytest.raises(NonPositiveParameter):
            make_yuen(xi=0.0, var_x=0.0)


class TestToSuperposition:
    def test_cat2_components(self):
        s = to_superposition(make_cat2(kappa=2.0, theta=90.0, delta=1.0))
        amps, centers = s.amplitudes, s.centers
        assert centers.tolist() == [1.0, -1.0]
        assert amps[0] == pytest.approx(2.0)
        assert amps[1] == pytest.approx(-1j, abs=1e-15)  # e^{-i 90deg}

    def test_cat3_components(self):
        p = make_cat3(1.0, 2.38, 249.0, 249.0, 1.21)
        s = to_superposition(p)
        assert len(s.components) == 3
        assert s.centers.tolist() == [1.21, 0.0, -1.21]
        assert abs(s.amplitudes[0]) == pytest.approx(1.0)
        assert s.amplitudes[1] == pytest.approx(2.38)

    def test_unsupported_type(self):
        with pytest.raises(TypeError):
            to_superposition(make_yuen(0.5, 0.5))


class TestNormSquared:
    def test_single_component(self):
        s = GaussianSuperposition(components=((1.0 + 0.0j, 0.0),))
        assert norm_squared(s) == pytest.approx(SQRT_PI, rel=1e-15)

    def test_far_separated_pair(self):
        s = GaussianSuperposition(components=((1.0, 10.0), (1.0, -10.0)))
        assert norm_squared(s) == pytest.approx(2.0 * SQRT_PI, rel=1e-12)

    def test_complete_destructive_interference(self):
        with pytest.raises(DegenerateNorm):
            GaussianSuperposition(components=((1.0, 0.0), (-1.0, 0.0)))

    def test_global_phase_invariance(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            s = to_superposition(draw_cat3(rng))
            phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
            rotated = GaussianSuperposition(
                components=tuple((a * phase, c) for a, c in s.components)
            )
            assert norm_squared(rotated) == pytest.approx(norm_squared(s), rel=1e-12)

    def test_reflection_invariance(self):
        rng = np.random.default_rng(12)
        for _ in range(25):
            s = to_superposition(draw_cat2(rng))
            mirrored = GaussianSuperposition(
                components=tuple((a, -c) for a, c in reversed(s.components))
            )
            assert norm_squared(mirrored) == pytest.approx(norm_squared(s), rel=1e-12)

    def test_every_valid_cat_converts_and_normalizes(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            s = to_superposition(draw_cat2(rng))
            assert norm_squared(s) > s.eps_norm
            s = to_superposition(draw_cat3(rng))
            assert norm_squared(s) > s.eps_norm

    def test_width_scaling(self):
        wide = GaussianSuperposition(components=((1.0, 0.0),), width=2.0)
        assert norm_squared(wide) == pytest.approx(2.0 * SQRT_PI, rel=1e-15)


class TestMoments:
    def test_rejects_nonpositive_variance(self):
        with pytest.raises(ValueError):
            Moments(0.0, 0.0, -0.5, 0.5, 0.0, 0.0)

    def test_rejects_uncertainty_violation(self):
        with pytest.raises(ValueError):
            Moments(0.0, 0.0, 0.1, 0.1, 0.0, 0.0)

    def test_rejects_inconsistent_correlation(self):
        with pytest.raises(ValueError):
            Moments(1.0, 1.0, 1.0, 1.0, -2.0, 0.5)

    def test_consistent_moments_accepted(self):
        m = Moments(1.0, 1.0, 1.0, 1.0, 2.0 * (0.5 - 1.0), 0.5)
        assert m.uncertainty_product() >= 0.25
