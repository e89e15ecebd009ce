"""Property-based invariants over the full parameter domains."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contractive import (
    Cat2Params,
    Cat3Params,
    VarianceCurve,
    YuenParams,
    cat2_moments,
    cat3_moments,
    curve_from_moments,
    lambda_at,
    optimal_eta,
    sql_crossings,
    variance_at,
    yuen_lambda_min,
    yuen_moments,
    zeta,
)
from contractive.kernels import lambda_cat2

kappas = st.floats(min_value=-1.8, max_value=1.8).map(math.exp)
angles = st.floats(min_value=0.0, max_value=359.999999)
deltas = st.floats(min_value=0.05, max_value=3.0)
etas = st.floats(min_value=1e-3, max_value=8.0)
xis = st.floats(min_value=-3.0, max_value=3.0)


@st.composite
def cat2_params(draw):
    return Cat2Params(kappa=draw(kappas), theta=draw(angles), delta=draw(deltas))


@st.composite
def cat3_params(draw):
    return Cat3Params(
        kappa_plus=draw(kappas),
        kappa_minus=draw(kappas),
        theta_plus=draw(angles),
        theta_minus=draw(angles),
        delta=draw(deltas),
    )


@given(cat2_params())
def test_cat2_uncertainty_bound(p):
    m = cat2_moments(p)
    assert m.uncertainty_product() >= 0.25 - 1e-9


@given(cat3_params())
def test_cat3_uncertainty_bound(p):
    m = cat3_moments(p)
    assert m.uncertainty_product() >= 0.25 - 1e-9


@given(xis, st.floats(min_value=0.05, max_value=5.0))
def test_yuen_saturates_uncertainty(xi, var_x):
    m = yuen_moments(YuenParams(xi=xi, var_x=var_x))
    assert m.uncertainty_product() == pytest.approx(0.25, abs=1e-12)


@given(cat2_params())
def test_cat2_correlation_identity(p):
    m = cat2_moments(p)
    assert m.re_xp == 0.0
    assert m.corr_xp == pytest.approx(-2.0 * m.mean_x * m.mean_p, abs=1e-12)


@given(cat2_params(), etas)
def test_lambda_invariance_under_mirror(p, eta):
    direct = lambda_cat2(eta, p.kappa, p.theta, p.delta)
    mirrored = lambda_cat2(eta, 1.0 / p.kappa, 360.0 - p.theta, p.delta)
    assert mirrored == pytest.approx(direct, rel=1e-12)


@given(cat3_params())
def test_zeta_exchange_symmetry(p):
    q = Cat3Params(
        kappa_plus=1.0 / p.kappa_plus,
        kappa_minus=p.kappa_minus / p.kappa_plus,
        theta_plus=p.theta_minus,
        theta_minus=p.theta_plus,
        delta=p.delta,
    )
    assert zeta(q) == pytest.approx(zeta(p), rel=1e-12, abs=1e-12)


@given(
    st.floats(min_value=0.3, max_value=4.0),
    st.floats(min_value=0.3, max_value=4.0),
    st.floats(min_value=0.0, max_value=1.0),
)
def test_nonnegative_correlation_never_beats_sql(a, c, frac):
    # any curve satisfying the uncertainty bound with b >= 0 has lambda >= 1
    if a * c < 0.2500001:
        a = c = 0.6
    b = frac * 2.0 * math.sqrt(a * c - 0.25)
    curve = VarianceCurve(a, b, c)
    _, lam = optimal_eta(curve)
    assert lam >= 1.0 - 1e-12


@given(cat2_params())
def test_contractivity_interval_matches_roots(p):
    curve = curve_from_moments(cat2_moments(p))
    crossings = sql_crossings(curve)
    if crossings is None:
        _, lam = optimal_eta(curve)
        assert lam >= 1.0 - 1e-9
    else:
        lo, hi = crossings
        assert 0.0 < lo < hi
        assert lambda_at(curve, 0.5 * (lo + hi)) < 1.0
        assert lambda_at(curve, lo) == pytest.approx(1.0, abs=1e-8)
        assert lambda_at(curve, hi) == pytest.approx(1.0, abs=1e-8)


@given(cat2_params(), etas)
def test_variance_positive_everywhere(p, eta):
    curve = curve_from_moments(cat2_moments(p))
    assert variance_at(curve, eta) > 0.0


@given(xis)
def test_yuen_lambda_min_formula(xi):
    p = YuenParams(xi=xi, var_x=0.7)
    _, lam = optimal_eta(curve_from_moments(yuen_moments(p)))
    assert lam == pytest.approx(yuen_lambda_min(xi), abs=1e-12)


@settings(max_examples=40)
@given(cat3_params())
def test_engine_agrees_with_cat3_closed_form(p):
    from helpers import moments_gap

    from contractive import superposition_moments, to_superposition

    gap = moments_gap(superposition_moments(to_superposition(p)), cat3_moments(p))
    assert gap < 1e-10
