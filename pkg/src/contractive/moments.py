"""Closed-form initial moments for each state family, plus a general
pairwise-overlap moment engine for arbitrary superpositions.

The engine evaluates the exact overlap integrals between unit-width
Gaussians g_i(y) = exp(-(y - u_i)^2 / 2).  With S_ij = sqrt(pi)
exp(-(u_i-u_j)^2/4), m = (u_i+u_j)/2 and d = u_i - u_j:

    int g_i g_j           = S_ij
    int y g_i g_j         = m S_ij
    int y^2 g_i g_j       = (m^2 + 1/2) S_ij
    int g_i (-i d/dy) g_j = (i d / 2) S_ij
    int g_i (-d2/dy2) g_j = (1/2 - d^2/4) S_ij
    int g_i y (-i d/dy)g_j= i (m d / 2 + 1/2) S_ij

For two and three components the engine reduces to the closed forms in
:mod:`contractive.kernels`; both routes exist and are cross-checked in the
test suite.  The general engine is the single source of truth for other
component counts.
"""
from __future__ import annotations

import math

import numpy as np

from . import kernels
from .errors import DegenerateNorm
from .states import (
    Cat2Params,
    Cat3Params,
    GaussianSuperposition,
    Moments,
    YuenParams,
)

SQRT_PI = math.sqrt(math.pi)


def _moments_from_terms(terms) -> Moments:
    mean_x, mean_p, var_x, corr, var_p = terms
    if math.isnan(var_x):
        raise DegenerateNorm("parameters collapse the norm")
    re_xp = 0.5 * corr + mean_x * mean_p
    return Moments(
        mean_x=mean_x, mean_p=mean_p, var_x=var_x, var_p=var_p,
        corr_xp=corr, re_xp=re_xp,
    )


def cat2_moments(p: Cat2Params) -> Moments:
    """Initial moments of a two-component cat.

    Re<xp> vanishes identically for this family; the correlation comes
    entirely from the product of the nonzero mean position and momentum,
    corr_xp = -2 mean_x mean_p.
    """
    m = _moments_from_terms(kernels.cat2_terms(p.kappa, p.theta, p.delta))
    # re_xp = corr/2 + mean_x*mean_p = 0 identically; store the exact zero.
    return Moments(
        mean_x=m.mean_x, mean_p=m.mean_p, var_x=m.var_x, var_p=m.var_p,
        corr_xp=m.corr_xp, re_xp=0.0,
    )


def cat3_moments(p: Cat3Params) -> Moments:
    """Initial moments of a three-component cat.

    Unlike the two-component family, <xp> acquires a nonvanishing real part;
    Im<xp> = 1/2 is an operator identity and is not stored.
    """
    return _moments_from_terms(
        kernels.cat3_terms(p.kappa_plus, p.kappa_minus, p.theta_plus, p.theta_minus, p.delta)
    )


def yuen_moments(p: YuenParams) -> Moments:
    """Moments of a twisted complex Gaussian: corr_xp = -2 xi, saturating uncertainty."""
    return Moments(
        mean_x=0.0,
        mean_p=0.0,
        var_x=p.var_x,
        var_p=p.var_p,
        corr_xp=-2.0 * p.xi,
        re_xp=-p.xi,
    )


def superposition_moments(s: GaussianSuperposition) -> Moments:
    """Exact moments of an N-component superposition via analytic overlaps."""
    amps = s.amplitudes
    u = s.centers / s.width
    d = u[:, None] - u[None, :]
    m = 0.5 * (u[:, None] + u[None, :])
    overlap = SQRT_PI * np.exp(-0.25 * d * d)
    w = np.conj(amps)[:, None] * amps[None, :]

    norm = float(np.sum(w * overlap).real)
    floor = s.eps_norm * SQRT_PI * float(np.sum(np.abs(amps) ** 2))
    if norm <= floor:
        raise DegenerateNorm("superposition norm below degeneracy floor")

    mean_y = float(np.sum(w * m * overlap).real) / norm
    y2 = float(np.sum(w * (m * m + 0.5) * overlap).real) / norm
    mean_q = float(np.sum(w * (0.5j * d) * overlap).real) / norm
    q2 = float(np.sum(w * (0.5 - 0.25 * d * d) * overlap).real) / norm
    yq = complex(np.sum(w * 1j * (0.5 * m * d + 0.5) * overlap)) / norm

    var_y = y2 - mean_y * mean_y
    var_q = q2 - mean_q * mean_q
    re_yq = yq.real
    corr = 2.0 * (re_yq - mean_y * mean_q)

    w0 = s.width
    return Moments(
        mean_x=mean_y * w0,
        mean_p=mean_q / w0,
        var_x=var_y * w0 * w0,
        var_p=var_q / (w0 * w0),
        corr_xp=corr,
        re_xp=re_yq,
    )


def zeta(p: Cat3Params) -> float:
    """Three-component correlation parameter: corr_xp = -2 zeta.

    Invariant under the exchange of the two outer components,
    zeta(c+, c-, t+, t-) = zeta(c-, c+, t-, t+).
    """
    m = cat3_moments(p)
    return -0.5 * m.corr_xp
