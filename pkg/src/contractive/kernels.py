"""Hot numeric kernels: closed-form relative-variance evaluation and the
simplex-descent core used by the optimizer.

Everything here is written in plain numpy/scalar style so the same source
runs both JIT-compiled (numba) and uncompiled.  The backend is chosen at
import time by :mod:`contractive._jit`; set ``CONTRACTIVE_DISABLE_JIT=1`` to
force the pure-Python/numpy fallback.

Angles enter in degrees and are converted once at the kernel boundary.  A
sine is snapped to exactly zero when the angle is an exact multiple of 180
degrees so that in-phase and anti-phase superpositions have an exactly
vanishing correlation.  Degenerate-norm parameter points evaluate to +inf so
optimizers treat them as infeasible.
"""
import math

import numpy as np

from ._jit import JIT_ENABLED, njit

DEG2RAD = math.pi / 180.0

#: relative norm floor used by the kernels (mirrors states.EPS_NORM)
_EPS_NORM = 1e-10


@njit(cache=True)
def _snapped_sin(theta_deg):
    if theta_deg % 180.0 == 0.0:
        return 0.0
    return math.sin(theta_deg * DEG2RAD)


@njit(cache=True)
def cat2_terms(kappa, theta_deg, delta):
    """Moments of a two-component cat: (mean_x, mean_p, var_x, corr_xp, var_p).

    mean_x = delta (k^2-1) / Dn with Dn = 1 + k^2 + 2 k e^{-d^2} cos(theta);
    the correlation uses the combined regular form, finite at kappa = 1.
    Returns all-nan when the norm is degenerate.
    """
    c = math.cos(theta_deg * DEG2RAD)
    s = _snapped_sin(theta_deg)
    e = math.exp(-delta * delta)
    k2 = kappa * kappa
    dn = 1.0 + k2 + 2.0 * kappa * e * c
    if dn <= _EPS_NORM * (1.0 + k2):
        return (np.nan, np.nan, np.nan, np.nan, np.nan)
    d2 = delta * delta
    dn2 = dn * dn
    mean_x = delta * (k2 - 1.0) / dn
    mean_p = 2.0 * kappa * delta * s * e / dn
    var_x = 0.5 + 2.0 * kappa * d2 * (2.0 * kappa + (1.0 + k2) * e * c) / dn2
    corr = 4.0 * kappa * d2 * (1.0 - k2) * e * s / dn2
    var_p = 0.5 - 2.0 * kappa * d2 * e * (2.0 * kappa * e + (1.0 + k2) * c) / dn2
    return (mean_x, mean_p, var_x, corr, var_p)


@njit(cache=True)
def cat3_terms(kp, km, tp_deg, tm_deg, delta):
    """Moments of a three-component cat: (mean_x, mean_p, var_x, corr_xp, var_p).

    Amplitudes (kp e^{i tp}, km, e^{i tm}) at (+delta, 0, -delta).  With
    E1 = e^{-d^2/4}, E2 = e^{-d^2} and
        K  = kp^2 + km^2 + 1 + 2 G + 2 H,
        G  = km (kp cos tp + cos tm) E1,
        H  = kp cos(tp - tm) E2,
        S  = km (kp sin tp + sin tm) E1,
        Nx = kp^2 - 1 + km (kp cos tp - cos tm) E1,
        Np = km (kp sin tp - sin tm) E1 + 2 kp sin(tp - tm) E2,
    the variance curve coefficients are
        var_x = 1/2 + d^2 [(kp^2 + 1 + G/2) K - Nx^2] / K^2,
        corr  =       d^2 [S K - 2 Nx Np] / K^2,
        var_p = 1/2 - d^2 [(G/2 + 2 H) K + Np^2] / K^2,
    with mean_x = d Nx / K and mean_p = d Np / K.
    """
    cp = math.cos(tp_deg * DEG2RAD)
    cm = math.cos(tm_deg * DEG2RAD)
    sp = _snapped_sin(tp_deg)
    sm = _snapped_sin(tm_deg)
    dphi = tp_deg - tm_deg
    if dphi % 180.0 == 0.0:
        spm = 0.0
    else:
        spm = math.sin(dphi * DEG2RAD)
    cpm = math.cos(dphi * DEG2RAD)
    d2 = delta * delta
    e1 = math.exp(-0.25 * d2)
    e2 = math.exp(-d2)
    t = kp * kp + km * km + 1.0
    g = km * (kp * cp + cm) * e1
    h = kp * cpm * e2
    s = km * (kp * sp + sm) * e1
    k = t + 2.0 * g + 2.0 * h
    if k <= _EPS_NORM * t:
        return (np.nan, np.nan, np.nan, np.nan, np.nan)
    nx = kp * kp - 1.0 + km * (kp * cp - cm) * e1
    npp = km * (kp * sp - sm) * e1 + 2.0 * kp * spm * e2
    k2 = k * k
    mean_x = delta * nx / k
    mean_p = delta * npp / k
    var_x = 0.5 + d2 * ((kp * kp + 1.0 + 0.5 * g) * k - nx * nx) / k2
    corr = d2 * (s * k - 2.0 * nx * npp) / k2
    var_p = 0.5 - d2 * ((0.5 * g + 2.0 * h) * k + npp * npp) / k2
    return (mean_x, mean_p, var_x, corr, var_p)


@njit(cache=True)
def lambda_cat2(eta, kappa, theta_deg, delta):
    """Relative variance var_x(eta)/eta of a two-component cat; +inf off-domain."""
    if eta <= 0.0 or kappa <= 0.0 or delta <= 0.0:
        return np.inf
    _, _, a, b, c = cat2_terms(kappa, theta_deg, delta)
    if np.isnan(a):
        return np.inf
    return a / eta + b + c * eta


@njit(cache=True)
def lambda_cat3(eta, kp, km, tp_deg, tm_deg, delta):
    """Relative variance of a three-component cat; +inf off-domain."""
    if eta <= 0.0 or kp <= 0.0 or km <= 0.0 or delta <= 0.0:
        return np.inf
    _, _, a, b, c = cat3_terms(kp, km, tp_deg, tm_deg, delta)
    if np.isnan(a):
        return np.inf
    return a / eta + b + c * eta


@njit(cache=True)
def lambda_min_cat2(kappa, theta_deg, delta):
    """Time-optimized relative variance b + 2 sqrt(a c); +inf off-domain."""
    if kappa <= 0.0 or delta <= 0.0:
        return np.inf
    _, _, a, b, c = cat2_terms(kappa, theta_deg, delta)
    if np.isnan(a) or a <= 0.0 or c <= 0.0:
        return np.inf
    return b + 2.0 * math.sqrt(a * c)


@njit(cache=True)
def lambda_min_cat3(kp, km, tp_deg, tm_deg, delta):
    if kp <= 0.0 or km <= 0.0 or delta <= 0.0:
        return np.inf
    _, _, a, b, c = cat3_terms(kp, km, tp_deg, tm_deg, delta)
    if np.isnan(a) or a <= 0.0 or c <= 0.0:
        return np.inf
    return b + 2.0 * math.sqrt(a * c)


@njit(cache=True)
def _eval_lambda_cat2(etas, kappas, thetas, deltas, out):
    for i in range(out.shape[0]):
        out[i] = lambda_cat2(etas[i], kappas[i], thetas[i], deltas[i])


@njit(cache=True)
def _eval_lambda_cat3(etas, kps, kms, tps, tms, deltas, out):
    for i in range(out.shape[0]):
        out[i] = lambda_cat3(etas[i], kps[i], kms[i], tps[i], tms[i], deltas[i])


def scan_lambda_cat2(eta, kappa, theta, delta) -> np.ndarray:
    """Vectorized lambda over broadcast parameter arrays (degenerate cells -> +inf)."""
    e, k, t, d = np.broadcast_arrays(
        np.asarray(eta, float), np.asarray(kappa, float),
        np.asarray(theta, float), np.asarray(delta, float),
    )
    out = np.empty(e.size, dtype=float)
    _eval_lambda_cat2(
        np.ascontiguousarray(e, float).ravel(), np.ascontiguousarray(k, float).ravel(),
        np.ascontiguousarray(t, float).ravel(), np.ascontiguousarray(d, float).ravel(),
        out,
    )
    return out.reshape(e.shape)


def scan_lambda_cat3(eta, kp, km, tp, tm, delta) -> np.ndarray:
    e, a, b, c, d, f = np.broadcast_arrays(
        np.asarray(eta, float), np.asarray(kp, float), np.asarray(km, float),
        np.asarray(tp, float), np.asarray(tm, float), np.asarray(delta, float),
    )
    out = np.empty(e.size, dtype=float)
    _eval_lambda_cat3(
        np.ascontiguousarray(e, float).ravel(), np.ascontiguousarray(a, float).ravel(),
        np.ascontiguousarray(b, float).ravel(), np.ascontiguousarray(c, float).ravel(),
        np.ascontiguousarray(d, float).ravel(), np.ascontiguousarray(f, float).ravel(),
        out,
    )
    return out.reshape(e.shape)


def _nelder_mead_impl(f, x0, steps, lower, upper, bounded, max_iter, xatol, fatol):
    """Simplex descent with reflection/expansion/contraction/shrink (1, 2, 0.5, 0.5).

    Bounded coordinates are clipped into [lower, upper]; unbounded (periodic
    angle) coordinates roam freely, relying on the objective's periodicity,
    and are wrapped only by the caller when reporting.  A zero entry in
    ``steps`` pins that coordinate.  Returns (x, fx, n_eval, diameter).
    """
    n = x0.shape[0]
    sim = np.empty((n + 1, n))
    fx = np.empty(n + 1)
    for j in range(n):
        v = x0[j]
        if bounded[j]:
            v = min(max(v, lower[j]), upper[j])
        sim[0, j] = v
    for i in range(n):
        for j in range(n):
            sim[i + 1, j] = sim[0, j]
        v = sim[0, i] + steps[i]
        if bounded[i]:
            v = min(max(v, lower[i]), upper[i])
            if v == sim[0, i] and steps[i] != 0.0:  # step hit the wall; go inward
                v = min(max(sim[0, i] - steps[i], lower[i]), upper[i])
        sim[i + 1, i] = v
    for i in range(n + 1):
        fx[i] = f(sim[i])
    n_eval = n + 1

    xr = np.empty(n)
    xc = np.empty(n)
    diameter = np.inf
    for _ in range(max_iter):
        order = np.argsort(fx)
        sim = sim[order]
        fx = fx[order]

        diameter = 0.0
        for i in range(1, n + 1):
            for j in range(n):
                dij = abs(sim[i, j] - sim[0, j])
                if dij > diameter:
                    diameter = dij
        if diameter <= xatol and (fx[n] - fx[0]) <= fatol:
            break

        for j in range(n):  # centroid of all but the worst vertex
            acc = 0.0
            for i in range(n):
                acc += sim[i, j]
            xc[j] = acc / n

        for j in range(n):  # reflection
            v = xc[j] + 1.0 * (xc[j] - sim[n, j])
            if bounded[j]:
                v = min(max(v, lower[j]), upper[j])
            xr[j] = v
        fr = f(xr)
        n_eval += 1

        if fr < fx[0]:
            for j in range(n):  # expansion
                v = xc[j] + 2.0 * (xc[j] - sim[n, j])
                if bounded[j]:
                    v = min(max(v, lower[j]), upper[j])
                xc[j] = v
            fe = f(xc)
            n_eval += 1
            if fe < fr:
                for j in range(n):
                    sim[n, j] = xc[j]
                fx[n] = fe
            else:
                for j in range(n):
                    sim[n, j] = xr[j]
                fx[n] = fr
        elif fr < fx[n - 1]:
            for j in range(n):
                sim[n, j] = xr[j]
            fx[n] = fr
        else:
            if fr < fx[n]:
                for j in range(n):  # outside contraction
                    v = xc[j] + 0.5 * (xr[j] - xc[j])
                    if bounded[j]:
                        v = min(max(v, lower[j]), upper[j])
                    xc[j] = v
                ref = fr
            else:
                for j in range(n):  # inside contraction
                    v = xc[j] - 0.5 * (xc[j] - sim[n, j])
                    if bounded[j]:
                        v = min(max(v, lower[j]), upper[j])
                    xc[j] = v
                ref = fx[n]
            fc = f(xc)
            n_eval += 1
            if fc < ref:
                for j in range(n):
                    sim[n, j] = xc[j]
                fx[n] = fc
            else:
                for i in range(1, n + 1):  # shrink toward the best vertex
                    for j in range(n):
                        v = sim[0, j] + 0.5 * (sim[i, j] - sim[0, j])
                        if bounded[j]:
                            v = min(max(v, lower[j]), upper[j])
                        sim[i, j] = v
                    fx[i] = f(sim[i])
                n_eval += n

    order = np.argsort(fx)
    best = order[0]
    return sim[best].copy(), fx[best], n_eval, diameter


#: Pure-Python simplex core; accepts any Python callable.
nelder_mead_python = _nelder_mead_impl

#: Compiled simplex core; requires a jitted objective when the JIT is enabled.
if JIT_ENABLED:
    nelder_mead_fast = njit(_nelder_mead_impl)
else:
    nelder_mead_fast = _nelder_mead_impl


@njit(cache=True)
def objective_cat2(x):
    """Joint objective over (eta, kappa, theta_deg, delta)."""
    return lambda_cat2(x[0], x[1], x[2], x[3])


@njit(cache=True)
def objective_cat3(x):
    """Joint objective over (eta, kappa_plus, kappa_minus, theta_plus, theta_minus, delta)."""
    return lambda_cat3(x[0], x[1], x[2], x[3], x[4], x[5])
