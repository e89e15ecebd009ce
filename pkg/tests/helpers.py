"""Shared random-state draws and comparison helpers for the test suite."""
import numpy as np

from contractive import (
    Cat2Params,
    Cat3Params,
    ContractiveError,
    GaussianSuperposition,
    YuenParams,
    to_superposition,
)


def draw_cat2(rng) -> Cat2Params:
    return Cat2Params(
        kappa=float(np.exp(rng.uniform(-1.8, 1.8))),
        theta=float(rng.uniform(0.0, 360.0)),
        delta=float(rng.uniform(0.05, 3.0)),
    )


def draw_cat3(rng) -> Cat3Params:
    return Cat3Params(
        kappa_plus=float(np.exp(rng.uniform(-1.8, 1.8))),
        kappa_minus=float(np.exp(rng.uniform(-1.8, 1.8))),
        theta_plus=float(rng.uniform(0.0, 360.0)),
        theta_minus=float(rng.uniform(0.0, 360.0)),
        delta=float(rng.uniform(0.1, 3.0)),
    )


def draw_yuen(rng) -> YuenParams:
    return YuenParams(
        xi=float(rng.uniform(-3.0, 3.0)),
        var_x=float(rng.uniform(0.1, 4.0)),
    )


def draw_superposition(rng, n: int = 4) -> GaussianSuperposition:
    for _ in range(64):
        try:
            centers = np.sort(rng.uniform(-3.0, 3.0, size=n))
            amps = rng.uniform(0.2, 2.0, size=n) * np.exp(2j * np.pi * rng.uniform(size=n))
            return GaussianSuperposition(components=tuple(zip(amps, centers)))
        except ContractiveError:
            continue
    raise AssertionError("could not draw a valid superposition")


def draw_state(kind, rng) -> GaussianSuperposition:
    if kind == "cat2":
        return to_superposition(draw_cat2(rng))
    if kind == "cat3":
        return to_superposition(draw_cat3(rng))
    return draw_superposition(rng)


def scaled_gap(a: float, b: float) -> float:
    """Relative difference, floored at unit scale for near-zero quantities."""
    return abs(a - b) / max(1.0, abs(a), abs(b))


def moments_gap(m1, m2) -> float:
    return max(
        scaled_gap(m1.mean_x, m2.mean_x),
        scaled_gap(m1.mean_p, m2.mean_p),
        scaled_gap(m1.var_x, m2.var_x),
        scaled_gap(m1.var_p, m2.var_p),
        scaled_gap(m1.corr_xp, m2.corr_xp),
        scaled_gap(m1.re_xp, m2.re_xp),
    )
