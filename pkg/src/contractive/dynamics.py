"""Free-evolution variance propagation and the SQL-relative figure of merit.

Under free evolution the position variance is an exact parabola in the
adimensional time eta,

    var_x(eta) = a + b eta + c eta^2,

with a = var_x(0), b = corr_xp(0) and c = var_p(0) in internal units.  The
figure of merit is the variance relative to the standard-quantum-limit line
var_SQL(eta) = eta,

    Lambda(eta) = a/eta + b + c eta,

minimized at eta* = sqrt(a/c) with Lambda(eta*) = b + 2 sqrt(a c).  States
with b = corr_xp(0) < 0 are contractive: their variance initially narrows
and Lambda dips below one on a finite interval.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import (
    InvalidBeta,
    NonPositiveParameter,
    NonPositiveTime,
    ZeroOutcome,
    ZeroXi,
)
from .states import Cat2Params, Moments, UNCERTAINTY_TOL

#: CODATA SI value of the reduced Planck constant, J*s.
HBAR_SI = 1.054571817e-34


@dataclass(frozen=True)
class VarianceCurve:
    """Coefficients of var_x(eta) = a + b eta + c eta^2 (internal units)."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if not all(map(math.isfinite, (self.a, self.b, self.c))):
            raise NonPositiveParameter("curve coefficients must be finite")
        if self.a <= 0.0 or self.c <= 0.0:
            raise NonPositiveParameter(
                f"variance curve needs a > 0 and c > 0, got a={self.a}, c={self.c}"
            )
        if self.a * self.c - 0.25 * self.b * self.b < 0.25 - UNCERTAINTY_TOL:
            raise ValueError(
                "curve violates the uncertainty bound a*c - b^2/4 >= 1/4"
            )
        # implied: discriminant b^2 - 4 a c <= 1 - 4*(1/4) < 0, variance never zero


class ContractivityRegion(enum.Enum):
    """Sign classification of the two-component correlation term."""

    NONE = "none"
    REGION_I = "I"  # kappa > 1 and sin(theta) > 0
    REGION_II = "II"  # kappa < 1 and sin(theta) < 0


def curve_from_moments(m: Moments) -> VarianceCurve:
    """Variance-curve coefficients (var_x, corr_xp, var_p) of a state."""
    return VarianceCurve(a=m.var_x, b=m.corr_xp, c=m.var_p)


def variance_at(v: VarianceCurve, eta: float) -> float:
    """Position variance at adimensional time eta >= 0 (D0^2 units)."""
    if eta < 0.0:
        raise NonPositiveTime(f"eta must be >= 0, got {eta}")
    return v.a + v.b * eta + v.c * eta * eta


def lambda_at(v: VarianceCurve, eta: float) -> float:
    """Relative variance var_x(eta)/eta; diverges as eta -> 0+."""
    if eta <= 0.0:
        raise NonPositiveTime(f"relative variance needs eta > 0, got {eta}")
    return v.a / eta + v.b + v.c * eta


def optimal_eta(v: VarianceCurve) -> tuple[float, float]:
    """Minimizing time and minimum of the relative variance.

    eta* = sqrt(a/c), independent of the linear coefficient, and
    Lambda(eta*) = b + 2 sqrt(a c).
    """
    eta_star = math.sqrt(v.a / v.c)
    lambda_min = v.b + 2.0 * math.sqrt(v.a * v.c)
    return eta_star, lambda_min


def yuen_lambda_min(xi: float) -> float:
    """Minimum relative variance of a twisted Gaussian, sqrt(1+4 xi^2) - 2 xi.

    Equals 1 at xi = 0 and decreases monotonically for xi > 0.
    """
    if not math.isfinite(xi):
        raise NonPositiveParameter(f"xi must be finite, got {xi!r}")
    return math.sqrt(1.0 + 4.0 * xi * xi) - 2.0 * xi


def yuen_times(p) -> tuple[float, float, float]:
    """Optimal times of a twisted Gaussian, in adimensional units.

    t_star minimizes the relative variance, t_bar the absolute variance:

        t_star = 2 var_x / sqrt(1 + 4 xi^2),
        t_bar  = 4 xi var_x / (1 + 4 xi^2),
        ratio  = t_star / t_bar = sqrt(1 + 4 xi^2) / (2 xi) -> 1 as xi -> inf.

    t_bar and the ratio are undefined at xi = 0 (the variance is monotone).
    """
    if p.xi == 0.0:
        raise ZeroXi("absolute-variance optimal time undefined at xi = 0")
    root = math.sqrt(1.0 + 4.0 * p.xi * p.xi)
    t_star = 2.0 * p.var_x / root
    t_bar = 4.0 * p.xi * p.var_x / (1.0 + 4.0 * p.xi * p.xi)
    return t_star, t_bar, root / (2.0 * p.xi)


def _snapped_sin_deg(theta: float) -> float:
    if theta % 180.0 == 0.0:
        return 0.0
    return math.sin(math.radians(theta))


def contractivity_region(p: Cat2Params) -> ContractivityRegion:
    """Which sign region, if any, makes a two-component cat contractive.

    Region I: kappa > 1 with sin(theta) > 0; region II: kappa < 1 with
    sin(theta) < 0.  Determined solely by those signs, and consistent with
    the sign of the correlation from cat2_moments.
    """
    s = _snapped_sin_deg(p.theta)
    if p.kappa > 1.0 and s > 0.0:
        return ContractivityRegion.REGION_I
    if p.kappa < 1.0 and s < 0.0:
        return ContractivityRegion.REGION_II
    return ContractivityRegion.NONE


def is_contractive(m: Moments) -> bool:
    """True when the initial variance slope corr_xp is negative."""
    return m.corr_xp < 0.0


def sql_crossings(v: VarianceCurve) -> tuple[float, float] | None:
    """Endpoints of the interval where Lambda < 1, or None.

    They are the real roots of c eta^2 + (b - 1) eta + a = 0; when the
    discriminant is negative the curve never drops below the SQL line.
    """
    disc = (v.b - 1.0) ** 2 - 4.0 * v.a * v.c
    if disc <= 0.0:
        return None
    root = math.sqrt(disc)
    lo = (-(v.b - 1.0) - root) / (2.0 * v.c)
    hi = (-(v.b - 1.0) + root) / (2.0 * v.c)
    return lo, hi


def gl_family_member(a: float, beta: float, delta: float):
    """Two-component cat whose mean position equals the readout outcome a.

    Returns (params, x0_units, width_units): the separation x0 = beta |a|
    and width parameter D0 = beta |a| / delta in the same physical units as
    a.  With the relative phase fixed at 90 or 270 degrees, matching the
    mean to a forces kappa = sqrt((beta+1)/(beta-1)) for a > 0 (phase 90)
    and the reciprocal ratio with phase 270 for a < 0; both branches are
    contractive and share the same Lambda profile under the
    (kappa, theta) -> (1/kappa, 360-theta) invariance.
    """
    if not math.isfinite(a) or a == 0.0:
        raise ZeroOutcome("no family member exists for outcome a = 0")
    if not math.isfinite(beta) or beta <= 1.0:
        raise InvalidBeta(f"beta must exceed 1, got {beta!r}")
    if delta <= 0.0:
        raise NonPositiveParameter(f"delta must be > 0, got {delta!r}")

    if a > 0.0:
        params = Cat2Params(kappa=math.sqrt((beta + 1.0) / (beta - 1.0)), theta=90.0, delta=delta)
    else:
        params = Cat2Params(kappa=math.sqrt((beta - 1.0) / (beta + 1.0)), theta=270.0, delta=delta)
    x0_units = beta * abs(a)
    width_units = x0_units / delta

    from .moments import cat2_moments  # deferred to avoid an import cycle

    m = cat2_moments(params)
    realized = m.mean_x * width_units
    assert abs(realized - a) <= 1e-10 * abs(a), "mean-position match failed"
    assert m.corr_xp < 0.0, "constructed member is not contractive"
    return params, x0_units, width_units


def eta_from_time(mass: float, delta0: float, t: float, hbar: float = HBAR_SI) -> float:
    """Adimensional time hbar*t/(m*D0^2) from dimensional inputs (SI or any
    coherent unit system)."""
    for name, val in (("mass", mass), ("delta0", delta0), ("t", t), ("hbar", hbar)):
        if not math.isfinite(val) or val <= 0.0:
            raise NonPositiveParameter(f"{name} must be > 0 and finite, got {val!r}")
    return hbar * t / (mass * delta0 * delta0)
