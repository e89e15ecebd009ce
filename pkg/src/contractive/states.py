"""State families and their parameter spaces.

Internal unit convention, used everywhere in this package: lengths are
measured in units of the component width parameter D0, momenta in units of
hbar/D0, the symmetrized position-momentum correlation in units of hbar, and
time through the adimensional parameter eta = hbar*t/(m*D0^2).  In these
units hbar = m = D0 = 1, a single Gaussian component has position and
momentum variances 1/2, and the standard-quantum-limit line is
var_x(eta) = eta.

A two-component cat is parameterized by the amplitude ratio kappa, the
relative phase theta (degrees, convention: the +delta amplitude is real and
the -delta amplitude carries e^{-i*theta}), and the adimensional half
separation delta.  A three-component cat adds a central component; there the
central amplitude is real and the outer amplitudes carry phases
e^{+i*theta_plus} and e^{+i*theta_minus}.  A twisted complex-Gaussian state
is reduced to its correlation parameter xi and initial position variance.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateNorm, NonPositiveParameter

SQRT_PI = math.sqrt(math.pi)

#: Default floor on the squared norm, in units of sqrt(pi) per unit of
#: summed squared amplitude.  Far below any physically meaningful overlap
#: while still catching complete destructive interference.
EPS_NORM = 1e-10

#: Slack allowed on the generalized uncertainty bound var_x*var_p - (corr/2)^2 >= 1/4.
UNCERTAINTY_TOL = 1e-9


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise NonPositiveParameter(f"{name} must be finite, got {value!r}")
    return value


def _require_positive(name: str, value: float) -> float:
    value = _require_finite(name, value)
    if value <= 0.0:
        raise NonPositiveParameter(f"{name} must be > 0, got {value!r}")
    return value


def _wrap_degrees(theta: float) -> float:
    theta = _require_finite("theta", theta) % 360.0
    return theta if theta != 360.0 else 0.0


@dataclass(frozen=True)
class Cat2Params:
    """Two-component cat state: amplitudes (kappa, e^{-i theta}) at (+delta, -delta)."""

    kappa: float
    theta: float
    delta: float
    eps_norm: float = EPS_NORM

    def __post_init__(self):
        object.__setattr__(self, "kappa", _require_positive("kappa", self.kappa))
        object.__setattr__(self, "delta", _require_positive("delta", self.delta))
        object.__setattr__(self, "theta", _wrap_degrees(self.theta))
        # squared norm in units of sqrt(pi): 1 + k^2 + 2k e^{-d^2} cos(theta)
        k, d = self.kappa, self.delta
        bracket = 1.0 + k * k + 2.0 * k * math.exp(-d * d) * math.cos(math.radians(self.theta))
        if bracket <= self.eps_norm * (1.0 + k * k):
            raise DegenerateNorm(
                f"cat2 norm collapsed (kappa={k}, theta={self.theta}, delta={d})"
            )


@dataclass(frozen=True)
class Cat3Params:
    """Three-component cat state with amplitude ratios taken against the -delta component.

    Amplitudes are (kappa_plus e^{i theta_plus}, kappa_minus, e^{i theta_minus})
    at centers (+delta, 0, -delta); kappa_plus and kappa_minus are the ratios
    of the outer and central amplitudes to the -delta one.
    """

    kappa_plus: float
    kappa_minus: float
    theta_plus: float
    theta_minus: float
    delta: float
    eps_norm: float = EPS_NORM

    def __post_init__(self):
        object.__setattr__(self, "kappa_plus", _require_positive("kappa_plus", self.kappa_plus))
        object.__setattr__(self, "kappa_minus", _require_positive("kappa_minus", self.kappa_minus))
        object.__setattr__(self, "delta", _require_positive("delta", self.delta))
        object.__setattr__(self, "theta_plus", _wrap_degrees(self.theta_plus))
        object.__setattr__(self, "theta_minus", _wrap_degrees(self.theta_minus))
        kp, km, d = self.kappa_plus, self.kappa_minus, self.delta
        tp, tm = math.radians(self.theta_plus), math.radians(self.theta_minus)
        e1, e2 = math.exp(-d * d / 4.0), math.exp(-d * d)
        bracket = (
            kp * kp + km * km + 1.0
            + 2.0 * km * (kp * math.cos(tp) + math.cos(tm)) * e1
            + 2.0 * kp * math.cos(tp - tm) * e2
        )
        if bracket <= self.eps_norm * (kp * kp + km * km + 1.0):
            raise DegenerateNorm(
                f"cat3 norm collapsed (kappa_plus={kp}, kappa_minus={km}, delta={d})"
            )


@dataclass(frozen=True)
class YuenParams:
    """Twisted complex-Gaussian state reduced to (xi, var_x).

    The full family carries mu, nu, omega and mean values x0, p0; the
    variance dynamics depend on them only through the initial position
    variance var_x = |mu - nu|^2 / (2 omega) (in D0^2 units) and the
    correlation parameter xi, so only those are stored.  Mean values do not
    affect the relative variance and are fixed to zero.  The momentum
    variance (1 + 4 xi^2)/(4 var_x) saturates the generalized uncertainty
    relation exactly.
    """

    xi: float
    var_x: float

    def __post_init__(self):
        object.__setattr__(self, "xi", _require_finite("xi", self.xi))
        object.__setattr__(self, "var_x", _require_positive("var_x", self.var_x))

    @property
    def var_p(self) -> float:
        return (1.0 + 4.0 * self.xi * self.xi) / (4.0 * self.var_x)


@dataclass(frozen=True)
class GaussianSuperposition:
    """N-component superposition of equal-width, zero-momentum Gaussians.

    ``components`` holds (amplitude, center) pairs; amplitudes are stored
    unnormalized and normalization is applied inside moment and grid
    computations.  ``width`` is the shared component width (1 in internal
    units).
    """

    components: tuple[tuple[complex, float], ...]
    width: float = 1.0
    eps_norm: float = EPS_NORM

    def __post_init__(self):
        comps = tuple((complex(a), float(c)) for a, c in self.components)
        if len(comps) < 1:
            raise NonPositiveParameter("superposition needs at least one component")
        for a, c in comps:
            if not (cmath.isfinite(a) and math.isfinite(c)):
                raise NonPositiveParameter("component amplitudes and centers must be finite")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "width", _require_positive("width", self.width))
        norm_squared(self)  # raises DegenerateNorm on collapse

    @property
    def amplitudes(self) -> np.ndarray:
        return np.array([a for a, _ in self.components], dtype=complex)

    @property
    def centers(self) -> np.ndarray:
        return np.array([c for _, c in self.components], dtype=float)


def make_cat2(kappa: float, theta: float, delta: float, eps_norm: float = EPS_NORM) -> Cat2Params:
    """Validated two-component cat parameters; theta is reduced mod 360."""
    return Cat2Params(kappa=kappa, theta=theta, delta=delta, eps_norm=eps_norm)


def make_cat3(
    kappa_plus: float,
    kappa_minus: float,
    theta_plus: float,
    theta_minus: float,
    delta: float,
    eps_norm: float = EPS_NORM,
) -> Cat3Params:
    """Validated three-component cat parameters; angles are reduced mod 360."""
    return Cat3Params(
        kappa_plus=kappa_plus,
        kappa_minus=kappa_minus,
        theta_plus=theta_plus,
        theta_minus=theta_minus,
        delta=delta,
        eps_norm=eps_norm,
    )


def make_yuen(xi: float, var_x: float) -> YuenParams:
    """Validated twisted-Gaussian parameters."""
    return YuenParams(xi=xi, var_x=var_x)


def to_superposition(params: Cat2Params | Cat3Params) -> GaussianSuperposition:
    """General superposition form of a cat state (amplitudes unnormalized)."""
    if isinstance(params, Cat2Params):
        phase = cmath.exp(-1j * math.radians(params.theta))
        return GaussianSuperposition(
            components=((params.kappa, +params.delta), (phase, -params.delta)),
            eps_norm=params.eps_norm,
        )
    if isinstance(params, Cat3Params):
        pp = cmath.exp(1j * math.radians(params.theta_plus))
        pm = cmath.exp(1j * math.radians(params.theta_minus))
        return GaussianSuperposition(
            components=(
                (params.kappa_plus * pp, +params.delta),
                (params.kappa_minus, 0.0),
                (pm, -params.delta),
            ),
            eps_norm=params.eps_norm,
        )
    raise TypeError(f"unsupported parameter type {type(params).__name__}")


def norm_squared(state: GaussianSuperposition) -> float:
    """Exact squared norm of the unnormalized superposition.

    Pairwise Gaussian overlaps integrate to w*sqrt(pi)*exp(-(ci-cj)^2/(4 w^2));
    a single unit-amplitude component therefore has squared norm sqrt(pi).
    Raises DegenerateNorm when destructive interference brings the result
    below the eps_norm floor.
    """
    amps = state.amplitudes
    cent = state.centers / state.width
    diff = cent[:, None] - cent[None, :]
    overlaps = np.exp(-0.25 * diff * diff)
    weights = np.conj(amps)[:, None] * amps[None, :]
    total = state.width * SQRT_PI * float(np.sum(weights * overlaps).real)
    floor = state.eps_norm * state.width * SQRT_PI * float(np.sum(np.abs(amps) ** 2))
    if total <= floor:
        raise DegenerateNorm(
            f"superposition norm {total:.3e} below degeneracy floor {floor:.3e}"
        )
    return total


@dataclass(frozen=True)
class Moments:
    """Adimensional first and second moments of a state.

    mean_x in D0 units, mean_p in hbar/D0, var_x in D0^2, var_p in
    hbar^2/D0^2; corr_xp is the symmetrized correlation
    <{dx, dp}> = 2(Re<xp> - <x><p>) in hbar units and re_xp is Re<xp>.
    """

    mean_x: float
    mean_p: float
    var_x: float
    var_p: float
    corr_xp: float
    re_xp: float
    consistency_tol: float = field(default=1e-9, repr=False, compare=False)

    def __post_init__(self):
        for name in ("mean_x", "mean_p", "var_x", "var_p", "corr_xp", "re_xp"):
            object.__setattr__(self, name, _require_finite(name, getattr(self, name)))
        if self.var_x <= 0.0 or self.var_p <= 0.0:
            raise ValueError(f"variances must be positive: var_x={self.var_x}, var_p={self.var_p}")
        if self.uncertainty_product() < 0.25 - UNCERTAINTY_TOL:
            raise ValueError(
                "generalized uncertainty bound violated: "
                f"var_x*var_p - (corr/2)^2 = {self.uncertainty_product():.3e} < 1/4"
            )
        scale = max(1.0, abs(self.corr_xp))
        resid = abs(self.corr_xp - 2.0 * (self.re_xp - self.mean_x * self.mean_p))
        if resid > self.consistency_tol * scale:
            raise ValueError(
                f"corr_xp inconsistent with re_xp and means (residual {resid:.3e})"
            )

    def uncertainty_product(self) -> float:
        """var_x*var_p - (corr_xp/2)^2, bounded below by 1/4."""
        return self.var_x * self.var_p - 0.25 * self.corr_xp * self.corr_xp


#: Moments of a single Gaussian component, the non-contractive reference state.
GAUSSIAN_MOMENTS = Moments(0.0, 0.0, 0.5, 0.5, 0.0, 0.0)
