"""Independent grid verification of the closed-form dynamics.

States are sampled on a uniform grid, evolved exactly in time (either by
the per-component closed form or by the spectral free propagator), and their
moments recovered by quadrature.  Nothing here shares algebra with the
closed-form moment module, which is what makes the agreement tests between
the two routes meaningful.

The grid is padded so that the wave function decays below 1e-14 of its peak
before the boundary; trapezoid quadrature on such a grid is spectrally
accurate, and momentum moments are taken in Fourier space to avoid
finite-difference error.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DegenerateNorm, GridTooSmall, NonPositiveParameter, NonPositiveTime
from .states import GaussianSuperposition, Moments

#: largest tolerated ratio of boundary to peak probability density
BOUNDARY_DECAY = 1e-14

#: tolerated deviation of the quadrature norm from one after normalization
NORM_TOL = 1e-9


@dataclass(frozen=True)
class Grid:
    """Uniform symmetric grid on [-half_width, half_width) with 2^m nodes."""

    half_width: float
    n_points: int = 2**14

    def __post_init__(self):
        if not math.isfinite(self.half_width) or self.half_width <= 0.0:
            raise NonPositiveParameter(f"half_width must be > 0, got {self.half_width!r}")
        n = int(self.n_points)
        if n < 2**10 or n & (n - 1):
            raise NonPositiveParameter(
                f"n_points must be a power of two >= 1024, got {self.n_points!r}"
            )
        object.__setattr__(self, "n_points", n)

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / self.n_points

    @cached_property
    def x(self) -> np.ndarray:
        x = -self.half_width + self.spacing * np.arange(self.n_points)
        x.setflags(write=False)
        return x

    @cached_property
    def wavenumbers(self) -> np.ndarray:
        k = 2.0 * math.pi * np.fft.fftfreq(self.n_points, d=self.spacing)
        k.setflags(write=False)
        return k

    @staticmethod
    def for_state(
        state: GaussianSuperposition, eta_max: float = 4.0, n_points: int = 2**14
    ) -> Grid:
        """Grid wide enough to hold the state out to time eta_max.

        Padding of twelve evolved widths keeps the Gaussian tails below
        ~1e-30 at the boundary for the whole time range.
        """
        w = state.width
        reach = max(abs(c) for c in state.centers)
        pad = 12.0 * math.sqrt(w * w + (eta_max / w) ** 2)
        return Grid(half_width=reach + pad, n_points=n_points)


def suggested_half_width(state: GaussianSuperposition, eta: float) -> float:
    return Grid.for_state(state, eta_max=max(eta, 0.0)).half_width


@dataclass(frozen=True)
class SampledState:
    """Normalized wave-function samples at an attached evolution time."""

    grid: Grid
    values: np.ndarray
    eta: float = 0.0

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.grid.n_points,):
            raise NonPositiveParameter("values must match the grid size")
        nrm = quadrature_norm(self.grid, v)
        if abs(nrm - 1.0) > NORM_TOL:
            raise NonPositiveParameter(f"samples are not normalized: norm = {nrm!r}")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "eta", float(self.eta))
        if self.eta < 0.0:
            raise NonPositiveTime(f"eta must be >= 0, got {self.eta!r}")


def quadrature_norm(grid: Grid, values: np.ndarray) -> float:
    """Trapezoid norm; exact to rounding for boundary-decayed samples."""
    return float(np.sum(np.abs(values) ** 2).real * grid.spacing)


def _check_boundary(grid: Grid, values: np.ndarray, state=None, eta: float = 0.0):
    rho = np.abs(values) ** 2
    peak = float(rho.max())
    edge = float(max(rho[0], rho[-1]))
    if peak == 0.0 or edge > BOUNDARY_DECAY * peak:
        hint = ""
        if state is not None:
            hint = f"; suggest half_width >= {suggested_half_width(state, eta):.2f}"
        raise GridTooSmall(
            f"boundary density {edge:.2e} exceeds {BOUNDARY_DECAY:.0e} of peak "
            f"{peak:.2e} on half_width {grid.half_width}{hint}"
        )


def _normalized(grid: Grid, values: np.ndarray, state: GaussianSuperposition) -> np.ndarray:
    nrm2 = float(np.sum(np.abs(values) ** 2).real * grid.spacing)
    amps = state.amplitudes
    floor = state.eps_norm * math.sqrt(math.pi) * state.width * float(np.sum(np.abs(amps) ** 2))
    if nrm2 <= floor:
        raise DegenerateNorm("sampled state norm below degeneracy floor")
    return values / math.sqrt(nrm2)


def sample(state: GaussianSuperposition, grid: Grid) -> SampledState:
    """Normalized samples of the superposition at eta = 0."""
    x = grid.x
    w2 = state.width**2
    psi = np.zeros(grid.n_points, dtype=complex)
    for amp, center in state.components:
        psi += amp * np.exp(-((x - center) ** 2) / (2.0 * w2))
    psi = _normalized(grid, psi, state)
    _check_boundary(grid, psi, state)
    return SampledState(grid=grid, values=psi, eta=0.0)


def evolve_analytic(state: GaussianSuperposition, eta: float, grid: Grid) -> SampledState:
    """Exact free evolution of each Gaussian component, summed and normalized.

    A component of width w evolves as
    (1 + i eta / w^2)^(-1/2) exp(-(x - c)^2 / (2 (w^2 + i eta))); the
    prefactor is (1 + eta^2/w^4)^(-1/4) e^{-i atan(eta/w^2)/2} up to the
    shared normalization applied afterwards.
    """
    if eta < 0.0:
        raise NonPositiveTime(f"eta must be >= 0, got {eta!r}")
    x = grid.x
    w2 = state.width**2
    pref = (1.0 + 1j * eta / w2) ** (-0.5)
    denom = 2.0 * (w2 + 1j * eta)
    psi = np.zeros(grid.n_points, dtype=complex)
    for amp, center in state.components:
        psi += amp * pref * np.exp(-((x - center) ** 2) / denom)
    psi = _normalized(grid, psi, state)
    _check_boundary(grid, psi, state, eta=eta)
    return SampledState(grid=grid, values=psi, eta=float(eta))


def evolve_spectral(s: SampledState, eta: float) -> SampledState:
    """Exact free propagation in momentum space: each mode gains e^{-i k^2 eta / 2}."""
    if eta < 0.0:
        raise NonPositiveTime(f"eta must be >= 0, got {eta!r}")
    k = s.grid.wavenumbers
    psi_k = np.fft.fft(s.values)
    psi_k *= np.exp(-0.5j * k * k * eta)
    psi = np.fft.ifft(psi_k)
    _check_boundary(s.grid, psi)
    return SampledState(grid=s.grid, values=psi, eta=s.eta + float(eta))


def grid_moments(s: SampledState) -> Moments:
    """Moments by quadrature: position from |psi|^2, momentum in Fourier space.

    The imaginary part of the quadrature <x p> must recover the operator
    identity value 1/2; a larger deviation indicates an inadequate grid.
    """
    grid, psi = s.grid, s.values
    x, dx = grid.x, grid.spacing
    rho = np.abs(psi) ** 2
    mean_x = float(np.sum(x * rho) * dx)
    var_x = float(np.sum((x - mean_x) ** 2 * rho) * dx)

    k = grid.wavenumbers
    psi_k = np.fft.fft(psi)
    dens_k = np.abs(psi_k) ** 2 * (dx / grid.n_points)  # integrates to 1 over dk
    mean_p = float(np.sum(k * dens_k))
    var_p = float(np.sum((k - mean_p) ** 2 * dens_k))

    dpsi = np.fft.ifft(1j * k * psi_k)
    xp = complex(np.sum(np.conj(psi) * x * (-1j) * dpsi) * dx)
    if abs(xp.imag - 0.5) > 1e-6:
        raise GridTooSmall(
            f"Im<xp> = {xp.imag!r} deviates from 1/2; grid resolution is inadequate"
        )
    re_xp = xp.real
    corr = 2.0 * (re_xp - mean_x * mean_p)
    return Moments(
        mean_x=mean_x, mean_p=mean_p, var_x=var_x, var_p=var_p,
        corr_xp=corr, re_xp=re_xp,
    )
