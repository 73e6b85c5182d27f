"""Radial-oscillator propagator in pseudo-time.

Three independent evaluations of ``K(u_b, S; u_a, 0)`` for
``H = p^2/2M + M omega^2 u^2/2 + (nu^2 - 1/4)/(2 M u^2)`` on ``u > 0``:

* :func:`kernel_closed`   -- the Bessel closed form;
* :func:`kernel_spectral` -- the eigenfunction sum over ``omega (2n+1+nu)``;
* :func:`kernel_sliced`   -- symmetric Trotter slicing composed by quadrature.

Numerical work is done in Euclidean pseudo-time ``S = -i tau`` where every
sum and integral converges absolutely; the spectral sum then decays as
``exp(-eps_n tau)``.
"""
from __future__ import annotations

import cmath
import logging
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import special

from . import specfun
from .model import EffectiveOscillator
from .oracle import Grid

__all__ = [
    "CausticError",
    "KernelParams",
    "kernel_closed",
    "kernel_spectral",
    "radial_eigenfunction",
    "radial_grid",
    "kernel_sliced",
    "kernel_sliced_profile",
    "free_radial_kernel",
    "extract_ground_pseudo_energy",
    "energy_from_pole",
]

log = logging.getLogger(__name__)


class CausticError(ValueError):
    """``sin(omega S)`` vanishes: the closed-form kernel is singular."""


@dataclass(frozen=True)
class KernelParams:
    M: complex
    omega: complex
    nu: complex
    u_a: float
    u_b: float
    time: complex  # pseudo-time S; Euclidean points store S = -i tau

    def __post_init__(self):
        if self.u_a <= 0 or self.u_b <= 0:
            raise ValueError("u_a and u_b must be > 0")

    @classmethod
    def euclidean(cls, M, omega, nu, u_a, u_b, tau) -> "KernelParams":
        if tau <= 0:
            raise ValueError("Euclidean time tau must be > 0")
        return cls(complex(M), complex(omega), complex(nu), float(u_a), float(u_b), -1j * tau)

    @property
    def is_euclidean(self) -> bool:
        t = complex(self.time)
        return t.real == 0 and t.imag < 0

    @property
    def tau(self) -> float:
        if not self.is_euclidean:
            raise ValueError("not a Euclidean time point")
        return -complex(self.time).imag

    def with_time(self, time) -> "KernelParams":
        return KernelParams(self.M, self.omega, self.nu, self.u_a, self.u_b, time)


def kernel_closed(p: KernelParams) -> complex:
    """Closed-form radial-oscillator kernel.

    ``K = M w sqrt(u_a u_b)/(i sin wS) exp[i M w/2 (u_a^2+u_b^2) cot wS] I_nu(M w u_a u_b/(i sin wS))``

    Real pseudo-time is accepted only for ``|omega S| < pi/2``.
    """
    S = complex(p.time)
    w = complex(p.omega)
    M = complex(p.M)
    if S.imag == 0 and abs(w * S) >= math.pi / 2:
        raise ValueError("real-time kernel evaluation is restricted to |omega S| < pi/2")
    if w == 0:
        # free radial kernel, limit of the closed form
        denom = 1j * S
        cot_term = 1j * M / (2 * S)
    else:
        sin_ws = cmath.sin(w * S)
        if abs(sin_ws) < 1e-14 * max(1.0, abs(cmath.cos(w * S))):
            raise CausticError(f"caustic at omega*S = {w * S}")
        denom = 1j * sin_ws / w
        cot_term = 1j * M * w / 2 * cmath.cos(w * S) / sin_ws
    z = M * p.u_a * p.u_b / denom
    expo = cot_term * (p.u_a ** 2 + p.u_b ** 2) + abs(z.real)
    bes = specfun.bessel_i(p.nu, z, scaled=True)
    return complex(M * math.sqrt(p.u_a * p.u_b) / denom * cmath.exp(expo) * bes)


def radial_eigenfunction(n: int, M, omega, nu, u):
    """Unit-normalized (in ``du``) radial eigenfunction with level ``omega (2n+1+nu)``."""
    mw = complex(M) * complex(omega)
    nu = complex(nu)
    u = np.asarray(u, dtype=float)
    log_norm = 0.5 * (math.log(2) + (nu + 1) * cmath.log(mw) + special.gammaln(n + 1)
                      - specfun.log_gamma(nu + n + 1))
    z = mw * u * u
    out = np.exp(log_norm + (nu + 0.5) * np.log(u + 0j) - z / 2) * specfun.laguerre(n, nu, z)
    return complex(out) if out.ndim == 0 else out


def kernel_spectral(p: KernelParams, n_trunc: int) -> complex:
    """Truncated eigenfunction expansion ``sum_n exp(-eps_n tau) psi_n(u_b) psi_n*(u_a)``."""
    if not p.is_euclidean:
        raise ValueError("the spectral sum is only evaluated in Euclidean time")
    if n_trunc < 1:
        raise ValueError("n_trunc must be >= 1")
    tau = p.tau
    total = 0j
    for n in range(n_trunc):
        eps_n = p.omega * (2 * n + 1 + p.nu)
        psi_b = radial_eigenfunction(n, p.M, p.omega, p.nu, p.u_b)
        psi_a = radial_eigenfunction(n, p.M, p.omega, p.nu, p.u_a)
        total += cmath.exp(-eps_n * tau) * psi_b * psi_a.conjugate()
    return total


def free_radial_kernel(M: float, nu: float, u, v, eps: float):
    """Euclidean kernel of ``p^2/2M + (nu^2-1/4)/(2M u^2)``; exact for any ``eps``."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    z = M * u * v / eps
    bes = np.real(specfun.bessel_i(nu, z, scaled=True))
    return M * np.sqrt(u * v) / eps * np.exp(-M * (u - v) ** 2 / (2 * eps)) * bes


def radial_grid(M: float, omega: float, n_target: int = 0, n_points: int = 2000) -> Grid:
    """Uniform quadrature grid on ``(0, u_max]`` with ``u_max = 6 sqrt((2n+1)/(M omega))``.

    The node ``u = 0`` (centrifugal singularity) is excluded; the first node
    sits one spacing from the origin.
    """
    u_max = 6.0 * math.sqrt((2 * n_target + 1) / (M * omega))
    h = u_max / n_points
    return Grid(h, u_max, n_points)


def _weights(grid: Grid) -> np.ndarray:
    # trapezoid on [0, u_max] with a vanishing integrand at u = 0
    w = np.full(grid.n_points, grid.spacing)
    w[-1] *= 0.5
    return w


def _sliced_setup(effective: EffectiveOscillator, E, tau: float, n_slices: int,
                  symmetrized: bool):
    M = complex(effective.M)
    w = complex(effective.omega)
    if M.imag != 0 or w.imag != 0 or M.real <= 0 or w.real < 0:
        raise ValueError("sliced kernel needs a real positive mass and real frequency")
    M, w = M.real, w.real
    nu = effective.order(E, symmetrized)
    if nu.imag != 0 or nu.real < 0:
        raise ValueError(f"centrifugal index must be real and >= 0, got {nu}")
    if n_slices < 1:
        raise ValueError("n_slices must be >= 1")
    if tau <= 0:
        raise ValueError("tau must be > 0")
    return M, w, nu.real, tau / n_slices


def _half_potential(M, w, eps, u):
    return np.exp(-eps * 0.25 * M * w * w * np.asarray(u, dtype=float) ** 2)


def _step_matrix(M, w, nu, eps, u, wts):
    # symmetric in (u, u'): evaluate the upper triangle only
    hp = _half_potential(M, w, eps, u)
    i, j = np.triu_indices(u.size)
    step = np.empty((u.size, u.size))
    upper = free_radial_kernel(M, nu, u[i], u[j], eps) * hp[i] * hp[j]
    step[i, j] = upper
    step[j, i] = upper
    step *= wts[None, :]
    return step


def kernel_sliced_profile(effective: EffectiveOscillator, E, u_a: float, tau: float,
                          n_slices: int, u_grid: Grid | None = None,
                          symmetrized: bool = True) -> tuple[np.ndarray, np.ndarray]:
    """Sliced kernel ``K_n(u, u_a)`` at every node ``u`` of the quadrature grid.

    Returns ``(u, values)``.  Composing two profiles with the trapezoid weights
    of the same grid reproduces :func:`kernel_sliced` with the slice counts
    added.
    """
    M, w, nu, eps = _sliced_setup(effective, E, tau, n_slices, symmetrized)
    grid = u_grid or radial_grid(M, max(w, 1e-12))
    u = grid.points
    v = free_radial_kernel(M, nu, u, u_a, eps) * _half_potential(M, w, eps, u) \
        * _half_potential(M, w, eps, u_a)
    if n_slices > 1:
        step = _step_matrix(M, w, nu, eps, u, _weights(grid))
        for _ in range(n_slices - 1):
            v = step @ v
    return u, v


def kernel_sliced(effective: EffectiveOscillator, E, u_a: float, u_b: float, tau: float,
                  n_slices: int, u_grid: Grid | None = None,
                  symmetrized: bool = True) -> float:
    """Time-sliced Euclidean kernel built by matrix composition.

    Each slice is ``exp(-eps V/2) K_0(eps) exp(-eps V/2)`` with
    ``V = M omega^2 u^2 / 2`` and ``K_0`` the exact free radial propagator
    carrying the centrifugal coefficient of ``effective`` at energy ``E``.
    Intermediate positions are integrated on ``u_grid``.  The error is
    ``O(n_slices^-2)``.

    ``symmetrized=False`` drops the -1/4 shift in the centrifugal coefficient.
    """
    M, w, nu, eps = _sliced_setup(effective, E, tau, n_slices, symmetrized)
    if n_slices == 1:
        return float(_half_potential(M, w, eps, u_b) * free_radial_kernel(M, nu, u_b, u_a, eps)
                     * _half_potential(M, w, eps, u_a))

    grid = u_grid or radial_grid(M, max(w, 1e-12))
    u = grid.points
    wts = _weights(grid)
    hp = _half_potential(M, w, eps, u)
    v = free_radial_kernel(M, nu, u, u_a, eps) * hp * _half_potential(M, w, eps, u_a)
    tail = free_radial_kernel(M, nu, u_b, u, eps) * hp * _half_potential(M, w, eps, u_b)
    edge = max(abs(v[-1]), abs(tail[-1])) * wts[-1]
    total = np.sum(np.abs(v) * wts) + 1e-300
    if edge > 1e-10 * total:
        warnings.warn("kernel_sliced: endpoint weight exceeds 1e-10 of total; widen u_grid",
                      RuntimeWarning, stacklevel=2)
    if n_slices > 2:
        step = _step_matrix(M, w, nu, eps, u, wts)
        for _ in range(n_slices - 2):
            v = step @ v
    return float(np.sum(tail * wts * v))


def extract_ground_pseudo_energy(kernel: Callable[[float], complex],
                                 tau_list: Sequence[float]) -> float:
    """Least-squares decay rate of ``|K(tau)|``, i.e. the lowest level ``eps_0``."""
    taus = np.asarray(tau_list, dtype=float)
    if taus.size < 3:
        raise ValueError("need at least 3 tau values")
    if np.any(np.diff(taus) <= 0):
        raise ValueError("tau_list must be strictly ascending")
    mags = np.array([abs(kernel(t)) for t in taus])
    if np.any(mags <= 0) or np.any(np.diff(mags) >= 0):
        raise ValueError("kernel decay is not monotonic over tau_list")
    slope, _ = np.polyfit(taus, -np.log(mags), 1)
    return float(slope)


def energy_from_pole(effective: EffectiveOscillator, n: int) -> complex:
    """Solve ``omega (2n + 1 + nu) = pseudo_energy`` for ``nu``; return ``E = -nu^2/2M``."""
    nu = effective.pseudo_energy / effective.omega - (2 * n + 1)
    return -nu * nu / (2 * effective.M)
