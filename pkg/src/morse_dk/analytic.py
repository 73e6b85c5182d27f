"""Closed-form spectra and wavefunctions for the solved Morse variants.

Two backends are provided:

``PAPER_LITERAL``
    The printed formulas, evaluated verbatim: ``E_n = -V2 [1 -+ 2 omega/V2 (n+1/2)]^2``
    and the Laguerre wavefunction with ``exp(-M omega u^2)`` and the printed
    normalization constant.
``POLE``
    Quantization read off the pseudo-time Green's function: the radial
    oscillator level ``omega (2n + 1 + nu)`` must equal ``V2``, so
    ``nu_n = V2/omega - (2n+1)`` and ``E_n = -nu_n^2 / 2M``.

Either backend can be combined with either frequency convention
(:class:`~morse_dk.model.Convention`).  When no convention is given the
paper-literal backend uses the printed frequency and the pole backend the
rederived one.
"""
from __future__ import annotations

import cmath
import enum
import functools
import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from . import specfun
from .model import Convention, PotentialSpec, Variant, to_effective_oscillator

__all__ = [
    "Backend",
    "Space",
    "SpectrumResult",
    "WaveFunctionSpec",
    "level_count",
    "energy",
    "pole_order",
    "spectrum",
    "wavefunction_spec",
    "wavefunction",
]


class Backend(str, enum.Enum):
    PAPER_LITERAL = "paper-literal"
    POLE = "pole"

    @classmethod
    def parse(cls, text: str) -> "Backend":
        key = text.strip().lower().replace("_", "-")
        if key in ("pole", "pole-condition", "polecondition"):
            return cls.POLE
        if key in ("paper-literal", "paperliteral", "literal", "paper"):
            return cls.PAPER_LITERAL
        raise ValueError(f"backend: unknown value {text!r}; expected pole or paper-literal")


class Space(str, enum.Enum):
    U = "u"
    X = "x"


def _resolve(backend, convention) -> tuple[Backend, Convention]:
    """Default frequency convention follows the backend."""
    backend = Backend(backend)
    if convention is None:
        convention = (Convention.PAPER_LITERAL if backend is Backend.PAPER_LITERAL
                      else Convention.REDERIVED)
    return backend, Convention(convention)


def _strict_floor(b: float) -> int:
    """Largest integer strictly below ``b`` (``b`` within 1e-12 of an integer snaps to it)."""
    nearest = round(b)
    if abs(b - nearest) <= 1e-12 * max(1.0, abs(b)):
        return int(nearest) - 1
    return math.ceil(b) - 1


def level_count(spec: PotentialSpec, backend: Backend = Backend.POLE,
                convention: Convention | None = None) -> tuple[int, complex]:
    """``(n_max, bound_condition_value)``; ``n_max = -1`` means no levels.

    The paper-literal bound is the printed ``n < V2/omega -+ 1/2``.  The pole
    backend requires a positive centrifugal index, ``n < V2/(2 omega) - 1/2``,
    for real exponents; for complexified exponents it falls back to the
    printed ``+1/2`` inequality since no normalizability condition applies.
    """
    backend, convention = _resolve(backend, convention)
    eff = to_effective_oscillator(spec, convention)
    ratio = eff.pseudo_energy / eff.omega
    if backend is Backend.PAPER_LITERAL:
        bound = ratio - 0.5 if spec.variant is Variant.HERMITIAN else ratio + 0.5
    elif spec.complexified:
        bound = ratio + 0.5
    else:
        bound = ratio / 2 - 0.5
    return _strict_floor(bound.real), complex(bound)


def _check_index(spec, n, backend, convention) -> None:
    backend, convention = _resolve(backend, convention)
    n_max, bound = level_count(spec, backend, convention)
    if n < 0 or n > n_max:
        raise IndexError(
            f"level n={n} outside 0..{n_max} for {spec.variant.value}/{Backend(backend).value} "
            f"(bound condition {bound.real:.6g})")


def pole_order(spec: PotentialSpec, n: int,
               convention: Convention | None = None) -> complex:
    """Centrifugal index ``nu_n = V2/omega - (2n+1)`` fixed by the pole condition."""
    convention = Convention(convention or Convention.REDERIVED)
    eff = to_effective_oscillator(spec, convention)
    return eff.pseudo_energy / eff.omega - (2 * n + 1)


def energy(spec: PotentialSpec, n: int, backend: Backend = Backend.POLE,
           convention: Convention | None = None) -> complex:
    """Energy of level ``n``.

    Raises
    ------
    IndexError
        If ``n`` exceeds the backend's level count.
    """
    backend, convention = _resolve(backend, convention)
    _check_index(spec, n, backend, convention)
    eff = to_effective_oscillator(spec, convention)
    if backend is Backend.PAPER_LITERAL:
        v2, w = eff.pseudo_energy, eff.omega
        sign = -1 if spec.variant is Variant.HERMITIAN else +1
        value = complex(-v2 * (1 + sign * 2 * w / v2 * (n + 0.5)) ** 2)
    else:
        nu = pole_order(spec, n, convention)
        value = complex(-nu * nu / (2 * eff.M))
    # adding 0.0 turns a signed zero into +0.0
    return complex(value.real + 0.0, value.imag + 0.0)


@dataclass(frozen=True)
class SpectrumResult:
    variant: Variant
    backend: Backend
    frequency_convention: Convention
    levels: tuple[tuple[int, complex], ...]
    n_max: int
    bound_condition_value: complex

    @property
    def energies(self) -> np.ndarray:
        return np.array([e for _, e in self.levels], dtype=complex)

    def to_dict(self) -> dict:
        return {
            "variant": self.variant.value,
            "backend": self.backend.value,
            "convention": self.frequency_convention.value,
            "levels": [{"n": n, "re": e.real, "im": e.imag} for n, e in self.levels],
            "n_max": self.n_max,
            "bound_condition_value": [self.bound_condition_value.real, self.bound_condition_value.imag],
        }

    def csv_rows(self) -> list[list]:
        return [[self.variant.value, self.backend.value, self.frequency_convention.value, n,
                 repr(e.real), repr(e.imag)] for n, e in self.levels]

    CSV_HEADER = ("variant", "backend", "convention", "n", "re", "im")


def spectrum(spec: PotentialSpec, backend: Backend = Backend.POLE,
             convention: Convention | None = None) -> SpectrumResult:
    backend, convention = _resolve(backend, convention)
    n_max, bound = level_count(spec, backend, convention)
    levels = tuple((n, energy(spec, n, backend, convention)) for n in range(n_max + 1))
    return SpectrumResult(spec.variant, backend, convention, levels, n_max, bound)


@dataclass(frozen=True)
class WaveFunctionSpec:
    n: int
    s_param: complex
    order: complex  # Laguerre order, 2 s + 1/2
    norm_const: complex
    space: Space
    backend: Backend


def _log_u2(spec: PotentialSpec, point, space: Space) -> np.ndarray:
    p = np.asarray(point, dtype=float)
    if space is Space.X:
        # the origin shift already lives in the absorbed couplings
        return -spec.rate * p + 0j
    if np.any(p <= 0):
        raise ValueError("u-variable points must be > 0")
    return 2 * np.log(p) + 0j


def _paper_s(spec: PotentialSpec, E: complex) -> complex:
    return 0.25 + 0.5 * cmath.sqrt(-2 * spec.mass * E)


def _pole_raw(spec, n, convention, log_u2):
    eff = to_effective_oscillator(spec, convention)
    nu = pole_order(spec, n, convention)
    m_w = eff.M * eff.omega
    z = m_w * np.exp(log_u2)
    # (M omega u^2)^{nu/2} kept continuous in x through log u^2
    return np.exp(0.5 * nu * (cmath.log(m_w) + log_u2) - z / 2) * specfun.laguerre(n, nu, z)


@functools.lru_cache(maxsize=256)
def _pole_norm(spec: PotentialSpec, n: int, convention: Convention) -> float:
    from .oracle import default_grid

    grid = default_grid(spec)
    x = grid.points
    vals = _pole_raw(spec, n, convention, _log_u2(spec, x, Space.X))
    dens = np.abs(vals) ** 2
    integral = np.trapezoid(dens, dx=grid.spacing) if hasattr(np, "trapezoid") else np.trapz(dens, dx=grid.spacing)
    if not integral > 0 or not math.isfinite(integral):
        raise ValueError(f"cannot normalize level {n}: integral {integral}")
    return 1.0 / math.sqrt(integral)


def wavefunction_spec(spec: PotentialSpec, n: int, backend: Backend = Backend.POLE,
                      convention: Convention | None = None,
                      space: Space = Space.X) -> WaveFunctionSpec:
    backend, convention = _resolve(backend, convention)
    space = Space(space)
    _check_index(spec, n, backend, convention)
    if backend is Backend.POLE:
        nu = pole_order(spec, n, convention)
        return WaveFunctionSpec(n, (nu - 0.5) / 2, nu, _pole_norm(spec, n, convention), space, backend)
    E = energy(spec, n, backend, convention)
    eff = to_effective_oscillator(spec, convention)
    s = _paper_s(spec, E)
    ratio = np.exp(special.gammaln(n + 1) - special.loggamma(n + 2 * s + 0.5))
    norm = cmath.sqrt(2 * spec.alpha * (s - 0.25) * eff.M * eff.omega * ratio)
    return WaveFunctionSpec(n, s, 2 * s + 0.5, complex(norm), space, backend)


def wavefunction(spec: PotentialSpec, n: int, backend: Backend = Backend.POLE,
                 convention: Convention | None = None, point=0.0,
                 space: Space = Space.X):
    """Amplitude of level ``n`` at ``point`` (``x`` or ``u``, see ``space``).

    The pole backend returns ``(M omega u^2)^{nu/2} exp(-M omega u^2/2) L_n^nu(M omega u^2)``
    normalized to unit ``dx`` norm on the oracle window.  The paper-literal
    backend returns the printed expression with its printed constant.
    """
    backend, convention = _resolve(backend, convention)
    wf = wavefunction_spec(spec, n, backend, convention, space)
    log_u2 = _log_u2(spec, point, wf.space)
    if wf.backend is Backend.POLE:
        out = wf.norm_const * _pole_raw(spec, n, convention, log_u2)
    else:
        eff = to_effective_oscillator(spec, convention)
        m_w = eff.M * eff.omega
        z = m_w * np.exp(log_u2)
        power = np.exp((wf.s_param + 0.5) * (cmath.log(m_w) + log_u2))
        out = wf.norm_const * power * np.exp(-z) * specfun.laguerre(n, wf.order, z)
    return complex(out) if np.ndim(point) == 0 else out
