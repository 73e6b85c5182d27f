"""Morse potential variants, PT-symmetry test and the reduction to a radial oscillator.

The generalized Morse potential is ``V(x) = V1 exp(-2 k x) - V2 exp(-k x)``
with ``k = alpha`` (real exponent) or ``k = i alpha`` (complexified exponent).
The substitution ``u^2 = exp(-k x)`` together with the pseudo-time
``dt/ds = 1/u^2`` maps the fixed-energy problem onto a radial oscillator of
mass ``M = 4 m / k^2`` in which ``V2`` plays the role of the eigenvalue.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Variant",
    "Convention",
    "PotentialSpec",
    "EffectiveOscillator",
    "evaluate_potential",
    "check_pt_symmetry",
    "to_effective_oscillator",
]


class Variant(str, enum.Enum):
    HERMITIAN = "hermitian"
    PT = "pt"
    NONPT_A = "nonpt-a"
    NONPT_B = "nonpt-b"

    @classmethod
    def parse(cls, text: str) -> "Variant":
        key = text.strip().lower().replace("_", "-")
        aliases = {
            "hermitian": cls.HERMITIAN,
            "hermitian-generalized": cls.HERMITIAN,
            "pt": cls.PT,
            "pt-symmetric": cls.PT,
            "nonpt-a": cls.NONPT_A,
            "non-pt-a": cls.NONPT_A,
            "nonptcomplexa": cls.NONPT_A,
            "nonpt-b": cls.NONPT_B,
            "non-pt-b": cls.NONPT_B,
            "nonptcomplexb": cls.NONPT_B,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(
                f"variant: unknown value {text!r}; expected one of "
                + ", ".join(v.value for v in cls)
            ) from None


class Convention(str, enum.Enum):
    """Frequency convention of the reduced oscillator.

    ``PAPER_LITERAL`` takes ``omega^2 M = +-V1`` as typeset; ``REDERIVED``
    follows from requiring ``M omega^2 u^2 / 2 = V1 u^2`` after the time
    transformation, i.e. ``omega^2 M = 2 V1``.
    """

    PAPER_LITERAL = "paper-literal"
    REDERIVED = "rederived"

    @classmethod
    def parse(cls, text: str) -> "Convention":
        key = text.strip().lower().replace("_", "-")
        for member in cls:
            if key in (member.value, member.name.lower().replace("_", "-")):
                return member
        raise ValueError(f"convention: unknown value {text!r}; expected paper-literal or rederived")


def _as_complex_pair(value) -> list[float]:
    z = complex(value)
    return [z.real, z.imag]


@dataclass(frozen=True)
class PotentialSpec:
    """One of the four Morse-variant parameterizations.

    Use the named constructors (:meth:`hermitian`, :meth:`pt`,
    :meth:`nonpt_a`, :meth:`nonpt_b`) rather than the raw initializer.
    """

    variant: Variant
    V1: complex
    V2: complex
    alpha: float
    mass: float
    origin_shift: float = 0.0
    A: float | None = None
    B: float | None = None
    C: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "V1", complex(self.V1))
        object.__setattr__(self, "V2", complex(self.V2))
        for name in ("alpha", "mass", "origin_shift"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name}: must be finite")
            object.__setattr__(self, name, value)
        if not (cmath.isfinite(self.V1) and cmath.isfinite(self.V2)):
            raise ValueError("V1, V2: must be finite")
        if self.alpha <= 0:
            raise ValueError(f"alpha: must be > 0, got {self.alpha}")
        if self.mass <= 0:
            raise ValueError(f"mass: must be > 0, got {self.mass}")

        v = self.variant
        if v is Variant.HERMITIAN:
            if self.V1.imag != 0 or self.V2.imag != 0:
                raise ValueError("V1, V2: hermitian variant requires real values")
            if self.V1.real <= 0 or self.V2.real <= 0:
                raise ValueError("V1, V2: hermitian variant requires V1 > 0 and V2 > 0")
        elif v is Variant.PT:
            if self.V1.imag != 0 or self.V2.imag != 0:
                raise ValueError("V1, V2: pt variant requires real values")
        elif v is Variant.NONPT_A:
            if None in (self.A, self.B, self.C):
                raise ValueError("A, B, C: nonpt-a variant requires all three")
            z = complex(self.A, self.B)
            object.__setattr__(self, "V1", z * z)
            object.__setattr__(self, "V2", (2 * self.C + 1) * z)
            if self.alpha != 1.0:
                raise ValueError("alpha: nonpt-a variant fixes alpha = 1")
        elif v is Variant.NONPT_B:
            if self.A is not None and self.B is not None:
                object.__setattr__(self, "V2", complex(self.A, self.B))

    # -- constructors -------------------------------------------------------

    @classmethod
    def hermitian(cls, V1: float, V2: float, alpha: float = 1.0, mass: float = 0.5,
                  origin_shift: float = 0.0) -> "PotentialSpec":
        return cls(Variant.HERMITIAN, V1, V2, alpha, mass, origin_shift)

    @classmethod
    def pt(cls, V1: float, V2: float, alpha: float = 1.0, mass: float = 0.5,
           origin_shift: float = 0.0) -> "PotentialSpec":
        return cls(Variant.PT, V1, V2, alpha, mass, origin_shift)

    @classmethod
    def nonpt_a(cls, A: float, B: float, C: float, mass: float = 0.5,
                origin_shift: float = 0.0) -> "PotentialSpec":
        z = complex(A, B)
        return cls(Variant.NONPT_A, z * z, (2 * C + 1) * z, 1.0, mass, origin_shift,
                   A=float(A), B=float(B), C=float(C))

    @classmethod
    def nonpt_b(cls, V1: complex, A: float, B: float, alpha: float = 1.0, mass: float = 0.5,
                origin_shift: float = 0.0) -> "PotentialSpec":
        return cls(Variant.NONPT_B, V1, complex(A, B), alpha, mass, origin_shift,
                   A=float(A), B=float(B))

    # -- derived quantities -------------------------------------------------

    @property
    def complexified(self) -> bool:
        """True when the exponent is ``i alpha x`` rather than ``alpha x``."""
        return self.variant in (Variant.PT, Variant.NONPT_B)

    @property
    def rate(self) -> complex:
        """Exponent rate ``k`` in ``exp(-k x)``."""
        return 1j * self.alpha if self.complexified else complex(self.alpha)

    def absorbed(self) -> tuple[complex, complex]:
        """``(V1, V2)`` with the origin shift folded into the couplings."""
        k = self.rate
        r0 = self.origin_shift
        return self.V1 * cmath.exp(2 * k * r0), self.V2 * cmath.exp(k * r0)

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        out = {
            "variant": self.variant.value,
            "V1": _as_complex_pair(self.V1),
            "V2": _as_complex_pair(self.V2),
            "alpha": self.alpha,
            "mass": self.mass,
            "origin_shift": self.origin_shift,
        }
        for name in ("A", "B", "C"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "PotentialSpec":
        if "variant" not in data:
            raise ValueError("variant: missing")
        variant = Variant.parse(str(data["variant"]))

        def cplx(key):
            if key not in data:
                raise ValueError(f"{key}: missing")
            value = data[key]
            if isinstance(value, (list, tuple)):
                if len(value) != 2:
                    raise ValueError(f"{key}: expected [re, im]")
                return complex(float(value[0]), float(value[1]))
            try:
                return complex(value)
            except (TypeError, ValueError):
                raise ValueError(f"{key}: cannot parse {value!r} as a complex number") from None

        mass = float(data.get("mass", 0.5))
        shift = float(data.get("origin_shift", 0.0))
        if variant is Variant.NONPT_A:
            try:
                A, B, C = (float(data[k]) for k in ("A", "B", "C"))
            except KeyError as exc:
                raise ValueError(f"{exc.args[0]}: required for nonpt-a") from None
            return cls.nonpt_a(A, B, C, mass=mass, origin_shift=shift)
        alpha = float(data.get("alpha", 1.0))
        if variant is Variant.NONPT_B and "V2" not in data:
            try:
                return cls.nonpt_b(cplx("V1"), float(data["A"]), float(data["B"]), alpha, mass, shift)
            except KeyError as exc:
                raise ValueError(f"{exc.args[0]}: required for nonpt-b without V2") from None
        return cls(variant, cplx("V1"), cplx("V2"), alpha, mass, shift,
                   A=data.get("A"), B=data.get("B"), C=data.get("C"))


def evaluate_potential(spec: PotentialSpec, x):
    """``V(x)`` for the given variant; vectorized over ``x``."""
    xx = np.asarray(x, dtype=float) - spec.origin_shift
    e = np.exp(-spec.rate * xx)
    value = spec.V1 * e * e - spec.V2 * e
    if spec.variant is Variant.HERMITIAN:
        value = value.real + 0j
    return complex(value) if np.ndim(x) == 0 else value


def check_pt_symmetry(spec: PotentialSpec, probe) -> tuple[bool, float]:
    """Test ``V(-x) == conj(V(x))`` on a probe grid symmetric about zero."""
    probe = np.asarray(probe, dtype=float)
    if not np.allclose(np.sort(probe), np.sort(-probe), rtol=0, atol=1e-12 * (1 + np.abs(probe).max())):
        raise ValueError("probe grid must be symmetric about 0")
    v_plus = evaluate_potential(spec, probe)
    v_minus = evaluate_potential(spec, -probe)
    deviation = float(np.max(np.abs(v_minus - np.conj(v_plus))))
    scale = float(np.max(np.abs(v_plus)))
    return bool(deviation < 1e-12 * (1 + scale)), deviation


@dataclass(frozen=True)
class EffectiveOscillator:
    """Radial oscillator obtained after the point and time transformations.

    ``H = p^2/2M + M omega^2 u^2/2 + c(E)/u^2`` with eigenvalue
    ``pseudo_energy``.  ``c(E)`` depends on the physical energy ``E``, so it is
    exposed through :meth:`centrifugal_coeff`.
    """

    M: complex
    omega: complex
    pseudo_energy: complex
    frequency_convention: Convention = Convention.REDERIVED
    # +1 reproduces the (2ME - 1/4)/2M form printed for the Hermitian case,
    # -1 the sqrt(-2ME)^2 form used for the complexified cases
    energy_sign: int = -1
    variant: Variant | None = field(default=None, compare=False)

    def centrifugal_coeff(self, E, symmetrized: bool = True) -> complex:
        """Coefficient of ``1/u^2``; ``symmetrized=False`` drops the -1/4 shift."""
        shift = 0.25 if symmetrized else 0.0
        return (self.energy_sign * 2 * self.M * E - shift) / (2 * self.M)

    def order(self, E, symmetrized: bool = True) -> complex:
        """Centrifugal index ``nu`` with ``(nu^2 - 1/4)/2M`` equal to the coefficient."""
        return cmath.sqrt(2 * self.M * self.centrifugal_coeff(E, symmetrized) + 0.25)

    def level(self, n: int, nu) -> complex:
        """Radial oscillator level ``omega (2n + 1 + nu)``."""
        return self.omega * (2 * n + 1 + nu)


def to_effective_oscillator(spec: PotentialSpec,
                            convention: Convention = Convention.REDERIVED) -> EffectiveOscillator:
    """Reduce ``spec`` to its effective radial oscillator.

    Real-exponent variants use ``M = 4m/alpha^2``.  For the complexified
    variants the paper-literal convention keeps ``M = 4m/alpha^2`` with
    ``omega^2 M = -V1``; the rederived convention carries ``(i alpha)^2``
    into the mass, ``M = -4m/alpha^2``, with ``omega^2 M = 2 V1``.
    """
    convention = Convention(convention)
    V1, V2 = spec.absorbed()
    M_real = 4 * spec.mass / spec.alpha ** 2
    if convention is Convention.PAPER_LITERAL:
        M = complex(M_real)
        if spec.variant is Variant.HERMITIAN:
            omega = cmath.sqrt(V1 / M)
            sign = +1
        else:
            omega = cmath.sqrt(-V1 / M)
            sign = -1
    else:
        M = complex(-M_real if spec.complexified else M_real)
        omega = cmath.sqrt(2 * V1 / M)
        sign = -1
    return EffectiveOscillator(M=M, omega=omega, pseudo_energy=V2,
                               frequency_convention=convention, energy_sign=sign,
                               variant=spec.variant)
