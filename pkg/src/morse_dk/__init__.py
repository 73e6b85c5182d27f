"""Generalized Morse potentials: closed-form spectra, a finite-difference
oracle, and the radial-oscillator propagator they reduce to."""

__version__ = "0.1.0"

from .model import Convention, PotentialSpec, Variant  # noqa: E402
from .analytic import Backend, energy, spectrum, wavefunction  # noqa: E402

__all__ = [
    "__version__",
    "Backend",
    "Convention",
    "PotentialSpec",
    "Variant",
    "energy",
    "spectrum",
    "wavefunction",
]
