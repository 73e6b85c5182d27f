"""Finite-difference ground truth for the Morse spectra and wavefunctions.

Two independent checks are offered:

* :func:`eigen_bound_states` discretizes ``H = -1/(2m) d^2/dx^2 + V(x)`` with
  Dirichlet walls and diagonalizes it (real tridiagonal/banded solver for
  Hermitian specs, dense complex eigensolver otherwise);
* :func:`residual` applies a fourth-order discretization of ``H`` to a
  candidate ``(E, psi)`` pair and reports ``|H psi - E psi| / |psi|``.
"""
from __future__ import annotations

import csv
import enum
import logging
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
import scipy.linalg
import scipy.sparse
import scipy.sparse.linalg

from .linalg import ConvergenceError, hqr_eigvals
from .model import PotentialSpec, Variant, evaluate_potential

__all__ = [
    "Grid",
    "Stencil",
    "OracleResult",
    "ConvergenceError",
    "LEAK_TOLERANCE",
    "default_grid",
    "well_grid",
    "discretize",
    "solve_potential",
    "eigen_bound_states",
    "residual",
    "residual_potential",
    "matrix_residual",
    "richardson",
    "richardson_extrapolate",
]

log = logging.getLogger(__name__)

LEAK_TOLERANCE = 1e-6
# fraction of the grid at each end inspected for boundary leakage; 5% of the
# default Morse window already reaches the classically allowed region
_LEAK_FRACTION = 0.01


@dataclass(frozen=True)
class Grid:
    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if self.n_points < 3:
            raise ValueError(f"n_points must be >= 3, got {self.n_points}")
        if not self.x_min < self.x_max:
            raise ValueError("x_min must be < x_max")

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    def refined(self, factor: int = 2) -> "Grid":
        return Grid(self.x_min, self.x_max, (self.n_points - 1) * factor + 1)

    def to_dict(self) -> dict:
        return {"x_min": self.x_min, "x_max": self.x_max, "n_points": self.n_points,
                "spacing": self.spacing}


class Stencil(str, enum.Enum):
    THREE_POINT = "three-point"
    FIVE_POINT = "five-point"

    @property
    def order(self) -> int:
        return 2 if self is Stencil.THREE_POINT else 4


def default_grid(spec: PotentialSpec, n_points: int = 4001) -> Grid:
    """Window covering the repulsive wall and the bound-state tail.

    Real exponents: ``[-4/alpha, 40/alpha]``.  Complexified exponents give a
    potential periodic in ``x``; two periods ``[-2 pi/alpha, 2 pi/alpha]`` are
    used.  Both are shifted by ``origin_shift``.
    """
    a = spec.alpha
    r0 = spec.origin_shift
    if spec.complexified:
        return Grid(-2 * np.pi / a + r0, 2 * np.pi / a + r0, n_points)
    return Grid(-4.0 / a + r0, 40.0 / a + r0, n_points)


def well_grid(spec: PotentialSpec, n_points: int = 8001, left: float = 5.0,
              right: float = 80.0) -> Grid:
    """Window ``[x* - left/alpha, x* + right/alpha]`` around the well minimum ``x*``.

    The fixed default window clips the tail of very shallow wells and sits
    close to the minimum of very deep ones; centring on
    ``x* = r0 + ln(2 V1 / V2) / alpha`` keeps the boundary leak small across a
    wide range of depths.  Real exponents with positive real couplings only.
    """
    if spec.complexified:
        raise ValueError(f"{spec.variant.value}: no real well minimum for a complexified exponent")
    ratio = 2 * spec.V1.real / spec.V2.real
    if not ratio > 0:
        raise ValueError("V1, V2: well minimum needs Re V1 > 0 and Re V2 > 0")
    x_star = spec.origin_shift + np.log(ratio) / spec.alpha
    return Grid(x_star - left / spec.alpha, x_star + right / spec.alpha, n_points)


def _kinetic_bands(mass: float, h: float, stencil: Stencil) -> list[float]:
    # coefficients of -1/(2m) d^2/dx^2 at offsets 0, 1, 2
    if stencil is Stencil.THREE_POINT:
        return [1.0 / (mass * h * h), -0.5 / (mass * h * h)]
    c = 1.0 / (24.0 * mass * h * h)
    return [30.0 * c, -16.0 * c, 1.0 * c]


def discretize(potential: Callable, mass: float, grid: Grid,
               stencil: Stencil = Stencil.THREE_POINT) -> scipy.sparse.csr_array:
    """Banded Hamiltonian on the interior nodes; the two end nodes are Dirichlet walls.

    Returns an ``(n_points - 2)``-square sparse matrix, complex if the
    potential is.
    """
    stencil = Stencil(stencil)
    if stencil is Stencil.FIVE_POINT and grid.n_points < 5:
        raise ValueError("five-point stencil needs n_points >= 5")
    x = grid.points[1:-1]
    v = np.asarray(potential(x))
    if not np.iscomplexobj(v) or np.all(v.imag == 0):
        v = np.real(v).astype(float)
    bands = _kinetic_bands(mass, grid.spacing, stencil)
    n = x.size
    diags = [bands[0] + v]
    offsets = [0]
    for k, c in enumerate(bands[1:], start=1):
        diags += [np.full(n - k, c), np.full(n - k, c)]
        offsets += [k, -k]
    return scipy.sparse.diags_array(diags, offsets=offsets, format="csr")


@dataclass
class OracleResult:
    energies: np.ndarray
    vectors: np.ndarray  # (n_points, k), zero at the walls, unit l2 norm in dx
    grid: Grid
    boundary_leak: np.ndarray
    stencil: Stencil = Stencil.THREE_POINT
    route: str = "hermitian"
    notes: list[str] = field(default_factory=list)

    @property
    def accepted(self) -> np.ndarray:
        return self.boundary_leak < LEAK_TOLERANCE

    def to_dict(self) -> dict:
        return {
            "energies": [[float(e.real), float(e.imag)] for e in self.energies],
            "boundary_leak": [float(b) for b in self.boundary_leak],
            "accepted": [bool(a) for a in self.accepted],
            "grid": self.grid.to_dict(),
            "stencil": self.stencil.value,
            "route": self.route,
        }

    def write_vectors_csv(self, path, index: int = 0) -> None:
        """Dump one eigenvector as CSV columns ``x, re_psi, im_psi``."""
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["x", "re_psi", "im_psi"])
            for x, p in zip(self.grid.points, self.vectors[:, index]):
                writer.writerow([repr(float(x)), repr(float(p.real)), repr(float(p.imag))])


def _leak(vec: np.ndarray) -> float:
    n = vec.size
    m = max(1, int(np.ceil(_LEAK_FRACTION * n)))
    peak = np.abs(vec).max()
    if peak == 0:
        return np.inf
    edge = max(np.abs(vec[:m]).max(), np.abs(vec[-m:]).max())
    return float(edge / peak)


def _inverse_iteration(h: scipy.sparse.csr_array, lam: complex, steps: int = 3) -> np.ndarray:
    n = h.shape[0]
    shift = lam + 1e-10 * max(1.0, abs(lam))
    lu = scipy.sparse.linalg.splu((h - shift * scipy.sparse.identity(n, format="csc")).tocsc())
    v = np.ones(n, dtype=complex) / np.sqrt(n)
    for _ in range(steps):
        v = lu.solve(v)
        v /= np.linalg.norm(v)
    return v


def solve_potential(potential: Callable, mass: float, grid: Grid, k: int = 1,
                    stencil: Stencil = Stencil.THREE_POINT, hermitian: bool | None = None,
                    solver: str = "lapack") -> OracleResult:
    """Lowest ``k`` eigenpairs (by real part) of the discretized Hamiltonian.

    ``hermitian=None`` picks the real route when the sampled potential is
    real.  The complex route uses LAPACK (``solver="lapack"``) or the native
    Hessenberg/QR routine plus inverse iteration (``solver="native"``).
    """
    stencil = Stencil(stencil)
    h_mat = discretize(potential, mass, grid, stencil)
    n = h_mat.shape[0]
    if k < 1 or k > n:
        raise ValueError(f"k must be in [1, {n}]")
    if hermitian is None:
        hermitian = not np.iscomplexobj(h_mat.data)

    if hermitian:
        route = "hermitian"
        if np.iscomplexobj(h_mat.data):
            h_mat = h_mat.real
        if stencil is Stencil.THREE_POINT:
            d = h_mat.diagonal(0)
            e = h_mat.diagonal(1)
            energies, vecs = scipy.linalg.eigh_tridiagonal(
                d, e, select="i", select_range=(0, k - 1))
        else:
            band = np.zeros((3, n))
            for off in range(3):
                band[off, : n - off] = h_mat.diagonal(-off)
            energies, vecs = scipy.linalg.eig_banded(
                band, lower=True, select="i", select_range=(0, k - 1))
        energies = energies.astype(complex)
        vecs = vecs.astype(complex)
    else:
        route = f"complex-{solver}"
        dense = h_mat.toarray().astype(complex)
        if solver == "lapack":
            w, v = scipy.linalg.eig(dense)
            order = np.argsort(w.real, kind="stable")[:k]
            energies, vecs = w[order], v[:, order]
        elif solver == "native":
            w = hqr_eigvals(dense)
            order = np.argsort(w.real, kind="stable")[:k]
            energies = w[order]
            vecs = np.column_stack([_inverse_iteration(h_mat, lam) for lam in energies])
        else:
            raise ValueError(f"unknown solver {solver!r}")

    full = np.zeros((grid.n_points, k), dtype=complex)
    full[1:-1] = vecs
    h = grid.spacing
    for j in range(k):
        col = full[:, j]
        # fix the global phase so the largest component is real positive
        peak = col[np.argmax(np.abs(col))]
        col *= abs(peak) / peak
        col /= np.sqrt(np.sum(np.abs(col) ** 2) * h)
    leaks = np.array([_leak(full[:, j]) for j in range(k)])
    return OracleResult(energies=np.asarray(energies), vectors=full, grid=grid,
                        boundary_leak=leaks, stencil=stencil, route=route)


def eigen_bound_states(spec: PotentialSpec, grid: Grid | None = None, k: int = 3,
                       stencil: Stencil = Stencil.THREE_POINT,
                       solver: str = "lapack") -> OracleResult:
    """Finite-difference eigenpairs of a Morse spec.

    Hermitian specs use the real symmetric route.  ``nonpt-a`` (real
    exponent, complex couplings) uses the dense complex route.  The
    complexified-exponent variants have no well-posed real-line
    Dirichlet problem and are rejected; use :func:`residual` for those.
    """
    if spec.complexified:
        raise ValueError(
            f"{spec.variant.value}: the real-line eigenproblem of a complexified exponent "
            "is not well posed; use the residual test instead")
    grid = grid or default_grid(spec)
    result = solve_potential(lambda x: evaluate_potential(spec, x), spec.mass, grid, k,
                             stencil, hermitian=spec.variant is Variant.HERMITIAN, solver=solver)
    bad = ~result.accepted
    if bad.any():
        result.notes.append(f"states {np.flatnonzero(bad).tolist()} exceed boundary leak {LEAK_TOLERANCE:g}")
    return result


def _five_point_h(v: np.ndarray, mass: float, h: float, psi: np.ndarray) -> np.ndarray:
    lap = (-psi[:-4] + 16 * psi[1:-3] - 30 * psi[2:-2] + 16 * psi[3:-1] - psi[4:]) / (12 * h * h)
    return -lap / (2 * mass) + v[2:-2] * psi[2:-2]


def residual_potential(potential: Callable, mass: float, E, psi: Callable, grid: Grid) -> float:
    """``|H psi - E psi|_2 / |psi|_2`` with the five-point stencil.

    The three outermost cells at each end are excluded.
    """
    x = grid.points
    values = np.asarray(psi(x), dtype=complex)
    v = np.asarray(potential(x), dtype=complex)
    hpsi = _five_point_h(v, mass, grid.spacing, values)  # indices 2 .. n-3
    r = (hpsi - E * values[2:-2])[1:-1]                   # indices 3 .. n-4
    ref = values[3:-3]
    norm = np.linalg.norm(ref)
    if not norm > 1e-300:
        raise ValueError("degenerate candidate: |psi| vanishes on the grid")
    return float(np.linalg.norm(r) / norm)


def residual(spec: PotentialSpec, E, psi: Callable, grid: Grid | None = None) -> float:
    """Pointwise Schroedinger residual of a candidate pair for a Morse spec."""
    grid = grid or default_grid(spec)
    return residual_potential(lambda x: evaluate_potential(spec, x), spec.mass, E, psi, grid)


def matrix_residual(h_mat, E, vec: np.ndarray) -> float:
    """``|H v - E v| / |v|`` against an explicit matrix (interior nodes)."""
    v = np.asarray(vec)
    if v.size == h_mat.shape[0] + 2:
        v = v[1:-1]
    return float(np.linalg.norm(h_mat @ v - E * v) / np.linalg.norm(v))


def richardson_extrapolate(coarse, fine, order: int = 2):
    """Eliminate the ``h^order`` error term from values at spacings ``h`` and ``h/2``."""
    f = 2.0 ** order
    return (f * fine - coarse) / (f - 1.0)


def richardson(spec: PotentialSpec, n_level: int, grids: Sequence[Grid],
               stencil: Stencil = Stencil.THREE_POINT, solver: str = "lapack") -> complex:
    """Extrapolated oracle energy of level ``n_level`` from grids at ``h`` and ``h/2``."""
    if len(grids) != 2:
        raise ValueError("richardson needs exactly two grids (h and h/2)")
    coarse, fine = grids
    if (coarse.x_min, coarse.x_max) != (fine.x_min, fine.x_max):
        raise ValueError("grid mismatch: extents differ")
    if fine.n_points - 1 != 2 * (coarse.n_points - 1):
        raise ValueError("grid mismatch: second grid must halve the spacing")
    stencil = Stencil(stencil)
    e = [eigen_bound_states(spec, g, n_level + 1, stencil, solver).energies[n_level] for g in grids]
    return complex(richardson_extrapolate(e[0], e[1], stencil.order))
