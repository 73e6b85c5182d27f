import math
import warnings

import numpy as np
import pytest
from scipy import special

from morse_dk import analytic
from morse_dk.model import EffectiveOscillator, PotentialSpec, to_effective_oscillator
from morse_dk.oracle import Grid
from morse_dk.propagator import (CausticError, KernelParams, _weights, energy_from_pole,
                                 extract_ground_pseudo_energy, free_radial_kernel,
                                 kernel_closed, kernel_sliced, kernel_sliced_profile,
                                 kernel_spectral, radial_eigenfunction, radial_grid)

UNIT = EffectiveOscillator(1.0, 1.0, 0.0)


def closed(nu, ua, ub, tau, M=1.0, omega=1.0):
    return kernel_closed(KernelParams.euclidean(M, omega, nu, ua, ub, tau))


def spectral(nu, ua, ub, tau, n, M=1.0, omega=1.0):
    return kernel_spectral(KernelParams.euclidean(M, omega, nu, ua, ub, tau), n)


def test_kernel_params_validation():
    with pytest.raises(ValueError):
        KernelParams.euclidean(1, 1, 1, 1, 1, 0.0)
    with pytest.raises(ValueError):
        KernelParams.euclidean(1, 1, 1, -1, 1, 1.0)
    p = KernelParams.euclidean(1, 1, 1, 1, 1, 2.5)
    assert p.is_euclidean and p.tau == 2.5 and p.time == -2.5j


def test_closed_kernel_real_and_positive():
    rng = np.random.default_rng(4)
    for _ in range(50):
        M, omega, tau = rng.uniform(0.2, 3, 3)
        nu = rng.uniform(0, 5)
        ua, ub = rng.uniform(0.05, 4, 2)
        k = closed(nu, ua, ub, tau, M, omega)
        assert k.imag == pytest.approx(0, abs=1e-15 * abs(k)) and k.real > 0


def test_closed_kernel_symmetry():
    assert closed(1.3, 0.7, 1.9, 0.8) == pytest.approx(closed(1.3, 1.9, 0.7, 0.8), rel=1e-14)


def test_free_limit():
    M, nu, ua, ub, tau = 1.3, 0.8, 0.9, 1.4, 0.7
    expected = (M * math.sqrt(ua * ub) / tau * math.exp(-M * (ua ** 2 + ub ** 2) / (2 * tau))
                * special.iv(nu, M * ua * ub / tau))
    assert closed(nu, ua, ub, tau, M, 0.0).real == pytest.approx(expected, rel=1e-13)
    assert closed(nu, ua, ub, tau, M, 1e-7).real == pytest.approx(expected, rel=1e-10)


def test_caustic_and_real_time_guard():
    with pytest.raises(CausticError):
        # imaginary frequency in Euclidean time: omega S = pi
        kernel_closed(KernelParams.euclidean(1, 1j, 1, 1, 1, math.pi))
    with pytest.raises(ValueError):
        kernel_closed(KernelParams(1, 1, 1, 1, 1, 2.0))
    value = kernel_closed(KernelParams(1, 1, 1, 1, 1, 0.3))
    assert np.isfinite(value)


@pytest.mark.parametrize("nu", [0.5, 1.0, 2.3])
def test_spectral_matches_closed(nu):
    assert abs(spectral(nu, 1, 1, 1, 80) - closed(nu, 1, 1, 1)) < 1e-8


@pytest.mark.parametrize("nu", [0.5, 1.0, 2.3])
def test_spectral_convergence_is_monotone(nu):
    ref = closed(nu, 0.8, 1.2, 0.5)
    errs = [abs(spectral(nu, 0.8, 1.2, 0.5, n) - ref) for n in (2, 4, 8, 16, 32)]
    for a, b in zip(errs, errs[1:]):
        assert b < a or b < 1e-14


def test_spectral_ground_state_dominance():
    one = spectral(1.0, 1, 1, 20, 1)
    many = spectral(1.0, 1, 1, 20, 40)
    assert abs(one / many - 1) < 1e-8


def test_spectral_plateau():
    for tau in (2.0, 4.0):
        assert abs(spectral(0.5, 1, 1.5, tau, 40) - spectral(0.5, 1, 1.5, tau, 20)) < 1e-10


def test_spectral_needs_euclidean_time():
    with pytest.raises(ValueError):
        kernel_spectral(KernelParams(1, 1, 1, 1, 1, 0.3), 10)
    with pytest.raises(ValueError):
        kernel_spectral(KernelParams.euclidean(1, 1, 1, 1, 1, 1), 0)


def test_radial_eigenfunctions_orthonormal():
    u = np.linspace(1e-6, 12, 40001)
    du = u[1] - u[0]
    psi = [radial_eigenfunction(n, 1.0, 1.0, 1.7, u).real for n in range(4)]
    gram = np.array([[np.sum(a * b) * du for b in psi] for a in psi])
    assert np.allclose(gram, np.eye(4), atol=1e-8)


@pytest.mark.parametrize("nu", [0.5, 1.0, 2.3])
def test_chapman_kolmogorov(nu):
    grid = radial_grid(1.0, 1.0)
    assert grid.n_points == 2000
    u, w = grid.points, _weights(grid)
    left = np.array([closed(nu, 1.0, x, 0.4).real for x in u])
    right = np.array([closed(nu, x, 1.3, 0.6).real for x in u])
    assert abs(np.sum(left * right * w) - closed(nu, 1.0, 1.3, 1.0).real) < 1e-7


def test_free_radial_kernel_matches_closed():
    u = np.array([0.3, 1.0, 2.2])
    got = free_radial_kernel(1.0, 1.5, u, 0.8, 0.2)
    ref = [closed(1.5, x, 0.8, 0.2, omega=0.0).real for x in u]
    assert np.allclose(got, ref, rtol=1e-13)


def test_single_slice_exact_for_free_motion():
    free = EffectiveOscillator(1.0, 0.0, 0.0)
    for E in (-0.125, -0.5, -2.0):
        nu = math.sqrt(-2 * E)
        value = kernel_sliced(free, E, 0.9, 1.3, 0.5, 1)
        assert value == pytest.approx(closed(nu, 0.9, 1.3, 0.5, omega=0.0).real, rel=1e-13)


def test_sliced_error_ratio():
    ref = closed(1.0, 1, 1, 1).real
    e64 = abs(kernel_sliced(UNIT, -0.5, 1, 1, 1.0, 64) - ref)
    e128 = abs(kernel_sliced(UNIT, -0.5, 1, 1, 1.0, 128) - ref)
    assert 4 * 0.8 < e64 / e128 < 4 * 1.2


def test_sliced_composition():
    grid = radial_grid(1.0, 1.0)
    _, a = kernel_sliced_profile(UNIT, -0.5, 1.0, 0.5, 16, grid)
    _, b = kernel_sliced_profile(UNIT, -0.5, 1.2, 0.5, 16, grid)
    composed = np.sum(a * b * _weights(grid))
    direct = kernel_sliced(UNIT, -0.5, 1.0, 1.2, 1.0, 32, grid)
    assert abs(composed - direct) < 1e-8


def test_sliced_negative_control():
    ref = closed(1.0, 1, 1, 1).real
    good = kernel_sliced(UNIT, -0.5, 1, 1, 1.0, 64)
    bad = kernel_sliced(UNIT, -0.5, 1, 1, 1.0, 64, symmetrized=False)
    assert abs(good - ref) < 1e-5 < 1e-4 < abs(bad - ref)


def test_sliced_edge_warning():
    narrow = Grid(0.01, 1.5, 300)
    with pytest.warns(RuntimeWarning, match="endpoint weight"):
        kernel_sliced(UNIT, -0.5, 1, 1, 1.0, 4, narrow)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        kernel_sliced(UNIT, -0.5, 1, 1, 1.0, 4)


def test_sliced_rejects_complex_oscillator():
    with pytest.raises(ValueError):
        kernel_sliced(EffectiveOscillator(-2.0, 1j, 0.0), -0.5, 1, 1, 1.0, 4)
    with pytest.raises(ValueError):
        kernel_sliced(UNIT, -0.5, 1, 1, 1.0, 0)


@pytest.mark.parametrize("nu, eps0", [(1.0, 2.0), (0.5, 1.5), (1e-6, 1.0)])
def test_extract_ground_pseudo_energy(nu, eps0):
    est = extract_ground_pseudo_energy(lambda t: closed(nu, 1, 1, t), [4, 5, 6, 7])
    assert est == pytest.approx(eps0, rel=1e-2)


def test_extract_from_sliced_kernel():
    est = extract_ground_pseudo_energy(lambda t: kernel_sliced(UNIT, -0.5, 1, 1, t, 256),
                                       [4, 5, 6, 7])
    assert est == pytest.approx(2.0, rel=2e-2)


def test_extract_errors():
    with pytest.raises(ValueError, match="ascending"):
        extract_ground_pseudo_energy(lambda t: closed(1, 1, 1, t), [5, 4, 6])
    with pytest.raises(ValueError, match="monotonic"):
        extract_ground_pseudo_energy(lambda t: math.exp(t), [1, 2, 3])


def test_pole_consistency():
    for spec in (PotentialSpec.hermitian(1, 6), PotentialSpec.hermitian(0.7, 9.3, 0.6, 1.4),
                 PotentialSpec.pt(1, 2), PotentialSpec.nonpt_a(1, 0.3, 2)):
        eff = to_effective_oscillator(spec)
        for n, e in analytic.spectrum(spec).levels:
            assert abs(energy_from_pole(eff, n) - e) <= 1e-14 * max(1.0, abs(e))
            nu = analytic.pole_order(spec, n)
            assert abs(eff.level(n, nu) - eff.pseudo_energy) <= 1e-14 * abs(eff.pseudo_energy)
