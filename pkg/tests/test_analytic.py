import cmath
import math

import numpy as np
import pytest

from morse_dk import analytic
from morse_dk.analytic import Backend, Space, energy, level_count, spectrum, wavefunction
from morse_dk.model import Convention, PotentialSpec, to_effective_oscillator
from morse_dk.oracle import default_grid, residual

POLE = Backend.POLE
LIT = Backend.PAPER_LITERAL


def _trapezoid(y, dx):
    return complex(np.sum(y) * dx - 0.5 * dx * (y[0] + y[-1]))


def test_level_counts(morse3):
    n_max, bound = level_count(morse3, LIT)
    assert n_max == 7 and abs(bound - (6 / math.sqrt(0.5) - 0.5)) < 1e-12
    n_max, _ = level_count(morse3, POLE)
    assert n_max == 2


def test_zero_levels():
    # V2/omega = 0.4 with omega = 1 (rederived) or omega = sqrt(0.5) (printed)
    spec = PotentialSpec.hermitian(1.0, 0.4)
    assert level_count(spec, POLE)[0] == -1
    lit = PotentialSpec.hermitian(1.0, 0.4 * math.sqrt(0.5))
    assert level_count(lit, LIT)[0] == -1
    assert spectrum(spec).levels == ()


def test_integer_bound_is_strict():
    # lambda = 3.5 puts the pole bound V2/(2 omega) - 1/2 exactly at 3
    spec = PotentialSpec.hermitian(1.0, 7.0)
    assert level_count(spec, POLE) == (2, 3.0 + 0j)


def test_energy_examples(morse3):
    assert abs(energy(morse3, 0, LIT) - (-6 * (1 - math.sqrt(0.5) / 6) ** 2)) < 1e-12
    assert abs(energy(morse3, 0, LIT) - (-4.6691)) < 1e-4
    for n, e in enumerate((-6.25, -2.25, -0.25)):
        assert energy(morse3, n, POLE, Convention.REDERIVED) == e


def test_pole_energy_standard_form():
    rng = np.random.default_rng(3)
    for _ in range(20):
        m, alpha, v1, v2 = rng.uniform(0.2, 3, 4)
        spec = PotentialSpec.hermitian(v1, v2 * 5, alpha=alpha, mass=m)
        lam = spec.V2.real / alpha * math.sqrt(m / (2 * v1))
        for n, e in spectrum(spec).levels:
            assert abs(e - (-(alpha ** 2) / (2 * m) * (lam - n - 0.5) ** 2)) < 1e-12 * abs(e) + 1e-14


def test_nonpt_b_example():
    spec = PotentialSpec.nonpt_b((1 + 1j) ** 2, 1, 1)
    e = energy(spec, 0, LIT)
    assert abs(e - (-(1 + 1j) * (1 - 1j / math.sqrt(2)) ** 2)) < 1e-12
    assert abs(e - (-1.9142 + 0.9142j)) < 1e-4


def test_index_error(morse3):
    with pytest.raises(IndexError):
        energy(morse3, 3, POLE)
    with pytest.raises(IndexError):
        energy(morse3, 8, LIT)
    with pytest.raises(IndexError):
        wavefunction(morse3, -1, POLE)


def test_paper_literal_self_consistency():
    for spec in (PotentialSpec.hermitian(1, 6), PotentialSpec.pt(1, 2),
                 PotentialSpec.nonpt_a(1, 0.3, 2)):
        eff = to_effective_oscillator(spec, Convention.PAPER_LITERAL)
        sign = -1 if spec.variant.value == "hermitian" else 1
        for n, e in spectrum(spec, LIT).levels:
            ref = -eff.pseudo_energy * (1 + sign * 2 * eff.omega / eff.pseudo_energy * (n + 0.5)) ** 2
            assert abs(e - ref) <= 1e-14 * max(1.0, abs(ref))


def test_hermitian_spectra_are_real(morse3):
    for backend in (POLE, LIT):
        assert np.all(spectrum(morse3, backend).energies.imag == 0)


def test_pole_spectrum_ordering():
    spec = PotentialSpec.hermitian(0.8, 9.0, alpha=0.6, mass=1.1)
    e = spectrum(spec).energies.real
    assert np.all(e < 0) and np.all(np.diff(e) > 0)
    assert np.all(np.diff(np.abs(e)) < 0)


def test_scale_invariance():
    base = spectrum(PotentialSpec.hermitian(1.3, 5.0, alpha=0.7, mass=0.4)).energies
    scaled = spectrum(PotentialSpec.hermitian(1.3, 5.0, alpha=1.4, mass=1.6)).energies
    assert np.allclose(scaled, base, rtol=1e-12, atol=0)


def test_spectrum_result_serialization(morse3):
    res = spectrum(morse3)
    d = res.to_dict()
    assert d["n_max"] == 2 and [lv["re"] for lv in d["levels"]] == [-6.25, -2.25, -0.25]
    assert res.csv_rows()[0] == ["hermitian", "pole", "rederived", 0, "-6.25", "0.0"]


def test_default_convention_follows_backend(morse3):
    assert spectrum(morse3, LIT).frequency_convention is Convention.PAPER_LITERAL
    assert spectrum(morse3, POLE).frequency_convention is Convention.REDERIVED
    assert spectrum(morse3, LIT, Convention.REDERIVED).n_max == 5


# -- wavefunctions -----------------------------------------------------------

def test_wavefunction_normalized_and_orthogonal(morse3):
    grid = default_grid(morse3)
    x = grid.points
    phi = [wavefunction(morse3, n, POLE, point=x) for n in range(3)]
    for i in range(3):
        for j in range(3):
            overlap = _trapezoid(np.conj(phi[i]) * phi[j], grid.spacing)
            if i == j:
                assert abs(overlap - 1) < 1e-10
            else:
                assert abs(overlap) < 1e-8


def test_wavefunction_nodes(morse3):
    u = np.linspace(1e-3, 8, 20001)
    for n in range(3):
        vals = wavefunction(morse3, n, POLE, point=u, space=Space.U).real
        signs = np.sign(vals[np.abs(vals) > 1e-300])
        assert np.count_nonzero(np.diff(signs)) == n


def test_wavefunction_spaces_agree(morse3):
    x = np.array([-1.0, 0.3, 2.5])
    u = np.exp(-x / 2)
    assert np.allclose(wavefunction(morse3, 1, POLE, point=x),
                       wavefunction(morse3, 1, POLE, point=u, space=Space.U))


def test_wavefunction_spec_order(morse3):
    for backend in (POLE, LIT):
        wf = analytic.wavefunction_spec(morse3, 1, backend)
        assert wf.order == 2 * wf.s_param + 0.5


def test_pole_wavefunctions_solve_the_equation(morse3):
    for n, e in spectrum(morse3).levels:
        r = residual(morse3, e, lambda x, n=n: wavefunction(morse3, n, POLE, point=x))
        assert r < 1e-6


def test_origin_shift_moves_wavefunction():
    base = PotentialSpec.hermitian(1, 6)
    shifted = PotentialSpec.hermitian(1, 6, origin_shift=0.7)
    assert np.allclose(spectrum(base).energies, spectrum(shifted).energies, rtol=1e-13)
    x = np.linspace(-2, 8, 11)
    assert np.allclose(wavefunction(shifted, 1, POLE, point=x + 0.7),
                       wavefunction(base, 1, POLE, point=x), atol=1e-9)


def test_pt_pole_candidate_residual():
    spec = PotentialSpec.pt(1, 2)
    (n, e), = spectrum(spec).levels
    assert abs(e - (-0.75 - 1j)) < 1e-14
    r = residual(spec, e, lambda x: wavefunction(spec, 0, POLE, point=x))
    assert r < 1e-6


def test_nonpt_a_pole_levels_are_real():
    spec = PotentialSpec.nonpt_a(1, 0.3, 2)
    e = spectrum(spec).energies
    assert np.allclose(e, [-4, -1], atol=1e-13)
    for n in range(2):
        r = residual(spec, e[n], lambda x, n=n: wavefunction(spec, n, POLE, point=x))
        assert r < 1e-6
