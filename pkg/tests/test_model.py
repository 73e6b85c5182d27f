import cmath
import json
import math

import numpy as np
import pytest

from morse_dk.model import (Convention, PotentialSpec, Variant, check_pt_symmetry,
                            evaluate_potential, to_effective_oscillator)

PROBE = np.linspace(-6.0, 6.0, 241)


def test_potential_examples():
    assert evaluate_potential(PotentialSpec.hermitian(1, 1), 0.0) == 0
    assert abs(evaluate_potential(PotentialSpec.pt(1, 1), 0.0)) < 1e-15
    v = evaluate_potential(PotentialSpec.nonpt_a(1, 1, 0), 0.0)
    assert abs(v - (-1 + 1j)) < 1e-15


def test_origin_shift_translates():
    base = PotentialSpec.hermitian(1.0, 3.0, alpha=0.7)
    shifted = PotentialSpec.hermitian(1.0, 3.0, alpha=0.7, origin_shift=1.5)
    x = np.linspace(-2, 5, 15)
    assert np.allclose(evaluate_potential(shifted, x + 1.5), evaluate_potential(base, x))


def test_hermitian_potential_is_real():
    rng = np.random.default_rng(1)
    for _ in range(20):
        spec = PotentialSpec.hermitian(*rng.uniform(0.1, 5, 2), alpha=rng.uniform(0.2, 3))
        assert np.all(evaluate_potential(spec, rng.uniform(-5, 20, 50)).imag == 0)


def test_pt_examples():
    ok, dev = check_pt_symmetry(PotentialSpec.pt(1.3, 2.1), PROBE)
    assert ok and dev < 1e-12
    assert not check_pt_symmetry(PotentialSpec.hermitian(1, 2), PROBE)[0]
    assert not check_pt_symmetry(PotentialSpec.nonpt_a(1, 1, 0), PROBE)[0]


def test_pt_property_random_draws():
    rng = np.random.default_rng(7)
    for _ in range(100):
        spec = PotentialSpec.pt(rng.uniform(-5, 5), rng.uniform(-5, 5), alpha=rng.uniform(0.1, 4))
        assert check_pt_symmetry(spec, PROBE)[0]


def test_pt_check_needs_symmetric_probe():
    with pytest.raises(ValueError):
        check_pt_symmetry(PotentialSpec.pt(1, 1), np.linspace(0, 1, 5))


def test_validation_messages_name_fields():
    with pytest.raises(ValueError, match="V1, V2"):
        PotentialSpec.hermitian(-1, 2)
    with pytest.raises(ValueError, match="V1, V2"):
        PotentialSpec(Variant.PT, 1 + 1j, 2, 1.0, 0.5)
    with pytest.raises(ValueError, match="alpha"):
        PotentialSpec.hermitian(1, 2, alpha=0)
    with pytest.raises(ValueError, match="mass"):
        PotentialSpec.hermitian(1, 2, mass=-1)
    with pytest.raises(ValueError, match="variant"):
        Variant.parse("morse")


def test_nonpt_a_materializes_couplings():
    spec = PotentialSpec.nonpt_a(1.2, 0.4, 1.5)
    z = 1.2 + 0.4j
    assert spec.V1 == z * z and spec.V2 == 4 * z and spec.alpha == 1.0


def test_nonpt_b_stores_v2():
    spec = PotentialSpec.nonpt_b(2.0, 0.5, -0.3)
    assert spec.V2 == 0.5 - 0.3j


@pytest.mark.parametrize("m, alpha, v1, conv, M, omega", [
    (1.0, 2.0, 4.0, Convention.PAPER_LITERAL, 1.0, 2.0),
    (0.5, 1.0, 1.0, Convention.PAPER_LITERAL, 2.0, math.sqrt(0.5)),
    (0.5, 1.0, 1.0, Convention.REDERIVED, 2.0, 1.0),
])
def test_effective_oscillator_examples(m, alpha, v1, conv, M, omega):
    eff = to_effective_oscillator(PotentialSpec.hermitian(v1, 1.0, alpha=alpha, mass=m), conv)
    assert abs(eff.M - M) < 1e-15
    assert abs(eff.omega - omega) < 1e-15
    assert eff.pseudo_energy == 1.0


def test_frequency_conventions():
    spec = PotentialSpec.hermitian(2.5, 3.0, alpha=0.8, mass=1.3)
    lit = to_effective_oscillator(spec, Convention.PAPER_LITERAL)
    red = to_effective_oscillator(spec, Convention.REDERIVED)
    assert abs(lit.omega ** 2 * lit.M - spec.V1) < 1e-13
    assert abs(red.omega ** 2 * red.M - 2 * spec.V1) < 1e-13
    pt = PotentialSpec.pt(2.5, 3.0, alpha=0.8, mass=1.3)
    lit = to_effective_oscillator(pt, Convention.PAPER_LITERAL)
    assert abs(lit.omega ** 2 * lit.M + pt.V1) < 1e-13
    assert lit.M.real > 0


def test_scale_invariance_of_pseudo_energy_ratio():
    spec = PotentialSpec.hermitian(1.7, 4.2, alpha=0.9, mass=0.6)
    base = to_effective_oscillator(spec)
    for c in (0.3, 2.0, 7.5):
        scaled = PotentialSpec.hermitian(1.7, 4.2, alpha=0.9 * c, mass=0.6 * c * c)
        eff = to_effective_oscillator(scaled)
        assert abs(eff.pseudo_energy / eff.omega - base.pseudo_energy / base.omega) < 1e-12


def test_centrifugal_coefficient():
    eff = to_effective_oscillator(PotentialSpec.hermitian(1, 6))
    E = -2.25
    c = eff.centrifugal_coeff(E)
    assert abs(c - (2 * eff.M * abs(E) - 0.25) / (2 * eff.M)) < 1e-15
    assert abs(eff.order(E) - cmath.sqrt(2 * eff.M * abs(E))) < 1e-15
    assert abs(eff.order(E, symmetrized=False) - cmath.sqrt(2 * eff.M * abs(E) + 0.25)) < 1e-15


def test_origin_shift_absorbed():
    spec = PotentialSpec.hermitian(1.0, 6.0, alpha=0.5, origin_shift=0.8)
    V1, V2 = spec.absorbed()
    assert abs(V1 - math.exp(0.8)) < 1e-14 and abs(V2 - 6 * math.exp(0.4)) < 1e-14


@pytest.mark.parametrize("spec", [
    PotentialSpec.hermitian(1, 6, origin_shift=0.25),
    PotentialSpec.pt(1.5, -2.0, alpha=2.0),
    PotentialSpec.nonpt_a(1, 0.3, 2),
    PotentialSpec.nonpt_b((1 + 1j) ** 2, 1, 1),
])
def test_json_round_trip(spec):
    data = json.loads(json.dumps(spec.to_dict()))
    assert PotentialSpec.from_dict(data) == spec


def test_from_dict_errors():
    with pytest.raises(ValueError, match="variant"):
        PotentialSpec.from_dict({"V1": [1, 0]})
    with pytest.raises(ValueError, match="V2"):
        PotentialSpec.from_dict({"variant": "hermitian", "V1": [1, 0]})
    with pytest.raises(ValueError, match="C"):
        PotentialSpec.from_dict({"variant": "nonpt-a", "A": 1, "B": 1})
