import math

import numpy as np
import pytest

from vdwlight import units
from vdwlight.atoms import (AtomError, AtomState, TwoLevelAtom,
                            atom_from_preset, boltzmann_populations,
                            load_presets, mean_polarizability,
                            polarizability, polarizability_imagfreq,
                            population_factor)


@pytest.fixture()
def atom():
    return TwoLevelAtom(omega0=1.0, d2=2.4e-8)


def test_validation():
    with pytest.raises(AtomError):
        TwoLevelAtom(omega0=-1.0, d2=1.0)
    with pytest.raises(AtomError):
        TwoLevelAtom(omega0=1.0, d2=0.0)
    with pytest.raises(AtomError):
        TwoLevelAtom(omega0=1.0, d2=1.0, p_g=0.7, p_e=0.4)
    with pytest.warns(UserWarning):
        TwoLevelAtom(omega0=1.0, d2=1.0, gamma=0.05)


def test_static_limits(atom):
    a_g = polarizability(atom, AtomState.GROUND, 0.0, 0.0)
    assert a_g == pytest.approx((2.0 / 3.0) * atom.d2 / atom.omega0)
    assert a_g.imag == 0.0
    a_e = polarizability(atom, AtomState.EXCITED, 0.0, 0.0)
    assert a_e == pytest.approx(-(2.0 / 3.0) * atom.d2 / atom.omega0)


def test_two_pole_formula_near_resonance(atom):
    omega = atom.omega0 * (1.0 + 1e-3)
    eta = 1e-6 * atom.omega0
    val = polarizability(atom, AtomState.GROUND, omega, eta)
    expected = (atom.d2 / 3.0) * (
        1.0 / (atom.omega0 - omega - 1j * eta)
        + 1.0 / (atom.omega0 + omega + 1j * eta))
    assert val == pytest.approx(expected, rel=1e-12)


def test_resonance_needs_regulator(atom):
    with pytest.raises(AtomError):
        polarizability(atom, AtomState.GROUND, atom.omega0, 0.0)


def test_ground_excited_sign_structure(atom):
    rng = np.random.default_rng(3)
    for _ in range(20):
        w = float(rng.uniform(0.0, 3.0))
        eta = float(rng.uniform(1e-8, 1e-3))
        g = polarizability(atom, AtomState.GROUND, w, eta)
        e = polarizability(atom, AtomState.EXCITED, w, eta)
        assert g == pytest.approx(-e, rel=1e-14)
        assert g.imag >= 0.0     # passivity of the ground-state response


def test_imagfreq_values(atom):
    assert polarizability_imagfreq(atom, AtomState.GROUND, 0.0) == \
        pytest.approx((2.0 / 3.0) * atom.d2 / atom.omega0)
    assert polarizability_imagfreq(atom, AtomState.GROUND, atom.omega0) == \
        pytest.approx(atom.d2 / (3.0 * atom.omega0))
    # alpha(i xi) * xi^2 -> (2/3) d2 omega0
    xi = 1e6
    assert polarizability_imagfreq(atom, AtomState.GROUND, xi) * xi**2 == \
        pytest.approx((2.0 / 3.0) * atom.d2 * atom.omega0, rel=1e-10)


def test_imagfreq_monotone_and_matches_continuation(atom):
    xs = np.linspace(0.0, 5.0, 50)
    vals = polarizability_imagfreq(atom, AtomState.GROUND, xs)
    assert np.all(np.diff(vals) < 0.0)
    # against the closed algebraic two-pole form at imaginary argument
    for xi in (0.0, 0.3, 1.0, 4.2):
        direct = ((atom.d2 / 3.0) * (1.0 / (atom.omega0 - 1j * xi)
                                     + 1.0 / (atom.omega0 + 1j * xi)))
        assert abs(direct.imag) < 1e-20
        assert polarizability_imagfreq(atom, AtomState.GROUND, xi) == \
            pytest.approx(direct.real, rel=1e-13)


def test_population_factor_channels(atom):
    ground = atom
    excited = atom.with_populations(0.0, 1.0)
    assert population_factor(ground, 0.0) == 0.0
    assert population_factor(excited, 0.0) == -1.0


def test_population_factor_thermal_null():
    rng = np.random.default_rng(11)
    for _ in range(100):
        w0 = float(rng.uniform(0.5, 2.0))
        temp = float(rng.uniform(0.05, 5.0))
        atom = TwoLevelAtom(omega0=w0, d2=1e-8).thermalized(temp)
        n = 1.0 / math.expm1(w0 / temp)
        assert abs(population_factor(atom, n)) < 1e-14 * (n + 1.0)


def test_population_factor_zero_iff_detailed_balance(atom):
    n = 0.73
    p_e = n / (2.0 * n + 1.0)   # p_e/p_g = N/(N+1)
    balanced = atom.with_populations(1.0 - p_e, p_e)
    assert population_factor(balanced, n) == pytest.approx(0.0, abs=5e-16)
    tilted = atom.with_populations(1.0 - 1.1 * p_e, 1.1 * p_e)
    assert population_factor(tilted, n) != 0.0


def test_boltzmann_populations():
    with pytest.raises(AtomError):
        boltzmann_populations(1.0, 0.0)
    assert boltzmann_populations(1.0, 1e-9) == (1.0, 0.0)
    p_g, p_e = boltzmann_populations(1.0, 1e9)
    assert p_g == pytest.approx(0.5, rel=1e-8)
    p_g, p_e = boltzmann_populations(1.0, 1.0)
    assert p_g == pytest.approx(math.e / (math.e + 1.0), rel=1e-12)
    assert p_e == pytest.approx(0.26894, rel=1e-4)
    assert p_g + p_e == pytest.approx(1.0, abs=1e-15)


def test_mean_polarizability_weights(atom):
    w, eta = 0.5, 1e-6
    g = polarizability(atom, AtomState.GROUND, w, eta)
    mixed = atom.with_populations(0.75, 0.25)
    assert mean_polarizability(mixed, w, eta) == pytest.approx(0.5 * g)


def test_presets_load_and_build(context=None):
    presets = load_presets()
    assert {"rb87_d2", "k40_d2"} <= set(presets)
    rb = presets["rb87_d2"]
    assert rb.omega0_ev == pytest.approx(1.589, abs=2e-3)
    ctx = units.UnitSystem(omega_ref=rb.omega0_rad_s)
    atom = atom_from_preset(rb, ctx)
    assert atom.omega0 == pytest.approx(1.0)
    # documented Rb dipole gives d2 ~ 2.37e-8 natural at its own line
    assert atom.d2 == pytest.approx(2.37e-8, rel=0.01)


def test_preset_parse_error(tmp_path):
    bad = tmp_path / "atoms.dat"
    bad.write_text("rb 1.59 2e-29\n")
    with pytest.raises(AtomError):
        load_presets(bad)
