import numpy as np
import pytest

from vdwlight import units


def test_ev_to_angular_known_value():
    # 1.59 eV -> 2.4157e15 rad/s with CODATA constants
    assert units.ev_to_angular(1.59) == pytest.approx(2.4157e15, rel=1e-4)


def test_ev_round_trip():
    assert units.angular_to_ev(units.ev_to_angular(1.61)) == \
        pytest.approx(1.61, rel=1e-14)


def test_ev_domain_error():
    with pytest.raises(units.UnitError):
        units.ev_to_angular(0.0)
    with pytest.raises(units.UnitError):
        units.ev_to_angular(-2.0)


def test_occupation_vacuum():
    assert units.spectral_density_to_occupation(0.0, 1e15) == 0.0


def test_occupation_zero_frequency_domain_error():
    with pytest.raises(units.UnitError):
        units.spectral_density_to_occupation(1e-10, 0.0)


def test_occupation_linear_in_density():
    w = 2.4e15
    n1 = units.spectral_density_to_occupation(1e-13, w)
    n3 = units.spectral_density_to_occupation(3e-13, w)
    assert n3 == pytest.approx(3.0 * n1, rel=1e-14)


def test_blackbody_density_inverts_to_bose_factor():
    # feeding the Planck spectral density back through the inversion
    # must reproduce the Bose factor at any frequency and temperature
    rng = np.random.default_rng(7)
    for _ in range(20):
        t_k = float(rng.uniform(50.0, 2000.0))
        w = float(rng.uniform(1e13, 5e15))
        n_expected = 1.0 / np.expm1(units.HBAR * w /
                                    (units.K_BOLTZMANN * t_k))
        u_w = units.HBAR * w**3 * n_expected / (np.pi**2 * units.C_LIGHT**3)
        n = units.spectral_density_to_occupation(u_w, w)
        assert n == pytest.approx(n_expected, rel=1e-12)


def test_two_peak_scenario_occupation_magnitude():
    # 6e-4 J/m^3 split into a 1e-6 omega_A bandwidth at 1.59 eV gives an
    # occupation ~22 per peak at half the density, vastly above room
    # temperature thermal occupation at the same frequency
    w = units.ev_to_angular(1.59)
    dw = 1e-6 * w
    n_art = units.spectral_density_to_occupation(3e-4 / dw, w)
    assert n_art == pytest.approx(22.2, rel=0.05)
    n_thermal = units.thermal_occupation_si(w, 300.0)
    assert n_art / n_thermal > 1e20


def test_round_trips_unit_system():
    ctx = units.UnitSystem(omega_ref=units.ev_to_angular(1.59))
    for x in (1.0, 3.7e-5, 2.2e8):
        assert ctx.frequency_to_natural(ctx.frequency_to_si(x)) == \
            pytest.approx(x, rel=1e-14)
        assert ctx.energy_to_natural(ctx.energy_to_si(x)) == \
            pytest.approx(x, rel=1e-14)
        assert ctx.length_to_natural(ctx.length_to_si(x)) == \
            pytest.approx(x, rel=1e-14)
        assert ctx.temperature_to_natural(ctx.temperature_to_kelvin(x)) == \
            pytest.approx(x, rel=1e-14)
        assert units.force_si_to_natural(
            units.force_natural_to_si(x, ctx), ctx) == \
            pytest.approx(x, rel=1e-14)


def test_force_conversion_zero():
    ctx = units.UnitSystem(omega_ref=2.4e15)
    assert units.force_natural_to_si(0.0, ctx) == 0.0


def test_force_conversion_rejects_non_finite():
    ctx = units.UnitSystem(omega_ref=2.4e15)
    with pytest.raises(units.UnitError):
        units.force_natural_to_si(np.inf, ctx)


def test_short_distance_force_dimensional_audit():
    """The natural-unit short-distance force pipeline must agree exactly
    with the direct SI formula

        F = 8 d_A^2 d_B^2 [w_A N_B - w_B N_A]
            / ((4 pi eps0)^2 hbar R^7 (w_A^2 - w_B^2)),

    which carries units of newton, for any choice of reference scale."""
    d_a, d_b = 3.584e-29, 3.481e-29           # C m
    w_a = units.ev_to_angular(1.59)
    w_b = units.ev_to_angular(1.61)
    n_a, n_b = 0.4, 0.3
    r_si = 25e-9

    f_direct = (8.0 * d_a**2 * d_b**2 * (w_a * n_b - w_b * n_a)
                / (units.FOUR_PI_EPS0**2 * units.HBAR * r_si**7
                   * (w_a**2 - w_b**2)))

    for ref in (w_a, 0.37 * w_a, 5.0 * w_a):
        ctx = units.UnitSystem(omega_ref=ref)
        d2a = ctx.dipole_sq_to_natural(d_a**2)
        d2b = ctx.dipole_sq_to_natural(d_b**2)
        wa = ctx.frequency_to_natural(w_a)
        wb = ctx.frequency_to_natural(w_b)
        r = ctx.length_to_natural(r_si)
        f_nat = 8.0 * d2a * d2b * (wa * n_b - wb * n_a) / \
            (r**7 * (wa**2 - wb**2))
        f_si = units.force_natural_to_si(f_nat, ctx)
        assert f_si == pytest.approx(f_direct, rel=1e-12)


def test_dipole_round_trip():
    ctx = units.UnitSystem(omega_ref=units.ev_to_angular(1.59))
    d2 = (3.584e-29) ** 2
    assert ctx.dipole_sq_to_si(ctx.dipole_sq_to_natural(d2)) == \
        pytest.approx(d2, rel=1e-14)


def test_unit_system_validation():
    with pytest.raises(units.UnitError):
        units.UnitSystem(mode="parsecs")
    with pytest.raises(units.UnitError):
        units.UnitSystem(omega_ref=-1.0)
