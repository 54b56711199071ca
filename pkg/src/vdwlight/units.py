"""Physical constants and unit conversions.

Everything numerical in this package runs in natural units with
hbar = c = 1 and Gaussian-type field normalization, with all
frequencies measured in units of a chosen reference angular frequency
(normally the transition frequency of atom A).  In that system

    frequency / energy / temperature  ->  dimensionless multiples of omega_ref
    length                            ->  multiples of c / omega_ref
    |dipole|^2                        ->  d_SI^2 * omega_ref^2 / (4 pi eps0 hbar c^3)

so that closed-form potentials come out in units of hbar*omega_ref and
forces in units of hbar*omega_ref^2/c.  SI values appear only at the
construction and output boundaries, via the helpers below.

Isotropic spectral energy density per unit angular frequency u(omega)
relates to the mode occupation through the free-space mode density,

    u(omega) = hbar omega^3 N(omega) / (pi^2 c^3),

which is the inversion used by spectral_density_to_occupation.

Constants are CODATA 2018, 12 significant digits.
"""

from dataclasses import dataclass

import numpy as np

HBAR = 1.05457181765e-34      # J s
C_LIGHT = 299792458.0         # m/s (exact)
K_BOLTZMANN = 1.380649e-23    # J/K (exact)
E_CHARGE = 1.602176634e-19    # C (exact)
BOHR_RADIUS = 5.29177210903e-11   # m
EPSILON_0 = 8.85418781281e-12     # F/m
EA0_DIPOLE = E_CHARGE * BOHR_RADIUS   # reference dipole e*a0, C m

FOUR_PI_EPS0 = 4.0 * np.pi * EPSILON_0


class UnitError(ValueError):
    """Domain error in a unit conversion."""


def ev_to_angular(energy_ev):
    """Photon/transition energy in eV -> angular frequency in rad/s."""
    energy_ev = np.asarray(energy_ev, dtype=float)
    if np.any(energy_ev <= 0.0):
        raise UnitError("energy must be positive")
    out = energy_ev * E_CHARGE / HBAR
    return float(out) if out.ndim == 0 else out


def angular_to_ev(omega):
    """Angular frequency in rad/s -> energy in eV.  Inverse of ev_to_angular."""
    omega = np.asarray(omega, dtype=float)
    if np.any(omega <= 0.0):
        raise UnitError("angular frequency must be positive")
    out = omega * HBAR / E_CHARGE
    return float(out) if out.ndim == 0 else out


def spectral_density_to_occupation(u_omega, omega):
    """Occupation N(omega) for an isotropic spectral energy density.

    u_omega is the energy density per unit angular frequency (J s / m^3),
    omega the angular frequency (rad/s).  Linear in u_omega.
    """
    u_omega = np.asarray(u_omega, dtype=float)
    omega = np.asarray(omega, dtype=float)
    if np.any(u_omega < 0.0):
        raise UnitError("spectral energy density must be non-negative")
    if np.any(omega <= 0.0):
        raise UnitError("omega must be positive")
    out = np.pi**2 * C_LIGHT**3 * u_omega / (HBAR * omega**3)
    return float(out) if out.ndim == 0 else out


def occupation_to_spectral_density(n, omega):
    """Inverse of spectral_density_to_occupation."""
    n = np.asarray(n, dtype=float)
    omega = np.asarray(omega, dtype=float)
    if np.any(n < 0.0):
        raise UnitError("occupation must be non-negative")
    if np.any(omega <= 0.0):
        raise UnitError("omega must be positive")
    out = HBAR * omega**3 * n / (np.pi**2 * C_LIGHT**3)
    return float(out) if out.ndim == 0 else out


def thermal_occupation_si(omega, temperature_k):
    """Bose-Einstein occupation for SI inputs (rad/s, K)."""
    if temperature_k <= 0.0:
        raise UnitError("temperature must be positive")
    x = HBAR * np.asarray(omega, dtype=float) / (K_BOLTZMANN * temperature_k)
    out = bose_occupation(x)
    return float(out) if np.ndim(out) == 0 else out


def bose_occupation(x):
    """1/(e^x - 1) with overflow-safe tails; x = omega/T in matching units."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    small = x < 700.0
    out[small] = 1.0 / np.expm1(x[small])
    if out.ndim == 0:
        return float(1.0 / np.expm1(float(x))) if x < 700.0 else 0.0
    return out


@dataclass(frozen=True)
class UnitSystem:
    """Conversion context between natural units and SI.

    mode is 'natural' or 'si' and records how I/O quantities are to be
    presented; omega_ref (rad/s) is the angular frequency corresponding
    to a natural frequency of 1.  All round trips are exact to ~1 ulp.
    """

    mode: str = "natural"
    omega_ref: float = 1.0

    def __post_init__(self):
        if self.mode not in ("natural", "si"):
            raise UnitError(f"unknown unit mode {self.mode!r}")
        if self.omega_ref <= 0.0:
            raise UnitError("omega_ref must be positive")

    # frequencies / energies / temperatures
    def frequency_to_natural(self, omega_rad_s):
        return omega_rad_s / self.omega_ref

    def frequency_to_si(self, omega_nat):
        return omega_nat * self.omega_ref

    def energy_to_si(self, u_nat):
        """Natural energy -> joule."""
        return u_nat * HBAR * self.omega_ref

    def energy_to_natural(self, u_joule):
        return u_joule / (HBAR * self.omega_ref)

    def temperature_to_natural(self, t_kelvin):
        """Kelvin -> natural temperature k_B T / (hbar omega_ref)."""
        if t_kelvin < 0.0:
            raise UnitError("temperature must be non-negative")
        return K_BOLTZMANN * t_kelvin / (HBAR * self.omega_ref)

    def temperature_to_kelvin(self, t_nat):
        return t_nat * HBAR * self.omega_ref / K_BOLTZMANN

    # lengths
    def length_to_natural(self, r_meter):
        return r_meter * self.omega_ref / C_LIGHT

    def length_to_si(self, r_nat):
        return r_nat * C_LIGHT / self.omega_ref

    # dipoles
    def dipole_sq_to_natural(self, d_sq_si):
        """|d|^2 in (C m)^2 -> natural |d|^2 (Gaussian convention)."""
        if d_sq_si <= 0.0:
            raise UnitError("squared dipole must be positive")
        return d_sq_si * self.omega_ref**2 / (FOUR_PI_EPS0 * HBAR * C_LIGHT**3)

    def dipole_sq_to_si(self, d_sq_nat):
        return d_sq_nat * FOUR_PI_EPS0 * HBAR * C_LIGHT**3 / self.omega_ref**2


def force_natural_to_si(f_nat, context: UnitSystem):
    """Natural force -> newton: multiply by hbar omega_ref^2 / c."""
    f_nat = np.asarray(f_nat, dtype=float)
    if not np.all(np.isfinite(f_nat)):
        raise UnitError("force must be finite")
    out = f_nat * HBAR * context.omega_ref**2 / C_LIGHT
    return float(out) if out.ndim == 0 else out


def force_si_to_natural(f_newton, context: UnitSystem):
    f_newton = np.asarray(f_newton, dtype=float)
    out = f_newton * C_LIGHT / (HBAR * context.omega_ref**2)
    return float(out) if out.ndim == 0 else out
