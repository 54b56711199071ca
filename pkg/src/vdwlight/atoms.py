"""Two-level atom model.

Atoms are immutable value objects carrying the transition frequency
omega0, the squared transition dipole |d|^2, the state populations
(p_g, p_e) and a linewidth gamma, all in natural units (see units.py).
Isotropic averaging of the dipole orientation is baked in: tensor
products d^nu d^nu' are represented as delta_{nu nu'} |d|^2 / 3, so
polarizabilities are scalars,

    alpha_{g/e}(omega) = (|d|^2/3) [ 1/(+-omega0 - omega - i eta)
                                   + 1/(+-omega0 + omega + i eta) ],

upper signs for the ground state, lower for the excited.  gamma never
broadens the response; it is carried for validity warnings only.  The
regulator eta is always an explicit argument, never a hidden global.
"""

import enum
import math
import warnings
from dataclasses import dataclass, replace
from importlib import resources

import numpy as np

from . import units


class AtomError(ValueError):
    """Invalid atom parameters or polarizability arguments."""


class AtomState(enum.Enum):
    GROUND = "ground"
    EXCITED = "excited"


@dataclass(frozen=True)
class TwoLevelAtom:
    omega0: float        # transition frequency, natural units
    d2: float            # squared dipole matrix element |d|^2, natural units
    p_g: float = 1.0     # ground-state population
    p_e: float = 0.0     # excited-state population
    gamma: float = 0.0   # linewidth, same units as omega0

    def __post_init__(self):
        if self.omega0 <= 0.0:
            raise AtomError("omega0 must be positive")
        if self.d2 <= 0.0:
            raise AtomError("|d|^2 must be positive")
        if not (0.0 <= self.p_g <= 1.0 and 0.0 <= self.p_e <= 1.0):
            raise AtomError("populations must lie in [0, 1]")
        if abs(self.p_g + self.p_e - 1.0) > 1e-12:
            raise AtomError("populations must sum to 1")
        if self.gamma < 0.0:
            raise AtomError("gamma must be non-negative")
        if self.gamma > 0.01 * self.omega0:
            warnings.warn(
                "gamma exceeds 1% of omega0; the two-level narrow-line "
                "model is dubious here", stacklevel=2)

    @property
    def inversion_deficit(self):
        """p_g - p_e, the weight of the ground-form response."""
        return self.p_g - self.p_e

    def with_populations(self, p_g, p_e):
        return replace(self, p_g=p_g, p_e=p_e)

    def thermalized(self, temperature):
        """Copy with Boltzmann populations at the given temperature."""
        p_g, p_e = boltzmann_populations(self.omega0, temperature)
        return self.with_populations(p_g, p_e)


def polarizability(atom, state, omega, eta):
    """Isotropically averaged polarizability alpha(omega), complex.

    state selects the prepared level (AtomState.GROUND or EXCITED);
    eta >= 0 is the resonance regulator.  eta = 0 is allowed only away
    from resonance.
    """
    omega = np.asarray(omega, dtype=float)
    if np.any(omega < 0.0):
        raise AtomError("omega must be non-negative")
    if eta < 0.0:
        raise AtomError("eta must be non-negative")
    if eta == 0.0 and np.any(np.abs(omega - atom.omega0) < 1e-12 * atom.omega0):
        raise AtomError("eta = 0 exactly on resonance; supply a regulator")
    sign = 1.0 if state is AtomState.GROUND else -1.0
    w0 = sign * atom.omega0
    out = (atom.d2 / 3.0) * (1.0 / (w0 - omega - 1j * eta)
                             + 1.0 / (w0 + omega + 1j * eta))
    return complex(out) if out.ndim == 0 else out


def polarizability_imagfreq(atom, state, xi):
    """alpha(i xi) on the imaginary frequency axis; real.

    Equals +-(2/3)|d|^2 omega0/(omega0^2 + xi^2); monotone decreasing in
    xi for the ground state and the analytic continuation of
    polarizability (eta -> 0).
    """
    xi = np.asarray(xi, dtype=float)
    if np.any(xi < 0.0):
        raise AtomError("xi must be non-negative")
    sign = 1.0 if state is AtomState.GROUND else -1.0
    out = sign * (2.0 / 3.0) * atom.d2 * atom.omega0 / (atom.omega0**2 + xi**2)
    return float(out) if out.ndim == 0 else out


def mean_polarizability(atom, omega, eta):
    """Population-averaged response (p_g - p_e) * alpha_ground(omega)."""
    return atom.inversion_deficit * polarizability(
        atom, AtomState.GROUND, omega, eta)


def mean_polarizability_imagfreq(atom, xi):
    return atom.inversion_deficit * polarizability_imagfreq(
        atom, AtomState.GROUND, xi)


def population_factor(atom, n_at_omega0):
    """N p_g - (N+1) p_e: stimulated absorption minus total emission.

    Zero exactly at detailed balance p_e/p_g = N/(N+1); with a thermal
    N this is the Boltzmann ratio.
    """
    n = np.asarray(n_at_omega0, dtype=float)
    if np.any(n < 0.0):
        raise AtomError("occupation must be non-negative")
    out = n * atom.p_g - (n + 1.0) * atom.p_e
    return float(out) if out.ndim == 0 else out


def boltzmann_populations(omega0, temperature):
    """(p_g, p_e) of a two-level atom thermalized at the given temperature."""
    if temperature <= 0.0:
        raise AtomError("temperature must be positive")
    x = omega0 / temperature
    if x > 700.0:
        return 1.0, 0.0
    p_g = 1.0 / (1.0 + math.exp(-x))
    return p_g, 1.0 - p_g


# ---------------------------------------------------------------------------
# presets: documented line data, loaded from a plain-text key-value table

@dataclass(frozen=True)
class AtomPreset:
    name: str
    omega0_ev: float
    dipole_cm: float   # |d|, C m
    gamma_s: float     # linewidth, 1/s

    @property
    def omega0_rad_s(self):
        return units.ev_to_angular(self.omega0_ev)


def _default_preset_path():
    return resources.files("vdwlight").joinpath("data/atoms.dat")


def load_presets(path=None):
    """Parse the atom preset table: name, omega0 (eV), |d| (C m), gamma (1/s)."""
    if path is None:
        text = _default_preset_path().read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    presets = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise AtomError(
                f"atom preset line {lineno}: expected "
                f"'name omega0_ev dipole_cm gamma_s', got {raw!r}")
        name = parts[0]
        try:
            omega0_ev, dipole_cm, gamma_s = map(float, parts[1:])
        except ValueError as exc:
            raise AtomError(f"atom preset line {lineno}: {exc}") from None
        presets[name] = AtomPreset(name, omega0_ev, dipole_cm, gamma_s)
    return presets


def atom_from_si(omega0_rad_s, dipole_cm, gamma_s, context,
                 p_g=1.0, p_e=0.0):
    """Build a natural-unit TwoLevelAtom from SI line data."""
    return TwoLevelAtom(
        omega0=context.frequency_to_natural(omega0_rad_s),
        d2=context.dipole_sq_to_natural(dipole_cm**2),
        p_g=p_g, p_e=p_e,
        gamma=context.frequency_to_natural(gamma_s),
    )


def atom_from_preset(preset, context, p_g=1.0, p_e=0.0, omega0_ev=None):
    """TwoLevelAtom from a preset, optionally overriding the frequency."""
    ev = preset.omega0_ev if omega0_ev is None else omega0_ev
    return atom_from_si(units.ev_to_angular(ev), preset.dipole_cm,
                        preset.gamma_s, context, p_g=p_g, p_e=p_e)
