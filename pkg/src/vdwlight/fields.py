"""Isotropic, unpolarized photon-field models.

A field is anything with an ``occupation(omega)`` method returning the
mean photon number per mode N(omega) >= 0 at natural-unit frequency
omega.  Four variants are provided: vacuum, thermal (Bose-Einstein),
tabulated (linear interpolation, zero outside the grid) and two-peak
artificial random light (top hats of width delta_omega centered on two
frequencies, with the hat height fixed by the spectral energy density
U/delta_omega through the free-space mode density; inside a hat
N(omega) tracks the 1/omega^3 mode-density factor exactly, so the
total energy density integrates back to U exactly).

Thermal occupation is strictly decreasing in omega, which is what fixes
the short-distance force sign for thermal fields.
"""

from dataclasses import dataclass, field as dataclass_field

import numpy as np

from . import units


class FieldError(ValueError):
    """Invalid photon-field construction."""


@dataclass(frozen=True)
class Vacuum:
    def occupation(self, omega):
        omega = np.asarray(omega, dtype=float)
        out = np.zeros_like(omega)
        return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class Thermal:
    temperature: float   # natural units (same scale as omega)

    def __post_init__(self):
        if self.temperature <= 0.0:
            raise FieldError("temperature must be positive")

    def occupation(self, omega):
        omega = np.asarray(omega, dtype=float)
        if np.any(omega < 0.0):
            raise FieldError("omega must be non-negative")
        with np.errstate(divide="ignore"):
            out = units.bose_occupation(omega / self.temperature)
        return out


@dataclass(frozen=True)
class Tabulated:
    """Occupation sampled on a strictly increasing frequency grid."""

    omega: np.ndarray
    n: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.omega, dtype=float)
        n = np.asarray(self.n, dtype=float)
        if w.ndim != 1 or w.size < 2 or w.shape != n.shape:
            raise FieldError("need matching 1-d omega and N arrays, size >= 2")
        if np.any(np.diff(w) <= 0.0):
            raise FieldError("omega grid must be strictly increasing")
        if np.any(w < 0.0) or np.any(n < 0.0):
            raise FieldError("omega and N must be non-negative")
        object.__setattr__(self, "omega", w)
        object.__setattr__(self, "n", n)

    def occupation(self, omega):
        omega = np.asarray(omega, dtype=float)
        out = np.interp(omega, self.omega, self.n, left=0.0, right=0.0)
        return float(out) if out.ndim == 0 else out

    @classmethod
    def from_file(cls, path, context):
        """Read a two-column spectrum file.

        Columns are (omega_eV, N) or (omega_eV, U_omega in J s/m^3); the
        meaning of the second column is set by a header tag line
        '# columns: omega_ev n' or '# columns: omega_ev u_omega'.
        """
        tag = None
        rows = []
        with open(path) as fh:
            for raw in fh:
                line = raw.strip()
                if line.lower().startswith("# columns:"):
                    tag = line.split(":", 1)[1].split()
                    continue
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise FieldError(f"expected two columns, got {raw!r}")
                rows.append((float(parts[0]), float(parts[1])))
        if tag is None:
            raise FieldError("missing '# columns:' header tag")
        if tag[0] != "omega_ev" or tag[1] not in ("n", "u_omega"):
            raise FieldError(f"unsupported column tag {tag}")
        if not rows:
            raise FieldError("empty spectrum file")
        w_ev = np.array([r[0] for r in rows])
        col = np.array([r[1] for r in rows])
        w_si = units.ev_to_angular(w_ev)
        if tag[1] == "u_omega":
            n = units.spectral_density_to_occupation(col, w_si)
        else:
            n = col
        return cls(omega=context.frequency_to_natural(w_si), n=n)


@dataclass(frozen=True)
class TwoPeak:
    """Random light with the energy density concentrated at two lines.

    omega_a/omega_b are natural-unit peak centers, u_a/u_b SI energy
    densities (J/m^3) and delta_omega the common top-hat bandwidth in
    natural units.  context (a units.UnitSystem) supplies the rad/s
    scale needed to convert the densities to occupations.  Peaks must
    not overlap.  One of u_a/u_b may be zero, switching its peak off.
    """

    omega_a: float
    omega_b: float
    u_a: float
    u_b: float
    delta_omega: float
    context: units.UnitSystem = dataclass_field(default_factory=units.UnitSystem)

    def __post_init__(self):
        if self.omega_a <= 0.0 or self.omega_b <= 0.0:
            raise FieldError("peak frequencies must be positive")
        if self.u_a < 0.0 or self.u_b < 0.0:
            raise FieldError("energy densities must be non-negative")
        if self.delta_omega <= 0.0:
            raise FieldError("bandwidth must be positive")
        if abs(self.omega_a - self.omega_b) <= self.delta_omega:
            raise FieldError("peaks overlap: |omega_a - omega_b| must "
                             "exceed delta_omega")

    def _hat_coefficient(self, u_si):
        # N(omega) = A / omega^3 inside the hat, A chosen so that the
        # energy density integrates back to u_si exactly.
        du_si = u_si / (self.delta_omega * self.context.omega_ref)
        return (np.pi**2 * units.C_LIGHT**3 * du_si
                / (units.HBAR * self.context.omega_ref**3))

    def occupation(self, omega):
        omega = np.asarray(omega, dtype=float)
        out = np.zeros_like(omega)
        half = 0.5 * self.delta_omega
        with np.errstate(divide="ignore"):
            for center, u in ((self.omega_a, self.u_a),
                              (self.omega_b, self.u_b)):
                if u == 0.0:
                    continue
                inside = np.abs(omega - center) <= half
                coeff = self._hat_coefficient(u)
                out = np.where(inside, coeff / omega**3, out)
        return float(out) if out.ndim == 0 else out

    def breakpoints(self):
        """Hat edges, for quadrature segmenting."""
        half = 0.5 * self.delta_omega
        pts = []
        for center, u in ((self.omega_a, self.u_a), (self.omega_b, self.u_b)):
            if u > 0.0:
                pts.extend([center - half, center + half])
        return sorted(pts)


def spectrum_breakpoints(field):
    """Frequencies at which a field's occupation is non-smooth."""
    if hasattr(field, "breakpoints"):
        return list(field.breakpoints())
    if isinstance(field, Tabulated):
        return list(field.omega)
    return []
