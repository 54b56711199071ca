"""Exact van der Waals potentials.

Four layers live here:

* the contracted scattering Green's function of a driven two-level
  scatterer, ``d11_scattered`` (with an independent second assembly via
  the causal-part / photon-density-matrix route used as a test oracle);
* the general single-atom energy shift ``u_general`` over a pluggable
  environment provider,

      U = -Re[(i/2pi) Int_0^inf <alpha_A>(omega) D11(omega) domega]
          + (|d_A|^2/3) p_e^A Re[D11(omega_A)],

  where <alpha_A> = (p_g - p_e) alpha_A^(ground) is the
  population-averaged response.  The frequency integral is split into
  the strictly-causal vacuum part, which is analytic in the first
  quadrant and is evaluated exactly on the imaginary axis, and the
  field part -i rho_scattered(omega) with rho real and decaying, which
  is integrated on the real axis with graded panels around every
  resonance;
* the two-atom closed forms: the equilibrium Matsubara sum
  ``u_eq_two_atom`` and the non-equilibrium resonant potentials
  ``u_neq_exact``;
* the atom-near-body split ``u_cp_body`` (equilibrium Casimir-Polder
  shift plus resonant non-equilibrium part), with a perfect-mirror
  provider as the single body example.

Sign conventions worth recording: the Matsubara form of the two-atom
equilibrium potential is

    U_eq = -(p_g^A - p_e^A)(p_g^B - p_e^B) T sum'_m
           alpha_A(i xi_m) alpha_B(i xi_m) sq(i xi_m, R),

(m = 0 halved), whose T -> 0 limit reproduces both the London R^-6 law
and the retarded R^-7 law with the standard 23/(4 pi) coefficient; the
overall minus follows from rotating the real-frequency form onto the
imaginary axis and is cross-checked against that rotation in the tests.

The non-equilibrium potentials use the population factor
pf_X = N(omega_X) p_g^X - (N(omega_X)+1) p_e^X of each atom:

    U_A = K [ omega_A pf_B abs2(omega_B, R)
              - omega_B pf_A Re sq(omega_A, R) ],
    U_B = -K [ omega_B pf_A abs2(omega_A, R)
               - omega_A pf_B Re sq(omega_B, R) ],
    K = 2 |d_A|^2 |d_B|^2 / (9 (omega_A^2 - omega_B^2)),

which vanish identically for a thermal field with Boltzmann-populated
atoms and map into each other under exchange of the atom labels.
"""

import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from . import fields as fields_mod
from .atoms import (AtomState, mean_polarizability,
                    mean_polarizability_imagfreq, polarizability,
                    polarizability_imagfreq, population_factor)
from .greens import contracted_abs2, contracted_sq, contracted_sq_imagfreq


class PotentialError(ValueError):
    """Invalid potential arguments."""


class QuadratureError(RuntimeError):
    """A frequency integral failed to reach its error target."""


@dataclass(frozen=True)
class PotentialBreakdown:
    """Equilibrium / non-equilibrium split of a single-atom potential."""

    u_eq: float
    u_neq: float
    atom_tag: str = "A"
    regime: str = "exact"   # exact | short_asymptotic | long_asymptotic

    @property
    def u_total(self):
        return self.u_eq + self.u_neq


@dataclass(frozen=True)
class QuadratureSpec:
    """Controls for the real-frequency quadrature of u_general."""

    rel_tol: float = 1e-9
    window_factor: float = 1e3     # resonance window halfwidth, units of eta
    omega_cut: float = None        # override the automatic upper cut
    max_chunk_periods: float = 10.0  # limit smooth-panel width, osc. periods
    quad_limit: int = 300


# ---------------------------------------------------------------------------
# scattered Green's function of atom B

def _check_pair(omega_a, omega_b, gamma_a=0.0, gamma_b=0.0):
    if abs(omega_a - omega_b) < 1e-12 * max(omega_a, omega_b):
        raise PotentialError(
            "omega_A = omega_B: the two-atom resonant formulas have an "
            "explicit (omega_A^2 - omega_B^2)^-1 pole; degenerate "
            "transitions are outside their validity range")
    gmax = max(gamma_a, gamma_b)
    if gmax > 0.0 and abs(omega_a - omega_b) < 10.0 * gmax:
        warnings.warn(
            "|omega_A - omega_B| is not large compared with the "
            "linewidths; the quasi-stationary treatment is marginal",
            stacklevel=3)


def d11_scattered(omega, big_r, atom_b, field, eta):
    """Contracted D11 at atom A scattered once off atom B.

    Assembles, with N = N(omega), alpha = (p_g^B - p_e^B) alpha_B^(g):

        -(2N+1) alpha sq + 2N Re[alpha sq] + 2iN Im[alpha] abs2
        - 2i Im[alpha_B^(g)] p_e^B abs2

    The last (spontaneous-emission) term is imaginary: that is what a
    real scattered photon density matrix requires, and what the
    eta -> 0 limit of u_general needs to reproduce the closed-form
    resonant potentials.
    """
    if eta <= 0.0:
        raise PotentialError("eta must be positive on the real axis")
    n = field.occupation(omega)
    alpha = mean_polarizability(atom_b, omega, eta)
    alpha_g = polarizability(atom_b, AtomState.GROUND, omega, eta)
    sq = contracted_sq(omega, big_r)
    abs2 = contracted_abs2(omega, big_r)
    return (-(2.0 * n + 1.0) * alpha * sq
            + 2.0 * n * np.real(alpha * sq)
            + 2j * n * np.imag(alpha) * abs2
            - 2j * np.imag(alpha_g) * atom_b.p_e * abs2)


def d11_scattered_keldysh(omega, big_r, atom_b, field, eta):
    """Second assembly route: causal part minus i times the photon
    density matrix.  Must agree with d11_scattered identically."""
    return (_causal_two_atom(omega, big_r, atom_b, eta)
            - 1j * _rho_two_atom(omega, big_r, atom_b, field, eta))


def _causal_two_atom(omega, big_r, atom_b, eta):
    return -mean_polarizability(atom_b, omega, eta) * contracted_sq(omega, big_r)


def _rho_two_atom(omega, big_r, atom_b, field, eta):
    if omega == 0.0:
        return 0.0
    n = field.occupation(omega)
    alpha = mean_polarizability(atom_b, omega, eta)
    alpha_g = polarizability(atom_b, AtomState.GROUND, omega, eta)
    sq = contracted_sq(omega, big_r)
    abs2 = contracted_abs2(omega, big_r)
    return (2.0 * n * np.imag(alpha * (sq - abs2))
            + 2.0 * np.imag(alpha_g) * atom_b.p_e * abs2)


# ---------------------------------------------------------------------------
# environment providers

class EnvironmentGreens:
    """Scattering-environment interface for u_general and u_cp_body.

    Implementations supply the contracted scalar forms at the atom's
    position.  Only omega >= 0 is ever needed: the defining correlator
    satisfies a transpose symmetry under omega -> -omega that folds all
    frequency integrals onto the positive axis, so providers raise on
    negative omega rather than guessing a continuation.

    causal(omega)          complex causal (retarded-scattering) part
    causal_imagfreq(xi)    its value on the imaginary axis, real
    rho_scattered(omega)   real scattered photon-density part; the full
                           D11 is causal - i rho_scattered
    breakpoints()          frequencies needing dense quadrature panels
    oscillation_period()   omega-period of the integrand oscillation
    """

    def d11(self, omega):
        self._check_omega(omega)
        return self.causal(omega) - 1j * self.rho_scattered(omega)

    @staticmethod
    def _check_omega(omega):
        if omega < 0.0:
            raise PotentialError("providers are defined for omega >= 0")

    def breakpoints(self):
        return []

    def oscillation_period(self):
        return np.inf


class ZeroEnvironment(EnvironmentGreens):
    """No environment: every contribution vanishes."""

    def causal(self, omega):
        self._check_omega(omega)
        return 0.0

    def causal_imagfreq(self, xi):
        return 0.0

    def rho_scattered(self, omega):
        self._check_omega(omega)
        return 0.0


class TwoAtomScattered(EnvironmentGreens):
    """Environment of atom A: atom B at distance R in a photon field."""

    def __init__(self, atom_b, field, big_r, eta):
        if big_r <= 0.0:
            raise PotentialError("R must be positive")
        if eta <= 0.0:
            raise PotentialError("eta must be positive")
        self.atom_b = atom_b
        self.field = field
        self.big_r = big_r
        self.eta = eta

    def causal(self, omega, eta=None):
        self._check_omega(omega)
        return _causal_two_atom(omega, self.big_r, self.atom_b,
                                self.eta if eta is None else eta)

    def causal_imagfreq(self, xi):
        return (-mean_polarizability_imagfreq(self.atom_b, xi)
                * contracted_sq_imagfreq(xi, self.big_r))

    def rho_scattered(self, omega):
        self._check_omega(omega)
        return _rho_two_atom(omega, self.big_r, self.atom_b, self.field,
                             self.eta)

    def pole_value(self, omega):
        # the pole term of u_general uses the unbroadened causal part
        return _causal_two_atom(omega, self.big_r, self.atom_b, 0.0)

    # retarded-provider aliases, so the pair can stand in for a body
    def dr(self, omega):
        return self.causal(omega, eta=0.0)

    def dr_imagfreq(self, xi):
        return self.causal_imagfreq(xi)

    def breakpoints(self):
        return ([self.atom_b.omega0]
                + fields_mod.spectrum_breakpoints(self.field))

    def oscillation_period(self):
        return np.pi / self.big_r


class EquilibriumBody(EnvironmentGreens):
    """A body in thermal equilibrium with the field: D11 from the
    fluctuation-dissipation relation, rho = -2 N Im causal."""

    def __init__(self, dr, dr_imagfreq, field, period=np.inf):
        self._dr = dr
        self._dr_if = dr_imagfreq
        self.field = field
        self._period = period

    def causal(self, omega):
        self._check_omega(omega)
        return self._dr(omega)

    def causal_imagfreq(self, xi):
        return self._dr_if(xi)

    def rho_scattered(self, omega):
        self._check_omega(omega)
        if omega == 0.0:
            return 0.0
        return -2.0 * self.field.occupation(omega) * np.imag(self._dr(omega))

    def pole_value(self, omega):
        return self._dr(omega)

    def breakpoints(self):
        return fields_mod.spectrum_breakpoints(self.field)

    def oscillation_period(self):
        return self._period


class PerfectMirror:
    """Retarded scattering contraction of a perfect mirror at distance z.

    Image construction: the image dipole at distance 2z carries
    diag(-1,-1,+1) relative moments, giving the contracted scalar

        dr(omega, z) = (2 e^{2 i omega z} / (2z)) [omega^2 - 2/(2z)^2
                                                   + 2 i omega/(2z)]

    with the overall sign fixed by the attractive ground-state
    short-distance limit U -> -|d|^2/(12 z^3).  Validation scaffolding,
    not a surface-physics feature.
    """

    def __init__(self, z):
        if z <= 0.0:
            raise PotentialError("mirror distance must be positive")
        self.z = z

    def dr(self, omega):
        r = 2.0 * self.z
        return (2.0 * np.exp(1j * omega * r) / r
                * (omega**2 - 2.0 / r**2 + 2j * omega / r))

    def dr_imagfreq(self, xi):
        r = 2.0 * self.z
        t = xi * r
        if t > 372.5:
            return 0.0
        return -2.0 * np.exp(-t) / r * (xi**2 + 2.0 * xi / r + 2.0 / r**2)

    def as_environment(self, field):
        return EquilibriumBody(self.dr, self.dr_imagfreq, field,
                               period=np.pi / (2.0 * self.z))


class UserSupplied(EnvironmentGreens):
    """Environment from user callables (causal, causal_imagfreq, rho)."""

    def __init__(self, causal, causal_imagfreq, rho_scattered=None,
                 breakpoints=(), period=np.inf):
        self._causal = causal
        self._causal_if = causal_imagfreq
        self._rho = rho_scattered or (lambda omega: 0.0)
        self._breakpoints = list(breakpoints)
        self._period = period

    def causal(self, omega):
        self._check_omega(omega)
        return self._causal(omega)

    def causal_imagfreq(self, xi):
        return self._causal_if(xi)

    def rho_scattered(self, omega):
        self._check_omega(omega)
        return self._rho(omega)

    def pole_value(self, omega):
        return self._causal(omega)

    def breakpoints(self):
        return list(self._breakpoints)

    def oscillation_period(self):
        return self._period


# ---------------------------------------------------------------------------
# general single-atom potential (quadrature route)

def _graded_ladder(center, eta, window_factor):
    """Geometric panel edges resolving a Lorentzian of width eta."""
    offsets = eta * np.geomspace(1.0, window_factor, 8)
    return sorted(set(np.concatenate([center - offsets[::-1],
                                      [center], center + offsets])))


def _resolve_populations(atom, state):
    if state is None:
        return atom.p_g, atom.p_e
    if state is AtomState.GROUND:
        return 1.0, 0.0
    return 0.0, 1.0


def u_general(atom_a, env, eta, quadrature=None, state=None,
              thermal_extent=None):
    """Energy shift of atom A in an arbitrary environment.

    atom_a's populations (or an explicit pure ``state``) weight both the
    averaged response inside the frequency integral and the resonant
    pole term.  eta regulates the atom's own resonance; choose it well
    below any spectral feature of the environment, and scale it down
    with separation (eta ~ 1e-8 * 2 pi / R works well) since finite-eta
    phase errors grow like eta*R.  thermal_extent, if given, extends
    the real-axis integration range to cover a slowly decaying
    occupation (defaults to 35 T for a Thermal field).

    For occupations smooth on the scale of the transition frequencies
    (vacuum, thermal) this reproduces the Matsubara equilibrium sum
    plus the resonant closed forms; for narrow-band spectra the
    equilibrium/resonant split itself is different and only the total
    computed here is meaningful.
    """
    spec = quadrature or QuadratureSpec()
    p_g, p_e = _resolve_populations(atom_a, state)
    s_a = p_g - p_e
    w0 = atom_a.omega0

    # causal part, exactly on the imaginary axis
    def causal_integrand(xi):
        return (s_a * polarizability_imagfreq(atom_a, AtomState.GROUND, xi)
                * env.causal_imagfreq(xi))

    u_causal, err_causal = integrate.quad(
        causal_integrand, 0.0, np.inf, limit=spec.quad_limit,
        epsrel=spec.rel_tol, epsabs=0.0)
    u_causal /= 2.0 * np.pi
    err_causal /= 2.0 * np.pi

    # field part on the real axis
    def field_integrand(omega):
        if omega <= 0.0:
            return 0.0
        rho = env.rho_scattered(omega)
        if rho == 0.0:
            return 0.0
        alpha = mean_polarizability(atom_a, omega, eta)
        return -rho * np.real(alpha) / (2.0 * np.pi)

    resonances = [w0] + [b for b in env.breakpoints()]
    if spec.omega_cut is not None:
        omega_cut = spec.omega_cut
    else:
        omega_cut = 1.5 * max(resonances)
        if thermal_extent is None and isinstance(
                getattr(env, "field", None), fields_mod.Thermal):
            thermal_extent = 35.0 * env.field.temperature
        if thermal_extent:
            omega_cut = max(omega_cut, max(resonances) + thermal_extent)

    edges = {0.0, omega_cut}
    for c in resonances:
        for e in _graded_ladder(c, eta, spec.window_factor):
            if 0.0 < e < omega_cut:
                edges.add(e)
    edges = sorted(edges)

    period = env.oscillation_period()
    max_width = (spec.max_chunk_periods * period
                 if np.isfinite(period) else np.inf)

    u_field = 0.0
    err_field = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        width = hi - lo
        n_chunks = max(1, int(np.ceil(width / max_width))) \
            if np.isfinite(max_width) else 1
        sub = np.linspace(lo, hi, n_chunks + 1)
        for a, b in zip(sub[:-1], sub[1:]):
            val, err = integrate.quad(
                field_integrand, a, b, limit=spec.quad_limit,
                epsrel=spec.rel_tol, epsabs=1e-300)
            u_field += val
            err_field += err

    # resonant pole term, unbroadened
    pole = getattr(env, "pole_value", env.causal)
    u_pole = p_e * (atom_a.d2 / 3.0) * np.real(pole(w0))

    total = u_causal + u_field + u_pole
    achieved = err_causal + err_field
    if achieved > max(1e3 * spec.rel_tol * abs(total), 1e-280):
        raise QuadratureError(
            f"frequency integral did not converge: estimated error "
            f"{achieved:.3e} against value {total:.3e}")
    return total


# ---------------------------------------------------------------------------
# two-atom closed forms

_MATSUBARA_BLOCK = 4096
_MATSUBARA_CAP = 1 << 21


def _matsubara_sum(term_fn, temperature, rel_tail=1e-16):
    """T * [t(0)/2 + sum_{m>=1} t(m)] with an integral tail correction.

    term_fn maps an array of Matsubara indices m to term values; terms
    must decay for large m.  Summation proceeds in vectorized blocks
    until the last block is negligible, then an Euler-Maclaurin
    midpoint tail Int_{M+1/2}^inf t(m) dm is added if the cap was hit.
    """
    total = 0.5 * float(term_fn(np.array([0.0]))[0])
    m_start = 1
    while m_start < _MATSUBARA_CAP:
        m = np.arange(m_start, m_start + _MATSUBARA_BLOCK, dtype=float)
        block = term_fn(m)
        total += float(np.sum(block))
        m_start += _MATSUBARA_BLOCK
        scale = abs(total) if total != 0.0 else 1.0
        if abs(block[-1]) < rel_tail * scale and \
                abs(np.sum(np.abs(block[-8:]))) < 8 * rel_tail * scale:
            break
    else:
        tail, _ = integrate.quad(lambda m: float(term_fn(np.array([m]))[0]),
                                 m_start - 0.5, np.inf, limit=200)
        total += tail
    return temperature * total


def u_eq_two_atom(atom_a, atom_b, temperature, big_r):
    """Equilibrium dispersion potential of the pair (Matsubara route).

    U_eq = -s_A s_B T sum'_m alpha_A(i xi_m) alpha_B(i xi_m)
           sq(i xi_m, R), s_X = p_g^X - p_e^X, xi_m = 2 pi m T, the
    m = 0 term halved.  temperature = 0 switches to the integral
    -s_A s_B/(2 pi) Int alpha_A alpha_B sq d xi.  Attractive (London
    R^-6, then retarded R^-7) for ground-state atoms.
    """
    if big_r <= 0.0:
        raise PotentialError("R must be positive")
    if temperature < 0.0:
        raise PotentialError("temperature must be non-negative")
    s = atom_a.inversion_deficit * atom_b.inversion_deficit

    def integrand(xi):
        return (polarizability_imagfreq(atom_a, AtomState.GROUND, xi)
                * polarizability_imagfreq(atom_b, AtomState.GROUND, xi)
                * contracted_sq_imagfreq(xi, big_r))

    if temperature == 0.0:
        val, _ = integrate.quad(integrand, 0.0, np.inf, limit=400,
                                epsrel=1e-12, epsabs=0.0)
        return -s * val / (2.0 * np.pi)

    two_pi_t = 2.0 * np.pi * temperature
    return -s * _matsubara_sum(lambda m: integrand(two_pi_t * m), temperature)


def _pair_factors(atom_a, atom_b, field):
    _check_pair(atom_a.omega0, atom_b.omega0, atom_a.gamma, atom_b.gamma)
    pf_a = population_factor(atom_a, field.occupation(atom_a.omega0))
    pf_b = population_factor(atom_b, field.occupation(atom_b.omega0))
    k = (2.0 * atom_a.d2 * atom_b.d2
         / (9.0 * (atom_a.omega0**2 - atom_b.omega0**2)))
    return k, pf_a, pf_b


def u_neq_exact(target, atom_a, atom_b, field, big_r):
    """Non-equilibrium resonant potential of atom `target` ('A' or 'B').

    Vectorized over big_r.  Vanishes for a thermal field with Boltzmann
    populations, and is linear in each occupation and each excited
    population separately.
    """
    big_r = np.asarray(big_r, dtype=float)
    if np.any(big_r <= 0.0):
        raise PotentialError("R must be positive")
    k, pf_a, pf_b = _pair_factors(atom_a, atom_b, field)
    wa, wb = atom_a.omega0, atom_b.omega0
    if target == "A":
        out = k * (wa * pf_b * contracted_abs2(wb, big_r)
                   - wb * pf_a * np.real(contracted_sq(wa, big_r)))
    elif target == "B":
        out = -k * (wb * pf_a * contracted_abs2(wa, big_r)
                    - wa * pf_b * np.real(contracted_sq(wb, big_r)))
    else:
        raise PotentialError(f"target must be 'A' or 'B', got {target!r}")
    return float(out) if np.ndim(out) == 0 else out


def u_pair_total(target, atom_a, atom_b, field, big_r, temperature=None):
    """u_neq_exact plus the equilibrium part when a temperature is given."""
    u = u_neq_exact(target, atom_a, atom_b, field, big_r)
    if temperature is None:
        return u
    r_arr = np.atleast_1d(np.asarray(big_r, dtype=float))
    ueq = np.array([u_eq_two_atom(atom_a, atom_b, temperature, r)
                    for r in r_arr])
    out = u + (ueq if np.ndim(big_r) else float(ueq[0]))
    return out


# ---------------------------------------------------------------------------
# atom near a body

def u_cp_body(atom, scatter_greens, temperature, state=None,
              populations=None, atom_tag="A"):
    """Casimir-Polder split for an atom near a body thermalized at T.

    scatter_greens must expose dr(omega) and dr_imagfreq(xi) (the
    retarded scattering contraction, free-space self-part excluded).
    The equilibrium part is the Matsubara sum of the averaged response
    against dr(i xi); the non-equilibrium part is
    -(|d|^2/3) pf Re dr(omega_0) with pf evaluated at the thermal
    occupation of the transition frequency.
    """
    if temperature < 0.0:
        raise PotentialError("temperature must be non-negative")
    if populations is not None:
        p_g, p_e = populations
    else:
        p_g, p_e = _resolve_populations(atom, state)
    probe = atom.with_populations(p_g, p_e)
    s = probe.inversion_deficit

    def integrand(xi):
        return (polarizability_imagfreq(atom, AtomState.GROUND, xi)
                * scatter_greens.dr_imagfreq(xi))

    if temperature == 0.0:
        val, _ = integrate.quad(integrand, 0.0, np.inf, limit=400,
                                epsrel=1e-12, epsabs=0.0)
        u_eq = s * val / (2.0 * np.pi)
        n0 = 0.0
    else:
        two_pi_t = 2.0 * np.pi * temperature
        def terms(m):
            return np.array([integrand(x) for x in np.atleast_1d(two_pi_t * m)])
        u_eq = s * _matsubara_sum(terms, temperature)
        n0 = fields_mod.Thermal(temperature).occupation(atom.omega0)

    pf = population_factor(probe, n0)
    u_neq = -(atom.d2 / 3.0) * pf * np.real(scatter_greens.dr(atom.omega0))
    return PotentialBreakdown(u_eq=float(u_eq), u_neq=float(u_neq),
                              atom_tag=atom_tag, regime="exact")
