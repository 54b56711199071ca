"""Equilibrium and non-equilibrium van der Waals interactions of
two-level atoms in isotropic photon fields.

Natural units (hbar = c = 1, frequencies in units of a reference
angular frequency) everywhere inside; SI only at the boundaries, see
vdwlight.units.
"""

__version__ = "0.1.0"

from .atoms import (AtomState, TwoLevelAtom, boltzmann_populations,
                    polarizability, polarizability_imagfreq,
                    population_factor)
from .fields import Tabulated, Thermal, TwoPeak, Vacuum
from .forces import ForcePair, force_exact, force_pair, net_force
from .greens import (contracted_abs2, contracted_sq,
                     contracted_sq_imagfreq, dyadic_green)
from .potentials import (EnvironmentGreens, PerfectMirror,
                         PotentialBreakdown, TwoAtomScattered,
                         UserSupplied, ZeroEnvironment, d11_scattered,
                         u_cp_body, u_eq_two_atom, u_general, u_neq_exact)
from .units import UnitSystem, ev_to_angular, force_natural_to_si

__all__ = [
    "AtomState", "TwoLevelAtom", "boltzmann_populations",
    "polarizability", "polarizability_imagfreq", "population_factor",
    "Tabulated", "Thermal", "TwoPeak", "Vacuum",
    "ForcePair", "force_exact", "force_pair", "net_force",
    "contracted_abs2", "contracted_sq", "contracted_sq_imagfreq",
    "dyadic_green",
    "EnvironmentGreens", "PerfectMirror", "PotentialBreakdown",
    "TwoAtomScattered", "UserSupplied", "ZeroEnvironment",
    "d11_scattered", "u_cp_body", "u_eq_two_atom", "u_general",
    "u_neq_exact",
    "UnitSystem", "ev_to_angular", "force_natural_to_si",
    "__version__",
]
