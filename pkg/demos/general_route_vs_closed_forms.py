"""Closing the loop: the general frequency-integral route against the
closed forms.

The energy shift of atom A follows from one master expression: a
frequency integral of its averaged polarizability against the
environment's scattered Green's function, plus a resonant pole term.
With atom B as the environment this must reproduce the dedicated
Matsubara-equilibrium plus resonant closed forms, and it does, at the
1e-5 level across regimes.
"""

import numpy as np

from vdwlight import Thermal, UnitSystem, Vacuum, ev_to_angular
from vdwlight.atoms import atom_from_preset, load_presets
from vdwlight.potentials import (TwoAtomScattered, u_eq_two_atom,
                                 u_general, u_neq_exact)

LAM = 2.0 * np.pi
ctx = UnitSystem(omega_ref=ev_to_angular(1.59))
presets = load_presets()
a = atom_from_preset(presets["rb87_d2"], ctx, omega0_ev=1.59)
b = atom_from_preset(presets["k40_d2"], ctx, omega0_ev=1.61)

cases = [
    ("ground/ground, thermal T = w_A", a, Thermal(a.omega0), a.omega0),
    ("excited/ground, vacuum", a.with_populations(0.0, 1.0), Vacuum(), 0.0),
]
for label, atom_a, field, temp in cases:
    print(f"\n=== {label} ===")
    print(f"{'R/lambda':>9} {'integral route':>16} {'closed forms':>16} "
          f"{'rel dev':>10}")
    for r_lam in (0.05, 0.3, 2.0):
        big_r = r_lam * LAM
        eta = min(1e-6, 1e-8 * LAM / big_r)
        env = TwoAtomScattered(b, field, big_r, eta)
        route = u_general(atom_a, env, eta)
        closed = (u_eq_two_atom(atom_a, b, temp, big_r)
                  + u_neq_exact("A", atom_a, b, field, big_r))
        dev = abs(route - closed) / max(abs(route), abs(closed))
        print(f"{r_lam:9.2f} {route:16.6e} {closed:16.6e} {dev:10.1e}")
