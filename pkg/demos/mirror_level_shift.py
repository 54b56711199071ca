"""Single atom in front of a perfect mirror.

The body route splits the level shift into an equilibrium
Casimir-Polder part (Matsubara sum over the mirror's scattering
response) and a resonant non-equilibrium part that only exists for
excited or field-driven atoms and oscillates with distance.
"""

import numpy as np

from vdwlight import PerfectMirror, UnitSystem, ev_to_angular
from vdwlight.atoms import AtomState, atom_from_preset, load_presets
from vdwlight.potentials import u_cp_body

ctx = UnitSystem(omega_ref=ev_to_angular(1.59))
atom = atom_from_preset(load_presets()["rb87_d2"], ctx, omega0_ev=1.59)

print("ground state, T = 0: pure attraction, -|d|^2/(12 z^3) law at "
      "short range")
print(f"{'z':>8} {'U_eq':>13} {'U_eq * 12 z^3 / |d|^2':>23}")
for z in (1e-3, 1e-2, 0.1, 1.0):
    split = u_cp_body(atom, PerfectMirror(z), 0.0)
    print(f"{z:8.3f} {split.u_eq:13.4e} "
          f"{split.u_eq * 12 * z**3 / atom.d2:23.6f}")

print("\nexcited state, T = 0: resonant part oscillates with distance")
print(f"{'z':>8} {'U_eq':>13} {'U_neq':>13}")
for z in np.linspace(8.0, 8.0 + np.pi / atom.omega0, 7):
    split = u_cp_body(atom, PerfectMirror(z), 0.0, state=AtomState.EXCITED)
    print(f"{z:8.3f} {split.u_eq:13.4e} {split.u_neq:13.4e}")

print("\nthermalized mirror at T = 0.5 omega_0: both parts populated")
split = u_cp_body(atom, PerfectMirror(3.0), 0.5)
print(f"  z = 3:  U_eq = {split.u_eq:.4e},  U_neq = {split.u_neq:.4e},"
      f"  total = {split.u_total:.4e}")
