"""Rb-87 / K-40 pair in a thermal field at T = omega_A.

Reproduces the headline phenomenology: reciprocal R^-7 repulsion at
short range, co-directional oscillating R^-2 forces at long range, and
the sign-oscillating net force that peaks in the crossover region and
grows as the inverse detuning when the transitions are tuned together.
"""

import numpy as np

from vdwlight import (Thermal, UnitSystem, ev_to_angular,
                      force_natural_to_si)
from vdwlight.atoms import atom_from_preset, load_presets
from vdwlight.forces import force_exact_grid

LAM = 2.0 * np.pi
ctx = UnitSystem(omega_ref=ev_to_angular(1.59))
presets = load_presets()
a = atom_from_preset(presets["rb87_d2"], ctx, omega0_ev=1.59)

for detuning, label in ((0.02, "bare Rb/K detuning (1.3%)"),
                        (1.59e-4, "Zeeman-tuned detuning (1e-4)")):
    b = atom_from_preset(presets["k40_d2"], ctx, omega0_ev=1.59 + detuning)
    th = Thermal(a.omega0)
    print(f"\n=== {label} ===")
    rs = LAM * np.array([0.02, 0.05, 0.2, 0.5, 1.0, 3.0, 10.0])
    # field-assisted forces; the equilibrium pair force cancels exactly
    # in the net and is left out here
    f_a, _ = force_exact_grid("A", a, b, th, None, rs)
    f_b, _ = force_exact_grid("B", a, b, th, None, rs)
    print(f"{'R/lambda':>9} {'F_A [N]':>12} {'F_B [N]':>12} "
          f"{'F_net [N]':>12}")
    for r, fa, fb in zip(rs, f_a, f_b):
        fa_si = force_natural_to_si(fa, ctx)
        fb_si = force_natural_to_si(fb, ctx)
        print(f"{r / LAM:9.2f} {fa_si:12.3e} {fb_si:12.3e} "
              f"{0.5 * (fa_si + fb_si):12.3e}")

    dense = np.geomspace(0.05 * LAM, 20 * LAM, 800)
    f_a, _ = force_exact_grid("A", a, b, th, None, dense)
    f_b, _ = force_exact_grid("B", a, b, th, None, dense)
    f_net = force_natural_to_si(0.5 * (f_a + f_b), ctx)
    i = int(np.argmax(np.abs(f_net)))
    print(f"peak |F_net| = {abs(f_net[i]):.2e} N at "
          f"R = {dense[i] / LAM:.2f} lambda")
