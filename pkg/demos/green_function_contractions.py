"""The two contracted Green's products that drive every closed form.

Walks the dimensionless separation x = omega R from deep subwavelength
to the far field and shows:
  * |D|^2 against its closed form 2 w^4/R^2 (1 + 1/x^2 + 3/x^4),
  * the complex square contraction and its static 6/R^6 limit,
  * the imaginary-frequency form that feeds the Matsubara sums,
and verifies the closed forms against the raw 3x3 tensor on the fly.
"""

import numpy as np

from vdwlight import (contracted_abs2, contracted_sq,
                      contracted_sq_imagfreq, dyadic_green)

R = 1.0
print(f"{'x = wR':>10} {'abs2':>12} {'|sq|':>12} {'Re sq':>12} "
      f"{'tensor dev':>12}")
for x in np.logspace(-3, 2, 11):
    omega = x / R
    abs2 = contracted_abs2(omega, R)
    sq = contracted_sq(omega, R)
    d = dyadic_green(omega, np.array([0.0, 0.0, R]))
    dev = abs(np.sum(d * d.T) - sq) / abs(sq)
    print(f"{x:10.3g} {abs2:12.4e} {abs(sq):12.4e} {sq.real:12.4e} "
          f"{dev:12.1e}")

print("\nstatic limit: sq(x -> 0) * R^6 / 6 =",
      contracted_sq(1e-6, R).real * R**6 / 6.0)

print("\nimaginary axis (Matsubara input), R = 1:")
for t in (0.0, 0.5, 1.0, 5.0, 20.0):
    print(f"  xi R = {t:5.1f}:  sq(i xi) = "
          f"{contracted_sq_imagfreq(t, R):.6e}")

print("\nfar-field envelope |sq|/abs2 ->",
      abs(contracted_sq(1e4, R)) / contracted_abs2(1e4, R))
