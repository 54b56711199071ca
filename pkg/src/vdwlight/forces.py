"""Forces from the exact potentials by numerical differentiation.

The force on atom A along rho = (R_A - R_B)/R is -dU_A/dR; on atom B
it is +dU_B/dR (moving B away from A increases R).  Differentiation is
a Richardson-extrapolated central difference with the step adapted to
the local oscillation scale,

    h = min(1e-3 R, 1e-2 / (2 max(omega_A, omega_B))),

two halvings, and a 1e-6 relative convergence criterion between the
last two extrapolation levels.  The net force on the pair is
F_tot = (F_A + F_B)/2, which vanishes for a reciprocal pair.
"""

from dataclasses import dataclass

import numpy as np

from . import potentials


class ForceError(RuntimeError):
    """Finite-difference differentiation failed to converge."""


@dataclass(frozen=True)
class StepSpec:
    rel_step: float = 1e-3        # h <= rel_step * R
    phase_step: float = 1e-2      # h <= phase_step / (2 max omega)
    halvings: int = 2
    rel_convergence: float = 1e-6


DEFAULT_STEP = StepSpec()


@dataclass(frozen=True)
class ForcePair:
    """Force vectors of the pair and their rho projections."""

    f_a: np.ndarray
    f_b: np.ndarray
    f_a_rho: float
    f_b_rho: float
    f_net_rho: float
    big_r: float
    fd_error: float = 0.0


def richardson_derivative(fn, x, h, halvings=2, rel_convergence=1e-6):
    """(derivative, error estimate) by Richardson-extrapolated
    central differences; fn may be vectorized over its argument."""
    steps = h / (2.0 ** np.arange(halvings + 1))
    table = [(fn(x + s) - fn(x - s)) / (2.0 * s) for s in steps]
    for level in range(1, halvings + 1):
        factor = 4.0 ** level
        table = [(factor * table[i + 1] - table[i]) / (factor - 1.0)
                 for i in range(len(table) - 1)]
    # redo with one fewer halving for the convergence estimate
    prev = [(fn(x + s) - fn(x - s)) / (2.0 * s) for s in steps[:-1]]
    for level in range(1, halvings):
        factor = 4.0 ** level
        prev = [(factor * prev[i + 1] - prev[i]) / (factor - 1.0)
                for i in range(len(prev) - 1)]
    best = table[0]
    err = np.abs(best - prev[0])
    return best, err


def _step_for(big_r, omega_max, step):
    return min(step.rel_step * big_r, step.phase_step / (2.0 * omega_max))


def force_exact(target, atom_a, atom_b, field, temperature, big_r,
                step=DEFAULT_STEP):
    """rho-projected force on one atom from the exact potentials.

    temperature = None drops the equilibrium part.  Returns
    (force, error_estimate); raises ForceError when the Richardson
    levels do not converge to the requested relative tolerance.
    """
    if big_r <= 0.0:
        raise potentials.PotentialError("R must be positive")
    omega_max = max(atom_a.omega0, atom_b.omega0)
    h = _step_for(big_r, omega_max, step)

    def u_of_r(r):
        return potentials.u_pair_total(target, atom_a, atom_b, field, r,
                                       temperature)

    du, err = richardson_derivative(u_of_r, big_r, h, step.halvings,
                                    step.rel_convergence)
    du = float(du)
    err = float(err)
    scale = max(abs(du), 1e-300)
    if err > step.rel_convergence * scale and err > 1e-280:
        raise ForceError(
            f"force differentiation did not converge at R = {big_r:.6g}: "
            f"level difference {err:.3e} vs value {du:.3e}")
    sign = -1.0 if target == "A" else 1.0
    return sign * du, err


def force_pair(atom_a, atom_b, field, temperature, big_r,
               step=DEFAULT_STEP, rho_hat=(0.0, 0.0, 1.0)):
    """Assemble the ForcePair at one separation."""
    f_a_rho, err_a = force_exact("A", atom_a, atom_b, field, temperature,
                                 big_r, step)
    f_b_rho, err_b = force_exact("B", atom_a, atom_b, field, temperature,
                                 big_r, step)
    rho = np.asarray(rho_hat, dtype=float)
    rho = rho / np.linalg.norm(rho)
    return ForcePair(
        f_a=f_a_rho * rho,
        f_b=f_b_rho * rho,
        f_a_rho=f_a_rho,
        f_b_rho=f_b_rho,
        f_net_rho=0.5 * (f_a_rho + f_b_rho),
        big_r=big_r,
        fd_error=max(err_a, err_b),
    )


def net_force(pair):
    """(F_A + F_B)/2 along rho."""
    return 0.5 * (pair.f_a_rho + pair.f_b_rho)


def force_exact_grid(target, atom_a, atom_b, field, temperature, r_grid,
                     step=DEFAULT_STEP):
    """Vectorized force_exact over a grid of separations.

    Returns (forces, error_estimates).  Uses one common relative step
    per point; non-convergent points raise as in force_exact.
    """
    r_grid = np.asarray(r_grid, dtype=float)
    omega_max = max(atom_a.omega0, atom_b.omega0)
    h = np.minimum(step.rel_step * r_grid,
                   step.phase_step / (2.0 * omega_max))

    def u_of_r(r):
        return potentials.u_pair_total(target, atom_a, atom_b, field, r,
                                       temperature)

    steps = [h / (2.0 ** k) for k in range(step.halvings + 1)]
    table = [(u_of_r(r_grid + s) - u_of_r(r_grid - s)) / (2.0 * s)
             for s in steps]
    prev = table[:-1]
    for level in range(1, step.halvings + 1):
        factor = 4.0 ** level
        table = [(factor * table[i + 1] - table[i]) / (factor - 1.0)
                 for i in range(len(table) - 1)]
        if level < step.halvings:
            prev = [(factor * prev[i + 1] - prev[i]) / (factor - 1.0)
                    for i in range(len(prev) - 1)]
    best = table[0]
    err = np.abs(best - prev[0])
    sign = -1.0 if target == "A" else 1.0
    return sign * best, err
