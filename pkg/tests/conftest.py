import numpy as np
import pytest

from vdwlight import atoms, fields, units

OMEGA_A_EV = 1.59
OMEGA_B_EV = 1.61


@pytest.fixture(scope="session")
def context():
    return units.UnitSystem(omega_ref=units.ev_to_angular(OMEGA_A_EV))


@pytest.fixture(scope="session")
def presets():
    return atoms.load_presets()


@pytest.fixture(scope="session")
def atom_pair(context, presets):
    """Rb-87 / K-40 pair at the quoted 1.59 / 1.61 eV transitions,
    both ground state, in natural units with omega_A = 1."""
    a = atoms.atom_from_preset(presets["rb87_d2"], context,
                               omega0_ev=OMEGA_A_EV)
    b = atoms.atom_from_preset(presets["k40_d2"], context,
                               omega0_ev=OMEGA_B_EV)
    return a, b


@pytest.fixture(scope="session")
def tuned_pair(context, presets):
    """Same pair with the detuning reduced to 1e-4 (Zeeman-tuned)."""
    a = atoms.atom_from_preset(presets["rb87_d2"], context,
                               omega0_ev=OMEGA_A_EV)
    b = atoms.atom_from_preset(presets["k40_d2"], context,
                               omega0_ev=OMEGA_A_EV * 1.0001)
    return a, b


@pytest.fixture(scope="session")
def thermal_field(atom_pair):
    return fields.Thermal(atom_pair[0].omega0)


class PointOccupation:
    """Test field: exact occupations at given frequencies, 0 elsewhere."""

    def __init__(self, mapping):
        self.mapping = dict(mapping)

    def occupation(self, omega):
        if np.ndim(omega) == 0:
            return self.mapping.get(float(omega), 0.0)
        return np.array([self.mapping.get(float(w), 0.0)
                         for w in np.asarray(omega).ravel()]
                        ).reshape(np.shape(omega))


@pytest.fixture()
def point_field():
    return PointOccupation
