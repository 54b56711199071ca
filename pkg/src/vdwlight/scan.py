"""Configuration-driven sweep engine.

Sweeps are described by TOML files (one per figure preset, shipped
under presets/) and evaluated point by point into CSV rows.  The sweep
variable is one of

    r_over_lambda   separation in units of lambda_A = 2 pi c / omega_A
    u_ratio         U(omega_A)/U of a two-peak field at fixed separation
    omega_b_ratio   omega_B/omega_A at fixed separation

and the output columns are drawn from F_A_rho, F_B_rho, F_net, U_A,
U_B, regime, fd_error.  Forces come from Richardson-differentiated
exact potentials by default; --fast switches to the closed asymptotic
forms inside their validated regimes (exact elsewhere).

CSV layout: header row, a '#units' row naming the unit of every
column, then one row per sweep point, 17 significant digits, rows
ordered by sweep value.  Failed points keep their row (status column
'error', value cells empty) and flip the exit status to 2.  Everything
is deterministic: identical config and code version give byte-identical
files at any worker count.
"""

import concurrent.futures
import json
from dataclasses import dataclass, field as dataclass_field

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:     # python < 3.11
    import tomli as tomllib

from importlib import resources

from . import __version__, asymptotics, atoms, fields, forces, potentials, units

KNOWN_COLUMNS = ("F_A_rho", "F_B_rho", "F_net", "U_A", "U_B", "regime",
                 "fd_error")
SWEEP_VARIABLES = ("r_over_lambda", "u_ratio", "omega_b_ratio")
LAMBDA_NATURAL = 2.0 * np.pi    # lambda_A in units of c/omega_A


class ConfigError(ValueError):
    """Invalid sweep configuration."""


@dataclass(frozen=True)
class AtomSpec:
    preset: str = None
    omega0_ev: float = None
    dipole_cm: float = None
    gamma_s: float = None


@dataclass(frozen=True)
class FieldSpec:
    kind: str = "vacuum"                  # vacuum | thermal | two_peak | tabulated
    temperature_in_omega_a: float = None  # thermal
    temperature_k: float = None           # thermal, alternative
    total_energy_density_j_m3: float = None   # two_peak
    u_a_fraction: float = None                # two_peak
    bandwidth_in_omega_a: float = 1e-6        # two_peak
    spectrum_file: str = None                 # tabulated


@dataclass(frozen=True)
class SweepConfig:
    scenario: str
    atom_a: AtomSpec
    atom_b: AtomSpec
    field: FieldSpec
    variable: str
    vmin: float
    vmax: float
    count: int
    spacing: str = "log"
    columns: tuple = ("F_A_rho", "F_B_rho", "F_net", "U_A", "U_B", "regime")
    separation_natural: float = None      # fixed R for u/omega sweeps
    include_equilibrium: bool = True
    u_a_fractions: tuple = ()             # variant columns for F_net
    source_path: str = None

    def sweep_values(self):
        if self.spacing == "log":
            return np.geomspace(self.vmin, self.vmax, self.count)
        return np.linspace(self.vmin, self.vmax, self.count)


# ---------------------------------------------------------------------------
# config loading / validation

def _atom_spec(table, where, errors):
    spec = AtomSpec(
        preset=table.get("preset"),
        omega0_ev=table.get("omega0_ev"),
        dipole_cm=table.get("dipole_cm"),
        gamma_s=table.get("gamma_s"),
    )
    if spec.preset is None and (spec.omega0_ev is None
                                or spec.dipole_cm is None):
        errors.append(f"{where}: needs a preset or explicit "
                      "omega0_ev + dipole_cm")
    return spec


def load_config(path):
    """Parse and validate a sweep config; raises ConfigError with every
    violation listed."""
    with open(path, "rb") as fh:
        try:
            raw = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"{path}: parse error: {exc}") from None

    errors = []
    scenario = raw.get("scenario", "custom")
    atoms_tab = raw.get("atoms", {})
    atom_a = _atom_spec(atoms_tab.get("a", {}), "atoms.a", errors)
    atom_b = _atom_spec(atoms_tab.get("b", {}), "atoms.b", errors)

    ftab = raw.get("field", {})
    fspec = FieldSpec(
        kind=ftab.get("kind", "vacuum"),
        temperature_in_omega_a=ftab.get("temperature_in_omega_a"),
        temperature_k=ftab.get("temperature_k"),
        total_energy_density_j_m3=ftab.get("total_energy_density_j_m3"),
        u_a_fraction=ftab.get("u_a_fraction"),
        bandwidth_in_omega_a=ftab.get("bandwidth_in_omega_a", 1e-6),
        spectrum_file=ftab.get("spectrum_file"),
    )
    if fspec.kind not in ("vacuum", "thermal", "two_peak", "tabulated"):
        errors.append(f"field.kind: unknown kind {fspec.kind!r}")
    if fspec.kind == "thermal" and fspec.temperature_in_omega_a is None \
            and fspec.temperature_k is None:
        errors.append("field: thermal needs temperature_in_omega_a or "
                      "temperature_k")
    if fspec.kind == "two_peak" and fspec.total_energy_density_j_m3 is None:
        errors.append("field: two_peak needs total_energy_density_j_m3")
    if fspec.kind == "tabulated" and fspec.spectrum_file is None:
        errors.append("field: tabulated needs spectrum_file")

    stab = raw.get("sweep", {})
    variable = stab.get("variable")
    if variable not in SWEEP_VARIABLES:
        errors.append(f"sweep.variable: must be one of {SWEEP_VARIABLES}, "
                      f"got {variable!r}")
    vmin = stab.get("min")
    vmax = stab.get("max")
    count = stab.get("count")
    if vmin is None or vmax is None or count is None:
        errors.append("sweep: needs min, max, count")
    else:
        if count < 2:
            errors.append("sweep.count: range count >= 2")
        if not vmin < vmax:
            errors.append("sweep: min < max required")
    spacing = stab.get("spacing", "log")
    if spacing not in ("lin", "log"):
        errors.append(f"sweep.spacing: 'lin' or 'log', got {spacing!r}")
    if spacing == "log" and vmin is not None and vmin <= 0:
        errors.append("sweep: log spacing needs min > 0")

    otab = raw.get("outputs", {})
    columns = tuple(otab.get("columns",
                             ["F_A_rho", "F_B_rho", "F_net", "U_A", "U_B",
                              "regime"]))
    for col in columns:
        if col not in KNOWN_COLUMNS:
            errors.append(f"outputs.columns: unknown column {col!r} "
                          f"(known: {', '.join(KNOWN_COLUMNS)})")

    ntab = raw.get("numerics", {})
    separation = ntab.get("separation_natural")
    if variable in ("u_ratio", "omega_b_ratio") and separation is None:
        errors.append(f"numerics.separation_natural required for "
                      f"{variable} sweeps")
    if variable in ("u_ratio", "omega_b_ratio") and fspec.kind != "two_peak":
        errors.append(f"{variable} sweeps need field.kind = 'two_peak'")

    fractions = tuple(ntab.get("u_a_fractions", ()))
    if fractions and fspec.kind != "two_peak":
        errors.append("numerics.u_a_fractions only makes sense for "
                      "two_peak fields")

    if errors:
        raise ConfigError("; ".join(errors))

    return SweepConfig(
        scenario=scenario, atom_a=atom_a, atom_b=atom_b, field=fspec,
        variable=variable, vmin=float(vmin), vmax=float(vmax),
        count=int(count), spacing=spacing, columns=columns,
        separation_natural=separation,
        include_equilibrium=ntab.get("include_equilibrium", True),
        u_a_fractions=fractions, source_path=str(path),
    )


def preset_names():
    root = resources.files("vdwlight").joinpath("presets")
    return sorted(p.name[:-5] for p in root.iterdir()
                  if p.name.endswith(".toml"))


def preset_path(name):
    p = resources.files("vdwlight").joinpath(f"presets/{name}.toml")
    if not p.is_file():
        raise ConfigError(f"unknown scenario preset {name!r}; available: "
                          f"{', '.join(preset_names())}")
    return p


@dataclass
class ValidationReport:
    ok: bool
    errors: list
    info: dict = dataclass_field(default_factory=dict)

    def render(self):
        lines = []
        if self.ok:
            lines.append("config valid")
            for key, val in self.info.items():
                lines.append(f"  {key}: {val}")
        else:
            lines.append("config invalid:")
            for err in self.errors:
                lines.append(f"  - {err}")
        return "\n".join(lines)


def validate_config(path):
    """Full validation without computation."""
    try:
        config = load_config(path)
    except ConfigError as exc:
        return ValidationReport(ok=False, errors=str(exc).split("; "))
    try:
        scene = build_scene(config)
    except (ConfigError, atoms.AtomError, fields.FieldError) as exc:
        return ValidationReport(ok=False, errors=[str(exc)])
    lam_si = 2.0 * np.pi * units.C_LIGHT / scene.context.omega_ref
    info = {
        "scenario": config.scenario,
        "sweep": f"{config.variable} in [{config.vmin}, {config.vmax}], "
                 f"{config.count} points, {config.spacing}",
        "omega_a_ev": f"{units.angular_to_ev(scene.context.omega_ref):.6f}",
        "lambda_a_m": f"{lam_si:.6e}",
        "omega_b_over_omega_a": f"{scene.atom_b.omega0:.10g}",
        "regime_boundaries_r_over_lambda":
            f"short < {0.1 / LAMBDA_NATURAL:.4g}, "
            f"long > {10.0 / LAMBDA_NATURAL:.4g}",
    }
    return ValidationReport(ok=True, errors=[], info=info)


# ---------------------------------------------------------------------------
# scene construction (natural units)

@dataclass(frozen=True)
class Scene:
    context: units.UnitSystem
    atom_a: atoms.TwoLevelAtom
    atom_b: atoms.TwoLevelAtom
    temperature: float      # natural, or None when no equilibrium part
    config: SweepConfig

    def make_field(self, u_a_fraction=None, omega_b=None):
        fspec = self.config.field
        wb = self.atom_b.omega0 if omega_b is None else omega_b
        if fspec.kind == "vacuum":
            return fields.Vacuum()
        if fspec.kind == "thermal":
            return fields.Thermal(self._thermal_t())
        if fspec.kind == "tabulated":
            return fields.Tabulated.from_file(fspec.spectrum_file,
                                              self.context)
        frac = fspec.u_a_fraction if u_a_fraction is None else u_a_fraction
        if frac is None:
            frac = 0.5
        total = fspec.total_energy_density_j_m3
        return fields.TwoPeak(
            omega_a=self.atom_a.omega0, omega_b=wb,
            u_a=frac * total, u_b=(1.0 - frac) * total,
            delta_omega=fspec.bandwidth_in_omega_a,
            context=self.context)

    def _thermal_t(self):
        fspec = self.config.field
        if fspec.temperature_in_omega_a is not None:
            return fspec.temperature_in_omega_a * self.atom_a.omega0
        return self.context.temperature_to_natural(fspec.temperature_k)


def _resolve_atom(spec, presets, context, default_pe=0.0):
    if spec.preset is not None:
        if spec.preset not in presets:
            raise ConfigError(
                f"unknown atom preset {spec.preset!r}; available: "
                f"{', '.join(sorted(presets))}")
        return atoms.atom_from_preset(presets[spec.preset], context,
                                      omega0_ev=spec.omega0_ev,
                                      p_g=1.0 - default_pe, p_e=default_pe)
    return atoms.atom_from_si(units.ev_to_angular(spec.omega0_ev),
                              spec.dipole_cm, spec.gamma_s or 0.0, context,
                              p_g=1.0 - default_pe, p_e=default_pe)


def build_scene(config):
    presets = atoms.load_presets()
    omega_a_ev = config.atom_a.omega0_ev
    if omega_a_ev is None:
        omega_a_ev = presets[config.atom_a.preset].omega0_ev \
            if config.atom_a.preset in presets else None
    if omega_a_ev is None:
        raise ConfigError("cannot resolve omega_A")
    context = units.UnitSystem(omega_ref=units.ev_to_angular(omega_a_ev))
    atom_a = _resolve_atom(config.atom_a, presets, context)
    atom_b = _resolve_atom(config.atom_b, presets, context)
    temperature = None
    if config.include_equilibrium:
        if config.field.kind == "thermal":
            scene_tmp = Scene(context, atom_a, atom_b, None, config)
            temperature = scene_tmp._thermal_t()
        else:
            temperature = 0.0
    return Scene(context=context, atom_a=atom_a, atom_b=atom_b,
                 temperature=temperature, config=config)


# ---------------------------------------------------------------------------
# point evaluation

def _forces_at(scene, field, big_r, fast, atom_b=None):
    atom_a = scene.atom_a
    atom_b = atom_b or scene.atom_b
    report = asymptotics.classify(atom_a.omega0, atom_b.omega0, big_r)
    if fast and report.regime in ("short", "long") \
            and atom_a.p_e == 0.0 and atom_b.p_e == 0.0:
        if report.regime == "short":
            f_a, f_b = asymptotics.f_short_ground(atom_a, atom_b, field)(big_r)
        else:
            f_a = asymptotics.f_long_ground("A", atom_a, atom_b, field)(big_r)
            f_b = asymptotics.f_long_ground("B", atom_a, atom_b, field)(big_r)
        if scene.temperature:
            fe_a, fe_b = asymptotics.f_eq_long(atom_a, atom_b,
                                               scene.temperature)(big_r)
            f_a, f_b = f_a + fe_a, f_b + fe_b
        return f_a, f_b, 0.0, report
    f_a, err_a = forces.force_exact("A", atom_a, atom_b, field,
                                    scene.temperature, big_r)
    f_b, err_b = forces.force_exact("B", atom_a, atom_b, field,
                                    scene.temperature, big_r)
    return f_a, f_b, max(err_a, err_b), report


def evaluate_point(scene, value, fast=False):
    """One sweep point -> dict of column values (natural units)."""
    config = scene.config
    out = {}
    if config.variable == "r_over_lambda":
        big_r = value * LAMBDA_NATURAL
        field = scene.make_field()
        atom_b = scene.atom_b
    elif config.variable == "u_ratio":
        big_r = config.separation_natural
        field = scene.make_field(u_a_fraction=value)
        atom_b = scene.atom_b
    else:   # omega_b_ratio
        big_r = config.separation_natural
        atom_b = atoms.TwoLevelAtom(
            omega0=value * scene.atom_a.omega0, d2=scene.atom_b.d2,
            p_g=scene.atom_b.p_g, p_e=scene.atom_b.p_e,
            gamma=scene.atom_b.gamma)
        field = scene.make_field(omega_b=atom_b.omega0)

    need_forces = any(c in config.columns
                      for c in ("F_A_rho", "F_B_rho", "F_net", "fd_error"))
    if need_forces:
        f_a, f_b, fd_err, report = _forces_at(scene, field, big_r, fast,
                                              atom_b)
        out["F_A_rho"] = f_a
        out["F_B_rho"] = f_b
        out["F_net"] = 0.5 * (f_a + f_b)
        out["fd_error"] = fd_err
    else:
        report = asymptotics.classify(scene.atom_a.omega0, atom_b.omega0,
                                      big_r)
    if "U_A" in config.columns:
        out["U_A"] = potentials.u_pair_total("A", scene.atom_a, atom_b,
                                             field, big_r, scene.temperature)
    if "U_B" in config.columns:
        out["U_B"] = potentials.u_pair_total("B", scene.atom_a, atom_b,
                                             field, big_r, scene.temperature)
    out["regime"] = report.regime

    for frac in config.u_a_fractions:
        field_v = scene.make_field(u_a_fraction=frac)
        f_a, f_b, _, _ = _forces_at(scene, field_v, big_r, fast, atom_b)
        out[f"F_net_ua{int(round(100 * frac)):03d}"] = 0.5 * (f_a + f_b)
    return out


# ---------------------------------------------------------------------------
# sweep driver and CSV output

@dataclass
class SweepResult:
    config: SweepConfig
    columns: list
    units_row: list
    rows: list            # list of dicts (column -> string)
    manifest: dict
    n_failures: int


def _column_list(config):
    cols = [config.variable]
    cols += [c for c in config.columns if c != "fd_error"]
    if any(c.startswith("F_") for c in config.columns):
        cols.append("fd_error")
    for frac in config.u_a_fractions:
        cols.append(f"F_net_ua{int(round(100 * frac)):03d}")
    cols.append("status")
    return cols


def _unit_of(column, mode):
    si = mode == "si"
    if column in ("F_A_rho", "F_B_rho", "F_net", "fd_error") \
            or column.startswith("F_net_ua"):
        return "N" if si else "hbar*omega_A^2/c"
    if column in ("U_A", "U_B"):
        return "J" if si else "hbar*omega_A"
    if column == "r_over_lambda":
        return "lambda_A"
    if column in ("u_ratio", "omega_b_ratio", "regime", "status"):
        return "1"
    return "1"


def _format_value(val):
    if isinstance(val, str):
        return val
    return f"{val:.17g}"


def _convert(out, scene, mode):
    if mode != "si":
        return dict(out)
    conv = {}
    for key, val in out.items():
        if key in ("F_A_rho", "F_B_rho", "F_net", "fd_error") \
                or key.startswith("F_net_ua"):
            conv[key] = units.force_natural_to_si(val, scene.context)
        elif key in ("U_A", "U_B"):
            conv[key] = scene.context.energy_to_si(val)
        else:
            conv[key] = val
    return conv


def run_sweep(config, workers=1, fast=False, unit_mode="natural"):
    """Evaluate the sweep; returns a SweepResult.

    Points failing numerically keep a flagged row and are counted in
    n_failures; evaluation order never affects the output (rows are
    assembled in sweep order whatever the worker count).
    """
    scene = build_scene(config)
    values = config.sweep_values()
    columns = _column_list(config)

    def eval_one(value):
        try:
            out = evaluate_point(scene, float(value), fast=fast)
            out = _convert(out, scene, unit_mode)
            bad = [k for k, v in out.items()
                   if not isinstance(v, str) and not np.isfinite(v)]
            if bad:   # emitted rows must never carry NaN/Inf
                return None, f"non-finite output in {', '.join(bad)}"
            return out, None
        except Exception as exc:   # per-point failure keeps the run alive
            return None, f"{type(exc).__name__}: {exc}"

    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(eval_one, values))
    else:
        results = [eval_one(v) for v in values]

    rows = []
    n_failures = 0
    failures = []
    for value, (out, err) in zip(values, results):
        row = {config.variable: _format_value(float(value))}
        if err is None:
            for col in columns[1:-1]:
                row[col] = _format_value(out.get(col, ""))
            row["status"] = "ok"
        else:
            n_failures += 1
            failures.append({"value": float(value), "error": err})
            for col in columns[1:-1]:
                row[col] = ""
            row["status"] = "error"
        rows.append(row)

    manifest = {
        "code_version": __version__,
        "scenario": config.scenario,
        "config_path": config.source_path,
        "unit_mode": unit_mode,
        "fast": fast,
        "sweep": {"variable": config.variable, "min": config.vmin,
                  "max": config.vmax, "count": config.count,
                  "spacing": config.spacing},
        "atoms": {
            "a": {"omega0_natural": scene.atom_a.omega0,
                  "d2_natural": scene.atom_a.d2,
                  "gamma_natural": scene.atom_a.gamma},
            "b": {"omega0_natural": scene.atom_b.omega0,
                  "d2_natural": scene.atom_b.d2,
                  "gamma_natural": scene.atom_b.gamma},
        },
        "omega_ref_rad_s": scene.context.omega_ref,
        "temperature_natural": scene.temperature,
        "constants": {"hbar": units.HBAR, "c": units.C_LIGHT,
                      "k_B": units.K_BOLTZMANN},
        "tolerances": {"fd_rel_convergence":
                       forces.DEFAULT_STEP.rel_convergence},
        "n_failures": n_failures,
        "failures": failures,
    }
    return SweepResult(config=config, columns=columns,
                       units_row=[_unit_of(c, unit_mode) for c in columns],
                       rows=rows, manifest=manifest, n_failures=n_failures)


def write_csv(result, path):
    """CSV + sidecar manifest; UTF-8, '.' decimal, deterministic bytes."""
    lines = [",".join(result.columns),
             "#units," + ",".join(result.units_row[1:])]
    for row in result.rows:
        lines.append(",".join(row[c] for c in result.columns))
    data = "\n".join(lines) + "\n"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(data)
    with open(str(path) + ".manifest.json", "w", encoding="utf-8") as fh:
        json.dump(result.manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
