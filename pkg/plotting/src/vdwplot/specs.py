"""Plot specifications: what to draw from which CSV columns.

A PlotSpec is a list of panels plus an output stem and formats; each
panel names one or more input CSVs, an x column, y columns, lin/log
scales, and the annotations to apply (wavelength markers, regime
shading from the CSV's own regime column, peak marker).  Specs are
read from TOML files or generated for the shipped figure families
(fig1, fig2, fig3) over a directory of preset CSVs.
"""

import os
from dataclasses import dataclass, field

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib


class SpecError(ValueError):
    """Invalid plot specification."""


@dataclass(frozen=True)
class PanelSpec:
    csv_paths: tuple
    x: str
    y: tuple
    labels: tuple = ()
    xscale: str = "lin"
    yscale: str = "lin"
    title: str = ""
    lambda_markers: tuple = ()
    regime_shading: bool = False
    annotate_peak: bool = False

    def __post_init__(self):
        for scale in (self.xscale, self.yscale):
            if scale not in ("lin", "log"):
                raise SpecError(f"scale must be lin or log, got {scale!r}")
        if not self.csv_paths or not self.y:
            raise SpecError("panel needs at least one csv and one y column")


@dataclass(frozen=True)
class PlotSpec:
    panels: tuple
    output: str                      # path stem, no extension
    formats: tuple = ("png", "svg")
    layout: tuple = None             # (rows, cols); default single column
    suptitle: str = ""

    def __post_init__(self):
        if not self.panels:
            raise SpecError("spec has no panels")
        for fmt in self.formats:
            if fmt not in ("png", "svg"):
                raise SpecError(f"unsupported format {fmt!r}")


def load_spec(path):
    with open(path, "rb") as fh:
        try:
            raw = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise SpecError(f"{path}: parse error: {exc}") from None
    base = os.path.dirname(os.path.abspath(path))

    def resolve(p):
        return p if os.path.isabs(p) else os.path.join(base, p)

    panels = []
    for tab in raw.get("panels", []):
        csvs = tab.get("csv")
        if isinstance(csvs, str):
            csvs = [csvs]
        if not csvs:
            raise SpecError("panel without csv input")
        panels.append(PanelSpec(
            csv_paths=tuple(resolve(p) for p in csvs),
            x=tab.get("x", "r_over_lambda"),
            y=tuple(tab.get("y", ())),
            labels=tuple(tab.get("labels", ())),
            xscale=tab.get("xscale", "lin"),
            yscale=tab.get("yscale", "lin"),
            title=tab.get("title", ""),
            lambda_markers=tuple(tab.get("lambda_markers", ())),
            regime_shading=tab.get("regime_shading", False),
            annotate_peak=tab.get("annotate_peak", False),
        ))
    out = raw.get("output")
    if not out:
        raise SpecError("spec needs an output path stem")
    layout = tuple(raw["layout"]) if "layout" in raw else None
    return PlotSpec(panels=tuple(panels), output=resolve(out),
                    formats=tuple(raw.get("formats", ("png", "svg"))),
                    layout=layout, suptitle=raw.get("suptitle", ""))


# ---------------------------------------------------------------------------
# figure-family presets over a directory of sweep CSVs

def _csv(csv_dir, name):
    path = os.path.join(csv_dir, f"{name}.csv")
    if not os.path.isfile(path):
        raise SpecError(f"missing {path}; run `vdw sweep --preset {name}` "
                        f"first")
    return path


def preset_spec(family, csv_dir, out_dir):
    """PlotSpec for one shipped figure family: fig1, fig2 or fig3."""
    os.makedirs(out_dir, exist_ok=True)
    out = os.path.join(out_dir, family)
    if family == "fig1":
        panels = []
        for name, title in (("fig1a", "pair forces, bare detuning"),
                            ("fig1b", "pair forces, detuning 1e-4")):
            panels.append(PanelSpec(
                csv_paths=(_csv(csv_dir, name),), x="r_over_lambda",
                y=("F_A_rho", "F_B_rho"), xscale="log", title=title,
                lambda_markers=(1.0,), regime_shading=True))
        for name, title in (("fig1c", "long distance, bare detuning"),
                            ("fig1d", "long distance, detuning 1e-4")):
            panels.append(PanelSpec(
                csv_paths=(_csv(csv_dir, name),), x="r_over_lambda",
                y=("F_A_rho", "F_B_rho"), title=title))
        for name, title in (("fig1e", "net force, bare detuning"),
                            ("fig1f", "net force, detuning 1e-4")):
            panels.append(PanelSpec(
                csv_paths=(_csv(csv_dir, name),), x="r_over_lambda",
                y=("F_net",), xscale="log", title=title,
                lambda_markers=(1.0,), annotate_peak=True))
        return PlotSpec(panels=tuple(panels), output=out,
                        layout=(3, 2), suptitle="thermal field, T = omega_A")
    if family == "fig2":
        panels = [PanelSpec(
            csv_paths=(_csv(csv_dir, "fig2a"),), x="u_ratio",
            y=("F_A_rho", "F_B_rho"),
            title="forces vs U(omega_A)/U at R = 0.3 c/omega_A")]
        for name, frac in (("fig2b", "0"), ("fig2c", "0.25"),
                           ("fig2d", "0.5"), ("fig2e", "1")):
            panels.append(PanelSpec(
                csv_paths=(_csv(csv_dir, name),), x="omega_b_ratio",
                y=("F_A_rho", "F_B_rho"),
                title=f"vs omega_B/omega_A, U(omega_A)/U = {frac}"))
        return PlotSpec(panels=tuple(panels), output=out, layout=(5, 1),
                        suptitle="two-peak random light, U = 6e-4 J/m^3")
    if family == "fig3":
        panels = [
            PanelSpec(csv_paths=(_csv(csv_dir, "fig3a"),),
                      x="r_over_lambda", y=("F_A_rho", "F_B_rho"),
                      title="U(omega_B) = 0"),
            PanelSpec(csv_paths=(_csv(csv_dir, "fig3b"),),
                      x="r_over_lambda", y=("F_A_rho", "F_B_rho"),
                      title="U(omega_A) = 0"),
            PanelSpec(csv_paths=(_csv(csv_dir, "fig3c"),),
                      x="r_over_lambda",
                      y=("F_net_ua100", "F_net_ua050", "F_net_ua000"),
                      xscale="log", title="net force, detuning 1e-2",
                      lambda_markers=(1.0,)),
            PanelSpec(csv_paths=(_csv(csv_dir, "fig3d"),),
                      x="r_over_lambda",
                      y=("F_net_ua100", "F_net_ua050", "F_net_ua000"),
                      xscale="log", title="net force, detuning 1e-1",
                      lambda_markers=(1.0,)),
        ]
        return PlotSpec(panels=tuple(panels), output=out, layout=(2, 2),
                        suptitle="two-peak random light, long distance")
    raise SpecError(f"unknown figure family {family!r}; "
                    f"known: fig1, fig2, fig3")
