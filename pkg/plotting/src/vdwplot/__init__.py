"""Regenerate sweep figures from vdwlight CSV datasets.

This package consumes only the CSV files (header row, '#units' row,
data rows with a status column) written by the `vdw sweep` tool; it
never computes physics, only axis transforms and annotations.
"""

__version__ = "0.1.0"

from .csvdata import CsvDataset, DataError
from .render import render
from .specs import PanelSpec, PlotSpec, SpecError, load_spec, preset_spec

__all__ = ["CsvDataset", "DataError", "PanelSpec", "PlotSpec",
           "SpecError", "load_spec", "preset_spec", "render",
           "__version__"]
