"""Reader for vdw sweep CSV files.

Layout contract: first line is the comma-separated header, second line
is '#units,<unit>,...' naming the unit of every column after the first,
then one row per sweep point.  Rows whose 'status' cell is not 'ok'
are dropped (their value cells are empty by construction).
"""

from dataclasses import dataclass, field

import numpy as np


class DataError(ValueError):
    """Malformed or unusable CSV input."""


@dataclass
class CsvDataset:
    path: str
    columns: list
    units: dict
    data: dict = field(repr=False)
    n_dropped: int = 0

    def __getitem__(self, column):
        if column not in self.data:
            raise DataError(
                f"{self.path}: no column {column!r}; available: "
                f"{', '.join(self.columns)}")
        return self.data[column]

    @property
    def sweep_column(self):
        return self.columns[0]

    def unit_of(self, column):
        return self.units.get(column, "1")


def read_csv(path):
    with open(path, encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh]
    if not lines or not lines[0].strip():
        raise DataError(f"{path}: empty file")
    header = lines[0].split(",")
    if len(lines) < 2 or not lines[1].startswith("#units"):
        raise DataError(f"{path}: missing '#units' row")
    unit_cells = lines[1].split(",")[1:]
    units = dict(zip(header[1:], unit_cells))
    body = [line for line in lines[2:] if line.strip()]
    if not body:
        raise DataError(f"{path}: no data rows")

    status_idx = header.index("status") if "status" in header else None
    numeric = [c for c in header if c not in ("regime", "status")]
    raw = {c: [] for c in header}
    n_dropped = 0
    for line in body:
        cells = line.split(",")
        if len(cells) != len(header):
            raise DataError(f"{path}: ragged row {line!r}")
        if status_idx is not None and cells[status_idx] != "ok":
            n_dropped += 1
            continue
        for col, cell in zip(header, cells):
            raw[col].append(cell)
    if not raw[header[0]]:
        raise DataError(f"{path}: every row is flagged failed")

    data = {}
    for col in header:
        if col in numeric:
            data[col] = np.array([float(v) for v in raw[col]])
        else:
            data[col] = np.array(raw[col])
    return CsvDataset(path=str(path), columns=header, units=units,
                      data=data, n_dropped=n_dropped)
