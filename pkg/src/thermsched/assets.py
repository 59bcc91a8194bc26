"""Bundled demo inputs.

All bundled data is synthetic: hand-built so demos, tests, and sweeps
finish in seconds.  None of it describes a real chip.

* ``demo15``: a 15-core, 8 mm x 8 mm die with mixed core sizes and test
  powers spanning roughly a 3x range of power density.  Sized so that
  temperature limits in the 145-185 C band and STC limits in the 20-100
  band are the interesting region.
* ``density_contrast``: two three-core groups drawing identical per-core
  power; the 'a' cores have a quarter of the area (4x the power density)
  of the 'b' cores.  Testing group 'a' concurrently runs far hotter than
  testing group 'b', although both groups look identical to a chip-level
  power budget.
"""

from __future__ import annotations

from pathlib import Path

from .floorplan import Floorplan, PowerProfile, parse_floorplan, parse_power_profile

_DATA = Path(__file__).resolve().parent / "data"


def demo15_floorplan_path() -> Path:
    return _DATA / "demo15.flp"


def demo15_power_path() -> Path:
    return _DATA / "demo15.csv"


def density_contrast_floorplan_path() -> Path:
    return _DATA / "density_contrast.flp"


def density_contrast_power_path() -> Path:
    return _DATA / "density_contrast.csv"


def _load(flp: Path, csv: Path) -> tuple[Floorplan, PowerProfile]:
    fp = parse_floorplan(flp.read_text(encoding="utf-8"))
    power = parse_power_profile(csv.read_text(encoding="utf-8"), fp)
    return fp, power


def load_demo15() -> tuple[Floorplan, PowerProfile]:
    """The bundled 15-core demo floorplan and its power profile."""
    return _load(demo15_floorplan_path(), demo15_power_path())


def load_density_contrast() -> tuple[Floorplan, PowerProfile]:
    """The bundled power-density contrast demo (groups 'a' and 'b')."""
    return _load(density_contrast_floorplan_path(), density_contrast_power_path())
