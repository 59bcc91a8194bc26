"""Per-session thermal model: escape-path resistances, core TC, session STC.

An active core sheds heat two ways: vertically, through the package stack
above it to ambient, and laterally, through the die into adjacent cores.
Within a test session only the lateral paths toward PASSIVE cores are
usable; a passive core stays near ambient and acts as a heat sink, while a
path between two active cores carries little heat because both ends run
hot.  The parallel combination of the usable paths is the core's
equivalent thermal resistance for that session, and from it come the two
scalars that guide session packing:

* ``TC(i)  = P(i) * R_eq(i)``             predicted temperature rise, K
* ``STC    = max_i  TC(i) * P(i) * W(i)`` session thermal characteristic, K*W

where ``W(i)`` are packing weights, initially 1, that the scheduler raises
for cores caught exceeding the temperature limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import IO, Collection, Iterable, Mapping

from .floorplan import Floorplan, PowerProfile


@dataclass(frozen=True)
class ThermalParams:
    """Physical constants of the die and its vertical heat path.

    ``r_vertical_per_area`` lumps everything above the die (spreader, sink,
    convection) into a single area-normalized resistance; it is the main
    calibration knob for moving simulated temperatures into the regime of
    interest.
    """

    k_silicon: float = 100.0            # thermal conductivity, W/(m*K)
    die_thickness: float = 0.5e-3       # m
    r_vertical_per_area: float = 5e-4   # K*m^2/W
    t_ambient: float = 45.0             # deg C

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{f.name} must be strictly positive and finite")


_PARAM_KEYS = tuple(f.name for f in fields(ThermalParams))


def load_thermal_params(source: str | IO[str]) -> ThermalParams:
    """Read a flat ``key = value`` parameter file; unset keys keep defaults.

    Recognized keys: k_silicon, die_thickness, r_vertical_per_area,
    t_ambient.  '#' comments and blank lines are ignored.
    """
    text = source.read() if hasattr(source, "read") else source
    values: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise ValueError(f"line {lineno}: expected 'key = value', got {raw!r}")
        if key not in _PARAM_KEYS:
            raise ValueError(f"line {lineno}: unknown parameter {key!r}")
        if key in values:
            raise ValueError(f"line {lineno}: duplicate parameter {key!r}")
        try:
            values[key] = float(value.strip())
        except ValueError:
            raise ValueError(f"line {lineno}: non-numeric value for {key!r}") from None
    return ThermalParams(**values)


class Weights:
    """Per-core packing weights; start at 1.0 and only ever grow."""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[str, float] | None = None):
        values = dict(values) if values else {}
        for name, w in values.items():
            if not (math.isfinite(w) and w >= 1.0):
                raise ValueError(f"weight for {name!r} is {w}; weights never drop below 1")
        self._values = values

    def of(self, name: str) -> float:
        return self._values.get(name, 1.0)

    def bumped(self, names: Iterable[str], factor: float) -> "Weights":
        """New Weights with the given cores' weights multiplied by ``factor``."""
        if not (math.isfinite(factor) and factor >= 1.0):
            raise ValueError(f"bump factor {factor} must be finite; weights never shrink")
        values = dict(self._values)
        for name in names:
            values[name] = values.get(name, 1.0) * factor
        return Weights(values)

    def as_dict(self) -> dict[str, float]:
        return dict(self._values)

    def __repr__(self) -> str:
        return f"Weights({self._values!r})"


def lateral_resistance(a: str, b: str, fp: Floorplan, params: ThermalParams) -> float:
    """In-die conduction resistance between two adjacent cores, K/W.

    1-D approximation: center distance over (conductivity * die thickness *
    shared edge length).  Symmetric in the pair; raises ValueError for
    non-adjacent cores.
    """
    adj = fp.adjacency()
    return adj.center_distance(a, b) / (
        params.k_silicon * params.die_thickness * adj.shared_edge(a, b)
    )


def vertical_resistance(name: str, fp: Floorplan, params: ThermalParams) -> float:
    """Resistance of the die-to-ambient path above one core, K/W."""
    return params.r_vertical_per_area / fp.core(name).area


def equivalent_resistance(
    name: str, session: Collection[str], fp: Floorplan, params: ThermalParams
) -> float:
    """Parallel combination of a core's usable escape paths within a session.

    Usable paths are the vertical one plus the laterals toward neighbors
    that are passive in the session (held at ambient); laterals toward
    other active cores are dropped.
    """
    if name not in session:
        raise ValueError(f"core {name!r} is not in the session")
    g = 1.0 / vertical_resistance(name, fp, params)
    for neighbor in fp.adjacency().neighbors(name):
        if neighbor in session:
            continue
        g += 1.0 / lateral_resistance(name, neighbor, fp, params)
    return 1.0 / g


def session_tc(
    name: str,
    session: Collection[str],
    power: PowerProfile,
    fp: Floorplan,
    params: ThermalParams,
) -> float:
    """Core thermal characteristic: P(i) * R_eq(i), in kelvin."""
    return power.power(name) * equivalent_resistance(name, session, fp, params)


def session_stc(
    session: Collection[str],
    power: PowerProfile,
    weights: Weights | None,
    fp: Floorplan,
    params: ThermalParams,
) -> float:
    """Session thermal characteristic: max over members of TC * P * W.

    The empty session has STC 0.
    """
    if weights is None:
        weights = Weights()
    stc = 0.0
    for name in session:
        tc = session_tc(name, session, power, fp, params)
        stc = max(stc, tc * power.power(name) * weights.of(name))
    return stc


@dataclass(frozen=True)
class SessionThermalModel:
    """Equivalent resistances and guiding scalars for one candidate session."""

    session: frozenset[str]
    r_eq: Mapping[str, float]
    tc: Mapping[str, float]
    stc: float


def build_session_model(
    session: Collection[str],
    power: PowerProfile,
    weights: Weights | None,
    fp: Floorplan,
    params: ThermalParams,
) -> SessionThermalModel:
    """Evaluate R_eq, TC for every member and the session STC in one pass."""
    if weights is None:
        weights = Weights()
    members = frozenset(session)
    r_eq: dict[str, float] = {}
    tc: dict[str, float] = {}
    stc = 0.0
    for name in sorted(members, key=fp.index):
        r = equivalent_resistance(name, members, fp, params)
        r_eq[name] = r
        tc[name] = power.power(name) * r
        stc = max(stc, tc[name] * power.power(name) * weights.of(name))
    return SessionThermalModel(session=members, r_eq=r_eq, tc=tc, stc=stc)
