"""Greedy thermal-safe schedule generation with feedback weights.

Two stages:

1. Screening: every core is simulated alone; its steady peak is its BCMT
   (baseline single-core max temperature).  A BCMT at or above the limit TL
   makes scheduling impossible -- adding concurrent tests only raises
   temperatures -- so screening fails with a diagnostic naming the offenders
   and the smallest TL that would pass.
2. Session packing: cores are packed greedily into a session while the
   session thermal characteristic stays within STCL, then the session is
   validated by full simulation.  Members whose simulated peak reaches TL
   get their weight multiplied (default 1.1) and the session is discarded
   and rebuilt from the remaining pool, which steers repeat offenders
   toward emptier sessions.  All simulated session time, discarded sessions
   included, counts as simulation effort; screening time does not.

The first core entering a session is exempt from the STCL test: screening
already proved every single-core session safe, and without the exemption a
core whose singleton STC exceeds STCL could never be scheduled at all.
The exemption also guarantees termination, since weights grow until every
repeat offender is forced into a singleton session.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Collection, Mapping

from .floorplan import Floorplan, PowerProfile
from .thermal_model import ThermalParams, Weights, session_stc
from .thermal_sim import RESIDUAL_RTOL, SimulationResult, simulate_session

ORDER_POWER_WEIGHT_DESC = "power_weight_desc"
ORDER_FILE = "file"
CORE_ORDERINGS = (ORDER_POWER_WEIGHT_DESC, ORDER_FILE)


@dataclass(frozen=True)
class SchedulerConfig:
    """Limits and policy knobs for schedule generation."""

    tl: float                  # max allowable core temperature, deg C
    stcl: float                # session thermal characteristic limit, K*W
    weight_factor: float = 1.1
    core_order: str = ORDER_POWER_WEIGHT_DESC

    def __post_init__(self):
        if not math.isfinite(self.tl):
            raise ValueError(f"tl must be finite, got {self.tl}")
        # an unbounded STCL would disable the weight feedback entirely:
        # weights steer packing only through the STC <= STCL test
        if not (math.isfinite(self.stcl) and self.stcl > 0):
            raise ValueError(f"stcl must be positive and finite, got {self.stcl}")
        if not self.weight_factor > 1:
            raise ValueError(f"weight_factor must exceed 1, got {self.weight_factor}")
        if self.core_order not in CORE_ORDERINGS:
            raise ValueError(
                f"unknown core order {self.core_order!r}; choose from {CORE_ORDERINGS}"
            )


class ScreeningError(RuntimeError):
    """One or more cores exceed the temperature limit even when tested alone."""

    def __init__(self, violations: list[tuple[str, float]], suggested_tl: float):
        self.violations = list(violations)
        self.suggested_tl = suggested_tl
        listing = ", ".join(f"{name}: {temp:.2f} C" for name, temp in self.violations)
        super().__init__(
            f"single-core screening failed for {len(self.violations)} core(s) "
            f"({listing}); raise the temperature limit to at least "
            f"{suggested_tl:.2f} C or lower the offending cores' test power"
        )


@dataclass(frozen=True)
class TestSession:
    """One validated set of concurrently tested cores."""

    cores: frozenset[str]
    duration: float
    result: SimulationResult


@dataclass(frozen=True)
class Schedule:
    """Sequential list of thermal-safe sessions covering every core once."""

    sessions: tuple[TestSession, ...]
    total_length: float        # s, sum of session durations
    simulation_effort: float   # s, all simulated session time incl. discards
    stage1_report: Mapping[str, float]  # core -> BCMT, deg C

    @property
    def max_temperature(self) -> float:
        """Peak simulated temperature over all sessions in the schedule."""
        return max(s.result.peak[1] for s in self.sessions)


def screen_cores(
    fp: Floorplan, power: PowerProfile, params: ThermalParams, tl: float
) -> dict[str, float]:
    """Simulate every core alone and return its BCMT.

    Raises ScreeningError listing every core whose BCMT reaches ``tl``,
    together with the smallest limit that would pass (one solver tolerance
    above the hottest BCMT).
    """
    report = {
        name: simulate_session({name}, fp, power, params).peak[1]
        for name in fp.names
    }
    violations = [(name, temp) for name, temp in report.items() if temp >= tl]
    if violations:
        worst = max(temp for _, temp in violations)
        suggested = worst + RESIDUAL_RTOL * max(1.0, abs(worst))
        raise ScreeningError(violations, suggested)
    return report


def _ordered(
    cores: Collection[str],
    power: PowerProfile,
    weights: Weights,
    fp: Floorplan,
    policy: str,
) -> list[str]:
    if policy == ORDER_FILE:
        return sorted(cores, key=fp.index)
    # hardest cores first; rising weights push repeat offenders to the front
    return sorted(cores, key=lambda name: (-power.power(name) * weights.of(name), name))


def build_session(
    available: Collection[str],
    weights: Weights,
    stcl: float,
    fp: Floorplan,
    power: PowerProfile,
    params: ThermalParams,
    order: str = ORDER_POWER_WEIGHT_DESC,
) -> set[str]:
    """Greedily grow one session from the available cores.

    Cores are tried in policy order; each is kept only if the enlarged
    session's STC stays within ``stcl`` (every member's R_eq changes when a
    core joins, so the STC is recomputed on the enlarged set).  The first
    core is always admitted -- see the module docstring.
    """
    if not available:
        raise ValueError("no cores available to build a session from")
    session: set[str] = set()
    for name in _ordered(available, power, weights, fp, order):
        if not session:
            session.add(name)
            continue
        candidate = session | {name}
        if session_stc(candidate, power, weights, fp, params) <= stcl:
            session = candidate
    return session


def generate_schedule(
    fp: Floorplan,
    power: PowerProfile,
    params: ThermalParams,
    config: SchedulerConfig,
) -> Schedule:
    """Screen, then pack and validate sessions until every core is scheduled.

    Deterministic for identical inputs.  Raises ScreeningError when some
    core is unsafe even alone; after a successful screen the loop always
    terminates (see module docstring).
    """
    if not config.tl > params.t_ambient:
        raise ValueError(
            f"temperature limit {config.tl} C must exceed ambient {params.t_ambient} C"
        )
    stage1 = screen_cores(fp, power, params, config.tl)
    remaining = set(fp.names)
    weights = Weights()
    sessions: list[TestSession] = []
    effort = 0.0
    while remaining:
        members = build_session(
            remaining, weights, config.stcl, fp, power, params, order=config.core_order
        )
        result = simulate_session(members, fp, power, params)
        effort += result.simulated_duration
        violators = [
            name for name in sorted(members) if result.temps[name] >= config.tl
        ]
        if violators:
            # session discarded; its simulated time still counts as effort
            weights = weights.bumped(violators, config.weight_factor)
            continue
        sessions.append(
            TestSession(frozenset(members), result.simulated_duration, result)
        )
        remaining -= members
    total_length = sum(s.duration for s in sessions)
    return Schedule(
        sessions=tuple(sessions),
        total_length=total_length,
        simulation_effort=effort,
        stage1_report=dict(stage1),
    )


def schedule_to_document(
    schedule: Schedule, config: SchedulerConfig, params: ThermalParams
) -> dict:
    """JSON-ready view of a schedule, with config and params echoed."""
    return {
        "config": {
            "tl_c": config.tl,
            "stcl": config.stcl,
            "weight_factor": config.weight_factor,
            "core_order": config.core_order,
        },
        "thermal_params": {
            "k_silicon": params.k_silicon,
            "die_thickness": params.die_thickness,
            "r_vertical_per_area": params.r_vertical_per_area,
            "t_ambient": params.t_ambient,
        },
        "stage1_bcmt_c": dict(schedule.stage1_report),
        "sessions": [
            {
                "cores": sorted(s.cores),
                "duration_s": s.duration,
                "temps_c": dict(s.result.temps),
                "peak": {"core": s.result.peak[0], "temperature_c": s.result.peak[1]},
            }
            for s in schedule.sessions
        ],
        "total_length_s": schedule.total_length,
        "simulation_effort_s": schedule.simulation_effort,
        "max_temperature_c": schedule.max_temperature,
    }
