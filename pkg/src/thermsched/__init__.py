"""Thermal-aware test scheduling for core-based SoCs.

Builds test schedules whose sessions respect a peak-temperature limit:
a cheap per-session thermal characteristic guides greedy session packing,
and a steady-state resistive-network simulator validates every session
before it is accepted.
"""

from .cli import SweepRow, SweepSpec
from .floorplan import (
    EPSILON,
    AdjacencyEdge,
    AdjacencyGraph,
    CoreGeometry,
    Floorplan,
    FloorplanError,
    PowerProfile,
    PowerProfileError,
    build_adjacency,
    parse_floorplan,
    parse_power_profile,
    shared_edge_length,
)
from .scheduler import (
    CORE_ORDERINGS,
    ORDER_FILE,
    ORDER_POWER_WEIGHT_DESC,
    Schedule,
    SchedulerConfig,
    ScreeningError,
    TestSession,
    build_session,
    generate_schedule,
    schedule_to_document,
    screen_cores,
)
from .thermal_model import (
    SessionThermalModel,
    ThermalParams,
    Weights,
    build_session_model,
    equivalent_resistance,
    lateral_resistance,
    load_thermal_params,
    session_stc,
    session_tc,
    vertical_resistance,
)
from .thermal_sim import (
    RESIDUAL_RTOL,
    NetworkSolveError,
    SimulationResult,
    ThermalNetwork,
    build_network,
    simulate_session,
    solve_steady_state,
)

__version__ = "0.1.0"

__all__ = [
    "EPSILON",
    "RESIDUAL_RTOL",
    "AdjacencyEdge",
    "AdjacencyGraph",
    "CoreGeometry",
    "Floorplan",
    "FloorplanError",
    "NetworkSolveError",
    "PowerProfile",
    "PowerProfileError",
    "Schedule",
    "SchedulerConfig",
    "ScreeningError",
    "SessionThermalModel",
    "SimulationResult",
    "SweepRow",
    "SweepSpec",
    "TestSession",
    "ThermalNetwork",
    "ThermalParams",
    "Weights",
    "CORE_ORDERINGS",
    "ORDER_FILE",
    "ORDER_POWER_WEIGHT_DESC",
    "build_adjacency",
    "build_network",
    "build_session",
    "build_session_model",
    "equivalent_resistance",
    "generate_schedule",
    "lateral_resistance",
    "load_thermal_params",
    "parse_floorplan",
    "parse_power_profile",
    "schedule_to_document",
    "screen_cores",
    "session_stc",
    "session_tc",
    "shared_edge_length",
    "simulate_session",
    "solve_steady_state",
    "vertical_resistance",
]
