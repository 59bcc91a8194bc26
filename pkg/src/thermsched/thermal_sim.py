"""Full-network steady-state thermal validator.

Unlike the guiding session model, the validator keeps every core in play:
all adjacent pairs are coupled (active or not), every node has its own
vertical path to ambient, and passive cores are free nodes that warm up.
Session temperatures come from one dense symmetric positive-definite solve
of the nodal conductance system ``G dT = P``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Collection, Mapping

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .floorplan import Floorplan, PowerProfile
from .thermal_model import ThermalParams, lateral_resistance, vertical_resistance

RESIDUAL_RTOL = 1e-8
"""Required solve accuracy: inf-norm residual per unit inf-norm of injections."""


class NetworkSolveError(RuntimeError):
    """Conductance system is not positive definite or the solve missed tolerance."""


@dataclass(frozen=True)
class ThermalNetwork:
    """Nodal conductance system for one test session.

    ``conductance`` is symmetric positive definite: off-diagonals are the
    negated lateral conductances, and each diagonal adds the node's vertical
    conductance to ambient on top of its lateral total.
    """

    nodes: tuple[str, ...]
    conductance: np.ndarray   # (N, N), W/K
    injections: np.ndarray    # (N,), W
    ambient: float            # deg C

    def index(self, name: str) -> int:
        return self.nodes.index(name)


@dataclass(frozen=True)
class SimulationResult:
    """Steady-state temperatures of one solve, plus the session wall time."""

    temps: Mapping[str, float]          # deg C per core
    peak: tuple[str, float]             # hottest core and its temperature
    simulated_duration: float           # s, for effort accounting


def build_network(
    active: Collection[str],
    fp: Floorplan,
    power: PowerProfile,
    params: ThermalParams,
) -> ThermalNetwork:
    """Assemble the full conductance matrix and injection vector.

    Node order is floorplan order.  Every adjacent pair is coupled,
    including active-active pairs; injections are the test powers of the
    active cores and zero elsewhere.
    """
    active = frozenset(active)
    unknown = sorted(name for name in active if name not in fp)
    if unknown:
        raise ValueError(f"active cores not in floorplan: {', '.join(unknown)}")
    names = fp.names
    n = len(names)
    g = np.zeros((n, n))
    for a, b in fp.adjacency().pairs():
        gl = 1.0 / lateral_resistance(a, b, fp, params)
        i, j = fp.index(a), fp.index(b)
        g[i, i] += gl
        g[j, j] += gl
        g[i, j] -= gl
        g[j, i] -= gl
    injections = np.zeros(n)
    for i, name in enumerate(names):
        g[i, i] += 1.0 / vertical_resistance(name, fp, params)
        if name in active:
            injections[i] = power.power(name)
    return ThermalNetwork(
        nodes=tuple(names),
        conductance=g,
        injections=injections,
        ambient=params.t_ambient,
    )


def solve_steady_state(net: ThermalNetwork) -> SimulationResult:
    """Solve ``G dT = P`` by Cholesky factorization; temps = ambient + dT.

    Raises NetworkSolveError when the matrix is not positive definite
    (a node without a vertical path to ambient) or when the residual
    exceeds RESIDUAL_RTOL * max(1, ||P||_inf).
    """
    try:
        factor = cho_factor(net.conductance)
    except np.linalg.LinAlgError as exc:
        raise NetworkSolveError(
            "conductance matrix is not positive definite; every node needs a "
            "vertical conductance to ambient"
        ) from exc
    rise = cho_solve(factor, net.injections)
    residual = float(np.max(np.abs(net.conductance @ rise - net.injections)))
    tolerance = RESIDUAL_RTOL * max(1.0, float(np.max(np.abs(net.injections))))
    if residual > tolerance:
        raise NetworkSolveError(
            f"solve residual {residual:.3e} exceeds tolerance {tolerance:.3e}"
        )
    temps = {name: net.ambient + float(rise[i]) for i, name in enumerate(net.nodes)}
    peak_i = int(np.argmax(rise))  # ties resolve to the first node
    peak = (net.nodes[peak_i], net.ambient + float(rise[peak_i]))
    return SimulationResult(temps=temps, peak=peak, simulated_duration=0.0)


def simulate_session(
    session: Collection[str],
    fp: Floorplan,
    power: PowerProfile,
    params: ThermalParams,
) -> SimulationResult:
    """Simulate one test session on the full network.

    The session's wall duration is the longest member test (members run
    concurrently); it is recorded for simulation-effort accounting.
    """
    session = frozenset(session)
    if not session:
        raise ValueError("test session is empty")
    net = build_network(session, fp, power, params)
    result = solve_steady_state(net)
    duration = max(power.duration(name) for name in session)
    return replace(result, simulated_duration=duration)
