"""Shared test helpers: tiny floorplan builders, random generators, and the
grounded-network nodal oracle used to cross-check equivalent resistances."""

from __future__ import annotations

import numpy as np

from thermsched.floorplan import CoreGeometry, Floorplan, PowerProfile, build_adjacency
from thermsched.thermal_model import ThermalParams


def strip_floorplan(n: int = 3, size: float = 1.0) -> Floorplan:
    """Horizontal 1 x n strip of size x size squares named s1..sn."""
    return Floorplan(
        [CoreGeometry(f"s{i + 1}", size, size, i * size, 0.0) for i in range(n)]
    )


def uniform_profile(fp: Floorplan, power: float = 10.0, duration: float = 1.0) -> PowerProfile:
    return PowerProfile({name: (power, duration) for name in fp.names}, fp)


def random_floorplan(rng, n_cores: int, die_w: float = 0.008, die_h: float = 0.008) -> Floorplan:
    """Random guillotine tiling of the die: always valid, adjacency-rich."""
    rects = [(0.0, 0.0, die_w, die_h)]
    while len(rects) < n_cores:
        k = int(np.argmax([w * h for (_, _, w, h) in rects]))
        x, y, w, h = rects.pop(k)
        frac = rng.uniform(0.35, 0.65)
        if w >= h:
            cut = x + frac * w
            rects.append((x, y, cut - x, h))
            rects.append((cut, y, x + w - cut, h))
        else:
            cut = y + frac * h
            rects.append((x, y, w, cut - y))
            rects.append((x, cut, w, y + h - cut))
    return Floorplan(
        [CoreGeometry(f"r{i:02d}", w, h, x, y) for i, (x, y, w, h) in enumerate(rects)]
    )


def random_profile(rng, fp: Floorplan, p_range=(0.3, 3.0), d_range=(0.5, 2.0)) -> PowerProfile:
    return PowerProfile(
        {
            name: (rng.uniform(*p_range), rng.uniform(*d_range))
            for name in fp.names
        },
        fp,
    )


def random_session(rng, fp: Floorplan) -> frozenset[str]:
    """Non-empty random subset of the floorplan's cores."""
    members = [name for name in fp.names if rng.random() < 0.5]
    if not members:
        members = [fp.names[int(rng.integers(len(fp)))]]
    return frozenset(members)


def grounded_rise_oracle(core: str, session, fp: Floorplan, params: ThermalParams) -> float:
    """Independent equivalent-resistance oracle.

    Assembles the session network as a full nodal system: passive cores are
    pinned at ambient through Dirichlet rows, lateral paths between active
    cores are deleted, conductances are rederived from raw geometry.  Then
    1 W is injected at ``core`` and the system is solved with a generic
    dense solver; the temperature rise at ``core`` is its equivalent
    resistance.
    """
    adj = build_adjacency(fp)
    names = fp.names
    index = {name: i for i, name in enumerate(names)}
    a = np.zeros((len(names), len(names)))
    b = np.zeros(len(names))
    for i, name in enumerate(names):
        if name not in session:
            a[i, i] = 1.0  # rise pinned to zero: core sits at ambient
            continue
        a[i, i] = fp.core(name).area / params.r_vertical_per_area
        for other in adj.neighbors(name):
            if other in session:
                continue  # active-active paths removed
            g = (
                params.k_silicon
                * params.die_thickness
                * adj.shared_edge(name, other)
                / adj.center_distance(name, other)
            )
            a[i, i] += g
            a[i, index[other]] -= g
        if name == core:
            b[i] = 1.0
    rise = np.linalg.solve(a, b)
    return float(rise[index[core]])
