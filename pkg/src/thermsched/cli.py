"""Command-line front end: single schedule runs and TL x STCL sweeps.

Single run (writes a JSON schedule document, or a text summary):

    thermsched --floorplan die.flp --power tests.csv --tl 145 --stcl 40

Sweep (writes one CSV row per grid point, row-major over TL then STCL):

    thermsched --floorplan die.flp --power tests.csv \\
               --sweep-tl 145:185:5 --sweep-stcl 20:100:10

Exit codes: 0 success, 1 input error, 2 screening failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, replace
from typing import Sequence

from .floorplan import Floorplan, PowerProfile, parse_floorplan, parse_power_profile
from .scheduler import (
    CORE_ORDERINGS,
    ORDER_POWER_WEIGHT_DESC,
    Schedule,
    SchedulerConfig,
    ScreeningError,
    generate_schedule,
    schedule_to_document,
)
from .thermal_model import ThermalParams, load_thermal_params

SWEEP_HEADER = "tl_C,stcl,schedule_length_s,simulation_effort_s,max_temperature_C"


@dataclass(frozen=True)
class SweepSpec:
    """Grid of (TL, STCL) points to evaluate, in row-major order over TL."""

    tl_values: tuple[float, ...]
    stcl_values: tuple[float, ...]

    def __post_init__(self):
        if not self.tl_values or not self.stcl_values:
            raise ValueError("sweep grid needs at least one TL and one STCL value")


@dataclass(frozen=True)
class SweepRow:
    """One evaluated sweep grid point, matching SWEEP_HEADER column for column."""

    tl: float
    stcl: float
    schedule_length_s: float
    simulation_effort_s: float
    max_temperature_c: float

    def csv_line(self) -> str:
        return (
            f"{self.tl:g},{self.stcl:g},{self.schedule_length_s:g},"
            f"{self.simulation_effort_s:g},{self.max_temperature_c:.4f}"
        )


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # report usage problems through the normal error path (exit code 1)
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(
        prog="thermsched",
        description="Generate thermal-safe test schedules for a core-based SoC.",
    )
    p.add_argument("--floorplan", required=True, metavar="PATH",
                   help="floorplan file: 'name width height left_x bottom_y' records, meters")
    p.add_argument("--power", required=True, metavar="PATH",
                   help="power profile CSV: core_id,power_watts,duration_s")
    p.add_argument("--tl", type=float, metavar="DEG_C",
                   help="max allowable core temperature (single run)")
    p.add_argument("--stcl", type=float, metavar="KW",
                   help="session thermal characteristic limit (single run)")
    p.add_argument("--sweep-tl", metavar="RANGE",
                   help="TL grid: start:stop:step (inclusive) or comma list")
    p.add_argument("--sweep-stcl", metavar="RANGE",
                   help="STCL grid: start:stop:step (inclusive) or comma list")
    p.add_argument("--params", metavar="PATH",
                   help="thermal parameter file (flat 'key = value')")
    p.add_argument("--ambient", type=float, metavar="DEG_C",
                   help="override ambient temperature")
    p.add_argument("--k-silicon", type=float, metavar="W_PER_MK",
                   help="override silicon thermal conductivity")
    p.add_argument("--die-thickness", type=float, metavar="M",
                   help="override die thickness")
    p.add_argument("--r-vertical", type=float, metavar="KM2_PER_W",
                   help="override area-normalized vertical resistance")
    p.add_argument("--weight-factor", type=float, default=1.1, metavar="F",
                   help="weight multiplier applied to violating cores (default 1.1)")
    p.add_argument("--core-order", choices=CORE_ORDERINGS,
                   default=ORDER_POWER_WEIGHT_DESC,
                   help="packing order policy (default: power*weight descending)")
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    p.add_argument("--format", choices=("json", "text"), default="json",
                   help="single-run output format (default json)")
    return p


def _parse_axis(text: str) -> list[float]:
    """Parse a sweep axis: 'start:stop:step' (inclusive) or a comma list."""
    try:
        if ":" in text:
            parts = text.split(":")
            if len(parts) != 3:
                raise _UsageError(f"bad range {text!r}: expected start:stop:step")
            start, stop, step = (float(p) for p in parts)
            if step <= 0:
                raise _UsageError(f"bad range {text!r}: step must be positive")
            if stop < start:
                raise _UsageError(f"bad range {text!r}: stop is below start")
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            return [start + k * step for k in range(count)]
        values = [float(p) for p in text.split(",") if p.strip()]
        if not values:
            raise _UsageError(f"empty value list {text!r}")
        return values
    except ValueError:
        raise _UsageError(f"non-numeric value in {text!r}") from None


def _load_inputs(args) -> tuple[Floorplan, PowerProfile, ThermalParams]:
    with open(args.floorplan, encoding="utf-8") as fh:
        fp = parse_floorplan(fh)
    with open(args.power, encoding="utf-8") as fh:
        power = parse_power_profile(fh, fp)
    if args.params:
        with open(args.params, encoding="utf-8") as fh:
            params = load_thermal_params(fh)
    else:
        params = ThermalParams()
    overrides = {
        key: value
        for key, value in (
            ("t_ambient", args.ambient),
            ("k_silicon", args.k_silicon),
            ("die_thickness", args.die_thickness),
            ("r_vertical_per_area", args.r_vertical),
        )
        if value is not None
    }
    if overrides:
        params = replace(params, **overrides)
    return fp, power, params


def _write(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _format_text(schedule: Schedule, config: SchedulerConfig) -> str:
    lines = []
    hottest = max(schedule.stage1_report.values())
    lines.append(
        f"screened {len(schedule.stage1_report)} cores; hottest alone "
        f"{hottest:.2f} C (limit {config.tl:g} C)"
    )
    for k, s in enumerate(schedule.sessions, start=1):
        peak_core, peak_temp = s.result.peak
        lines.append(
            f"session {k}: [{' '.join(sorted(s.cores))}] duration {s.duration:g} s "
            f"peak {peak_temp:.2f} C ({peak_core})"
        )
    lines.append(
        f"total length {schedule.total_length:g} s; simulation effort "
        f"{schedule.simulation_effort:g} s; max temperature "
        f"{schedule.max_temperature:.2f} C"
    )
    return "\n".join(lines) + "\n"


def run_single(args) -> int:
    fp, power, params = _load_inputs(args)
    config = SchedulerConfig(
        tl=args.tl,
        stcl=args.stcl,
        weight_factor=args.weight_factor,
        core_order=args.core_order,
    )
    schedule = generate_schedule(fp, power, params, config)
    if args.format == "json":
        payload = json.dumps(schedule_to_document(schedule, config, params), indent=2)
        payload += "\n"
    else:
        payload = _format_text(schedule, config)
    _write(payload, args.out)
    return 0


def run_sweep(args) -> int:
    fp, power, params = _load_inputs(args)
    spec = SweepSpec(
        tl_values=tuple(_parse_axis(args.sweep_tl)),
        stcl_values=tuple(_parse_axis(args.sweep_stcl)),
    )
    lines = [SWEEP_HEADER]
    emitted = 0
    for tl in spec.tl_values:
        try:
            for stcl in spec.stcl_values:
                config = SchedulerConfig(
                    tl=tl,
                    stcl=stcl,
                    weight_factor=args.weight_factor,
                    core_order=args.core_order,
                )
                schedule = generate_schedule(fp, power, params, config)
                row = SweepRow(
                    tl=tl,
                    stcl=stcl,
                    schedule_length_s=schedule.total_length,
                    simulation_effort_s=schedule.simulation_effort,
                    max_temperature_c=schedule.max_temperature,
                )
                lines.append(row.csv_line())
                emitted += 1
        except ScreeningError as exc:
            # this TL cannot host any schedule; its grid rows are skipped
            print(f"skipping TL={tl:g}: {exc}", file=sys.stderr)
    _write("\n".join(lines) + "\n", args.out)
    return 0 if emitted else 2


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        sweep_mode = args.sweep_tl is not None or args.sweep_stcl is not None
        if sweep_mode:
            if args.tl is not None or args.stcl is not None:
                raise _UsageError(
                    "use either --tl/--stcl or --sweep-tl/--sweep-stcl, not both"
                )
            if args.sweep_tl is None or args.sweep_stcl is None:
                raise _UsageError("sweep mode needs both --sweep-tl and --sweep-stcl")
            return run_sweep(args)
        if args.tl is None or args.stcl is None:
            raise _UsageError("single-run mode needs both --tl and --stcl")
        return run_single(args)
    except ScreeningError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (_UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
