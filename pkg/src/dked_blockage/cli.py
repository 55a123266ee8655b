"""Command-line front end.

Exit codes: 0 success, 2 validation error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from .antenna import AntennaPattern
from .config import ConfigError, ScenarioConfig, format_trace, parse_config, read_trace_csv
from .geometry import GeometryError
from .models import Model
from .svg import line_chart
from .walk import nine_measurement_presets, simulate_walk

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3

log = logging.getLogger("dked_blockage")


class CommandError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror or exc}", EXIT_IO) from None


def _write_text(path: Path | str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CommandError(f"cannot write {path}: {exc.strerror or exc}", EXIT_IO) from None


def _load_config(path: str) -> ScenarioConfig:
    try:
        return parse_config(_read_text(path))
    except ConfigError as exc:
        raise CommandError(f"{path}: {exc}", EXIT_VALIDATION) from None


def cmd_simulate(config_path: str, out_path: str, svg_path: Optional[str] = None) -> int:
    cfg = _load_config(config_path)
    try:
        trace = simulate_walk(cfg.to_scenario())
    except (ConfigError, GeometryError, ValueError) as exc:
        raise CommandError(str(exc), EXIT_VALIDATION) from None
    _write_text(out_path, format_trace(trace))
    if svg_path:
        title = f"{cfg.model.value}, d = {cfg.blocker.distance_from_tx_m:g} m"
        _write_text(svg_path, line_chart(trace.time_s.tolist(), trace.rel_power_db.tolist(), title))
    log.info("wrote %d samples to %s", len(trace), out_path)
    return EXIT_OK


def cmd_loss(config_path: str, offset_m: float) -> str:
    cfg = _load_config(config_path)
    if not math.isfinite(offset_m):
        raise CommandError("offset must be finite", EXIT_VALIDATION)
    try:
        res = cfg.to_scenario().loss_at(offset_m)
    except (ConfigError, GeometryError, ValueError) as exc:
        raise CommandError(str(exc), EXIT_VALIDATION) from None
    return f"loss_db={res.loss_db:.4f}"


def cmd_preset_nine(outdir: str, model: str) -> int:
    try:
        model = Model(model)
    except ValueError:
        raise CommandError(f"unknown model {model!r}", EXIT_VALIDATION) from None
    out = Path(outdir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise CommandError(f"cannot create {outdir}: {exc.strerror or exc}", EXIT_IO) from None
    for k, scenario in enumerate(nine_measurement_presets(model), start=1):
        _write_text(out / f"meas_{k}.json", ScenarioConfig.from_scenario(scenario).dumps())
        _write_text(out / f"meas_{k}.csv", format_trace(simulate_walk(scenario)))
    return EXIT_OK


def cmd_pattern(hpbw_deg: float, step_deg: float = 1.0) -> list[str]:
    if not (math.isfinite(step_deg) and 0 < step_deg <= 180):
        raise CommandError("step must be in (0, 180]", EXIT_VALIDATION)
    try:
        pattern = AntennaPattern.from_hpbw_deg(hpbw_deg)
    except ValueError as exc:
        raise CommandError(str(exc), EXIT_VALIDATION) from None
    n = int(math.floor(180.0 / step_deg + 1e-9))
    rows = ["theta_deg,gain"]
    for i in range(n + 1):
        theta = -90.0 + i * step_deg
        rows.append(f"{theta:.6f},{pattern.gain(math.radians(theta)):.9f}")
    return rows


def cmd_compare(csv_a: str, csv_b: str) -> str:
    try:
        a = read_trace_csv(_read_text(csv_a))
        b = read_trace_csv(_read_text(csv_b))
    except ConfigError as exc:
        raise CommandError(str(exc), EXIT_VALIDATION) from None
    ta, tb = a["time_s"], b["time_s"]
    if len(ta) != len(tb) or any(abs(x - y) > 1e-9 for x, y in zip(ta, tb)):
        raise CommandError("time grids differ; traces are not comparable", EXIT_VALIDATION)
    if not ta:
        raise CommandError("traces are empty", EXIT_VALIDATION)
    diffs = [abs(x - y) for x, y in zip(a["loss_db"], b["loss_db"])]
    return f"max_abs_diff_db={max(diffs):.6f}\nmean_abs_diff_db={sum(diffs) / len(diffs):.6f}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dked", description="DKED human-blockage simulator")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="simulate a walk and write a CSV trace")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--svg")

    p = sub.add_parser("loss", help="static loss at one lateral offset")
    p.add_argument("--config", required=True)
    p.add_argument("--offset", type=float, required=True)

    p = sub.add_parser("preset-nine", help="write the nine walk presets and their traces")
    p.add_argument("--outdir", required=True)
    p.add_argument("--model", default=Model.MODIFIED_DIRECTIONAL.value, choices=[m.value for m in Model])

    p = sub.add_parser("pattern", help="tabulate the normalized azimuth gain")
    p.add_argument("--hpbw-deg", type=float, required=True)
    p.add_argument("--step-deg", type=float, default=1.0)

    p = sub.add_parser("compare", help="max/mean absolute loss difference between two traces")
    p.add_argument("a")
    p.add_argument("b")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        if args.command == "simulate":
            return cmd_simulate(args.config, args.out, args.svg)
        if args.command == "loss":
            print(cmd_loss(args.config, args.offset))
        elif args.command == "preset-nine":
            return cmd_preset_nine(args.outdir, args.model)
        elif args.command == "pattern":
            print("\n".join(cmd_pattern(args.hpbw_deg, args.step_deg)))
        elif args.command == "compare":
            print(cmd_compare(args.a, args.b))
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
