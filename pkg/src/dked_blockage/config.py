"""JSON scenario configuration and CSV trace files.

Parsing is strict: unknown keys, non-finite numbers and out-of-range values
are rejected with the dotted path of the offending field.
"""
from __future__ import annotations

import io
import json
import math
import re
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .antenna import DEFAULT_HPBW_DEG, AntennaPattern, solve_pattern_coefficient
from .geometry import BODY_DEPTH_M, GeometryError, HeightSpan, LinkGeometry, ScreenBlocker
from .models import Model
from .walk import SAMPLE_INTERVAL_S, WALK_SPAN_M, WALK_SPEED_MPS, ShadowTrace, WalkScenario

TRACE_HEADER = "time_s,offset_m,loss_db,rel_power_db"

_UNION_TAG = re.compile(r"^(function-after\[|literal\[|HeightConfig$)")


class ConfigError(ValueError):
    """Invalid scenario configuration."""


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False, frozen=True)


class AntennaConfig(_Strict):
    kind: Literal["sinc_cos", "isotropic"] = "sinc_cos"
    hpbw_az_deg: Optional[float] = Field(default=DEFAULT_HPBW_DEG, gt=0, lt=180)

    @model_validator(mode="after")
    def _hpbw_required(self):
        if self.kind == "sinc_cos" and self.hpbw_az_deg is None:
            raise ValueError("hpbw_az_deg is required for a sinc_cos antenna")
        if self.kind == "sinc_cos":
            solve_pattern_coefficient(math.radians(self.hpbw_az_deg))
        return self

    def to_pattern(self) -> AntennaPattern:
        if self.kind == "isotropic":
            return AntennaPattern.isotropic()
        return AntennaPattern.from_hpbw_deg(self.hpbw_az_deg)


class HeightConfig(_Strict):
    bottom_m: float = 0.0
    top_m: float = 1.8

    @model_validator(mode="after")
    def _ordered(self):
        if self.top_m <= self.bottom_m:
            raise ValueError("top_m must be greater than bottom_m")
        return self


class BlockerConfig(_Strict):
    width_m: float = Field(default=BODY_DEPTH_M, gt=0)
    height: Union[Literal["infinite"], HeightConfig] = "infinite"
    distance_from_tx_m: float = Field(default=2.5, gt=0)


class WalkConfig(_Strict):
    speed_mps: float = Field(default=WALK_SPEED_MPS, gt=0)
    start_offset_m: float = WALK_SPAN_M[0]
    end_offset_m: float = WALK_SPAN_M[1]
    sample_interval_s: float = Field(default=SAMPLE_INTERVAL_S, gt=0)

    @model_validator(mode="after")
    def _span(self):
        if not self.start_offset_m < self.end_offset_m:
            raise ValueError("start_offset_m must be less than end_offset_m")
        return self


class ScenarioConfig(_Strict):
    carrier_hz: float = Field(default=7.35e10, gt=0)
    separation_m: float = Field(default=5.0, gt=0)
    tx_height_m: float = Field(default=1.4, ge=0)
    rx_height_m: float = Field(default=1.4, ge=0)
    tx_antenna: AntennaConfig = AntennaConfig()
    rx_antenna: AntennaConfig = AntennaConfig()
    model: Model = Model.MODIFIED_DIRECTIONAL
    blocker: BlockerConfig = BlockerConfig()
    walk: WalkConfig = WalkConfig()

    @model_validator(mode="after")
    def _consistent(self):
        if self.blocker.distance_from_tx_m >= self.separation_m:
            raise ValueError("blocker.distance_from_tx_m must be less than separation_m")
        if self.model is Model.METIS_4EDGE:
            if self.blocker.height == "infinite":
                raise ValueError("metis_4edge needs a finite blocker.height")
            if self.tx_height_m != self.rx_height_m:
                raise ValueError("metis_4edge needs tx_height_m == rx_height_m")
        return self

    def link(self) -> LinkGeometry:
        return LinkGeometry(self.separation_m, self.tx_height_m, self.rx_height_m, self.carrier_hz)

    def screen(self, lateral_offset_m: float = 0.0) -> ScreenBlocker:
        h = self.blocker.height
        span = None if h == "infinite" else HeightSpan(h.bottom_m, h.top_m)
        return ScreenBlocker(self.blocker.distance_from_tx_m, lateral_offset_m, self.blocker.width_m, span)

    def to_scenario(self) -> WalkScenario:
        try:
            return WalkScenario(
                link=self.link(),
                blocker=self.screen(),
                speed_mps=self.walk.speed_mps,
                start_offset_m=self.walk.start_offset_m,
                end_offset_m=self.walk.end_offset_m,
                sample_interval_s=self.walk.sample_interval_s,
                model=self.model,
                tx_pattern=self.tx_antenna.to_pattern(),
                rx_pattern=self.rx_antenna.to_pattern(),
            )
        except (GeometryError, ValueError) as exc:
            raise ConfigError(str(exc)) from exc

    @classmethod
    def from_scenario(cls, scenario: WalkScenario) -> "ScenarioConfig":
        def antenna(p: AntennaPattern) -> AntennaConfig:
            if p.is_isotropic:
                return AntennaConfig(kind="isotropic", hpbw_az_deg=None)
            return AntennaConfig(kind="sinc_cos", hpbw_az_deg=round(p.hpbw_az_deg, 12))

        b = scenario.blocker
        height = "infinite" if b.height is None else HeightConfig(bottom_m=b.height.bottom_m, top_m=b.height.top_m)
        link = scenario.link
        return cls(
            carrier_hz=link.carrier_hz,
            separation_m=link.separation_m,
            tx_height_m=link.tx_height_m,
            rx_height_m=link.rx_height_m,
            tx_antenna=antenna(scenario.tx_pattern),
            rx_antenna=antenna(scenario.rx_pattern),
            model=scenario.model,
            blocker=BlockerConfig(width_m=b.width_m, height=height, distance_from_tx_m=b.distance_from_tx_m),
            walk=WalkConfig(
                speed_mps=scenario.speed_mps,
                start_offset_m=scenario.start_offset_m,
                end_offset_m=scenario.end_offset_m,
                sample_interval_s=scenario.sample_interval_s,
            ),
        )

    def dumps(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2) + "\n"


def _format_errors(exc: ValidationError) -> str:
    lines = []
    for err in exc.errors():
        # blocker.height is a union; report only the branch matching the input's type
        if err["type"] == "literal_error" and any(_UNION_TAG.match(str(p)) for p in err["loc"]):
            continue
        if err["type"] in ("model_type", "dict_type") and isinstance(err["input"], str):
            err = {**err, "msg": "must be \"infinite\" or an object with bottom_m/top_m"}
        loc = ".".join(str(p) for p in err["loc"] if not _UNION_TAG.match(str(p)))
        msg = err["msg"].removeprefix("Value error, ")
        lines.append(f"{loc or '<root>'}: {msg}")
    return "; ".join(dict.fromkeys(lines))


def parse_config(document: str) -> ScenarioConfig:
    """Validate a JSON scenario document, filling documented defaults."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("<root>: scenario document must be a JSON object")
    try:
        return ScenarioConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(_format_errors(exc)) from None


def format_trace(trace: ShadowTrace) -> str:
    buf = io.StringIO()
    buf.write(TRACE_HEADER + "\n")
    for s in trace:
        # +0.0 folds negative zero so "-0.000000" never appears
        buf.write(f"{s.time_s + 0.0:.6f},{s.offset_m + 0.0:.6f},{s.loss_db + 0.0:.6f},{s.rel_power_db + 0.0:.6f}\n")
    return buf.getvalue()


def read_trace_csv(text: str) -> dict[str, list[float]]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != TRACE_HEADER:
        raise ConfigError(f"trace header must be exactly {TRACE_HEADER!r}")
    cols: dict[str, list[float]] = {name: [] for name in TRACE_HEADER.split(",")}
    for n, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 4:
            raise ConfigError(f"line {n}: expected 4 fields, got {len(parts)}")
        try:
            values = [float(p) for p in parts]
        except ValueError:
            raise ConfigError(f"line {n}: non-numeric field") from None
        if not all(math.isfinite(v) for v in values):
            raise ConfigError(f"line {n}: non-finite value")
        for name, v in zip(cols, values):
            cols[name].append(v)
    return cols
