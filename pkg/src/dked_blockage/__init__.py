"""Double knife-edge diffraction (DKED) screen models for human blockage of
millimeter-wave links, with directional-antenna weighting and a walk simulator.
"""
from .antenna import AntennaPattern, normalized_gain, solve_pattern_coefficient
from .geometry import (
    EdgeDiffraction,
    EdgeProjection,
    GeometryError,
    HeightSpan,
    LinkGeometry,
    ScreenBlocker,
    classify_height_edges,
    classify_width_edges,
    edge_projection,
)
from .models import (
    LOSS_CAP_DB,
    BlockageLoss,
    GainWeights,
    Model,
    knife_edge_f,
    modified_screen_loss,
    multi_screen_loss,
    screen_loss,
    screen_loss_2edge,
    screen_loss_4edge,
)
from .walk import (
    EventStats,
    ShadowTrace,
    WalkScenario,
    event_stats,
    nine_measurement_presets,
    simulate_walk,
)

__version__ = "0.1.0"

__all__ = [
    "AntennaPattern",
    "BlockageLoss",
    "EdgeDiffraction",
    "EdgeProjection",
    "EventStats",
    "GainWeights",
    "GeometryError",
    "HeightSpan",
    "LOSS_CAP_DB",
    "LinkGeometry",
    "Model",
    "ScreenBlocker",
    "ShadowTrace",
    "WalkScenario",
    "classify_height_edges",
    "classify_width_edges",
    "edge_projection",
    "event_stats",
    "knife_edge_f",
    "modified_screen_loss",
    "multi_screen_loss",
    "nine_measurement_presets",
    "normalized_gain",
    "screen_loss",
    "screen_loss_2edge",
    "screen_loss_4edge",
    "simulate_walk",
    "solve_pattern_coefficient",
]
