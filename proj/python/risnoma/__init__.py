"""Outage, ergodic capacity and energy efficiency of RIS + STAR-IOS aided
V2V links under NOMA and OMA, with a Monte-Carlo cross-check."""

import json

from ._core import (
    ConfigError,
    SystemConfig,
    aggregate_stats,
    capacity,
    config_keys,
    element_moments,
    empirical_capacity,
    empirical_ee,
    empirical_outage,
    outage,
    point_csv,
    q_function,
    simulate_v,
    sweep_csv,
    v_cdf,
    validate,
)

__version__ = "0.1.0"


def config(overrides=None, **kwargs):
    """Build a SystemConfig from flat dotted keys.

    Keyword arguments use "__" in place of the dot, so
    ``config(surfaces__n1=30)`` equals ``config({"surfaces.n1": 30})``.
    """
    keys = dict(overrides or {})
    keys.update({k.replace("__", "."): v for k, v in kwargs.items()})
    return SystemConfig.from_json(json.dumps(keys))


__all__ = [
    "ConfigError",
    "SystemConfig",
    "aggregate_stats",
    "capacity",
    "config",
    "config_keys",
    "element_moments",
    "empirical_capacity",
    "empirical_ee",
    "empirical_outage",
    "outage",
    "point_csv",
    "q_function",
    "simulate_v",
    "sweep_csv",
    "v_cdf",
    "validate",
]
