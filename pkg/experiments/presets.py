"""
Compiled-in experiment presets and the flat ``key = value`` config format.

A config file overrides fields of a preset::

    # reduced run
    N = 100
    m_values = 20, 30, 40
    alphas = 0.3, 1.0
    trials = 10

Lists are comma separated; ``k_rule`` takes two fractions. ``WL1_SEED`` in the
environment overrides ``base_seed``.
"""

import logging
import os
from pathlib import Path
from typing import Dict, Optional

from pydantic import ValidationError

from errors import ArgumentError, ParseError
from experiments.config import ExperimentConfig

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20140527

PRESETS: Dict[str, dict] = {
    "desk": dict(N=100, m_values=[20, 30, 40, 50, 60], k_rule=(0.1, 0.5),
                 alphas=[0.3, 0.7, 1.0], rho=1.0, weight_rule="one_minus_alpha",
                 trials=25, base_seed=DEFAULT_SEED, threshold=0.85),
    "paper": dict(N=500, m_values=list(range(50, 251, 25)), k_rule=(0.1, 0.5),
                  alphas=[0.1, 0.3, 0.7, 1.0], rho=1.0, weight_rule="one_minus_alpha",
                  trials=50, base_seed=DEFAULT_SEED, threshold=0.85),
}

LIST_FIELDS = {"m_values": int, "alphas": float, "k_rule": float}
SCALAR_FIELDS = {"N": int, "k_step": int, "rho": float, "weight_rule": str,
                 "trials": int, "base_seed": int, "threshold": float,
                 "include_baseline": lambda v: v.lower() in ("1", "true", "yes")}


def parse_config_text(text: str, path="<config>") -> dict:
    """Parse ``key = value`` lines into typed overrides; errors carry 1-based line numbers."""
    overrides = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(path, number, f"expected 'key = value', got '{line}'")
        key, value = (part.strip() for part in line.split("=", 1))
        try:
            if key in LIST_FIELDS:
                convert = LIST_FIELDS[key]
                items = [convert(item.strip()) for item in value.split(",") if item.strip()]
                overrides[key] = tuple(items) if key == "k_rule" else items
            elif key in SCALAR_FIELDS:
                overrides[key] = SCALAR_FIELDS[key](value)
            else:
                raise ParseError(path, number, f"unknown key '{key}'")
        except ValueError as e:
            raise ParseError(path, number, f"bad value for '{key}': {e}") from None
    return overrides


def build_config(preset: str = "desk", config_path: Optional[Path] = None,
                 seed: Optional[int] = None, **overrides) -> ExperimentConfig:
    """
    Preset fields, then config-file overrides, then ``WL1_SEED``, then an
    explicit ``seed``. Keyword overrides are applied last.
    """
    if preset not in PRESETS:
        raise ArgumentError(f"Unknown preset '{preset}', expected one of {sorted(PRESETS)}")
    fields = dict(PRESETS[preset])
    if config_path is not None:
        path = Path(config_path)
        fields.update(parse_config_text(path.read_text(encoding="utf-8"), path))
        logger.info(f"📄 Loaded config overrides from {path}")
    env_seed = os.environ.get("WL1_SEED")
    if env_seed:
        try:
            fields["base_seed"] = int(env_seed, 0)
        except ValueError:
            raise ArgumentError(f"WL1_SEED must be an integer, got '{env_seed}'") from None
    if seed is not None:
        fields["base_seed"] = seed
    fields.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return ExperimentConfig(**fields)
    except ValidationError as e:
        raise ArgumentError(f"Invalid experiment config: {e}") from None
