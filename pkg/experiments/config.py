import math
import re
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from sensing.rng import SEED_MASK

FIXED_WEIGHT = re.compile(r"^fixed\(\s*([0-9.eE+-]+)\s*\)$")


class ExperimentConfig(BaseModel):
    """Phase-transition protocol: an (m, k) grid per support-estimate accuracy."""
    N: int = Field(..., ge=2)
    m_values: List[int]
    # k ranges over floor(lo*m) .. floor(hi*m)
    k_rule: Tuple[float, float] = (0.1, 0.5)
    # None means ceil(m/50) for each m
    k_step: Optional[int] = Field(None, ge=1)
    alphas: List[float]
    rho: float = Field(1.0, gt=0.0)
    weight_rule: str = "one_minus_alpha"
    trials: int = Field(..., ge=1)
    base_seed: int = Field(0, ge=0, le=SEED_MASK)
    threshold: float = Field(0.85, gt=0.0, lt=1.0)
    include_baseline: bool = True

    @field_validator("m_values")
    @classmethod
    def check_m_values(cls, values):
        if not values:
            raise ValueError("m_values must not be empty")
        if any(m < 1 for m in values):
            raise ValueError("m_values must be positive")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("m_values must be strictly increasing")
        return values

    @field_validator("alphas")
    @classmethod
    def check_alphas(cls, values):
        if any(not 0.0 <= a <= 1.0 for a in values):
            raise ValueError("alphas must lie in [0, 1]")
        return values

    @field_validator("weight_rule")
    @classmethod
    def check_weight_rule(cls, rule):
        rule = rule.strip()
        if rule == "one_minus_alpha":
            return rule
        match = FIXED_WEIGHT.match(rule)
        if not match or not 0.0 <= float(match.group(1)) <= 1.0:
            raise ValueError(f"weight_rule must be 'one_minus_alpha' or 'fixed(w)' with w in [0, 1], got '{rule}'")
        return rule

    @model_validator(mode="after")
    def check_grid(self):
        lo, hi = self.k_rule
        if not 0.0 <= lo <= hi:
            raise ValueError(f"k_rule needs 0 <= lo <= hi, got {self.k_rule}")
        if self.m_values[-1] >= self.N:
            raise ValueError(f"m values must stay below N={self.N}")
        return self

    def weight_for(self, alpha: float) -> float:
        if self.weight_rule == "one_minus_alpha":
            return 1.0 - alpha
        return float(FIXED_WEIGHT.match(self.weight_rule).group(1))

    def k_values(self, m: int) -> List[int]:
        lo, hi = self.k_rule
        step = self.k_step or math.ceil(m / 50)
        first = max(1, math.floor(lo * m))
        last = min(math.floor(hi * m), self.N)
        return list(range(first, last + 1, step))
