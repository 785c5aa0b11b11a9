from __future__ import annotations

from datetime import datetime
from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator

from shared.constants import LIMITS
from shared.presets import hypothesis_violations

Target = Literal["thm51", "cor53", "cor55", "thm57", "thm58", "thm59", "prob56", "custom"]
Outcome = Literal["found", "not_found", "bound_exceeded"]

U64_MAX = 2**64 - 1


class CampaignParams(BaseModel):
    target: Target = "thm51"
    d: int = Field(ge=1)
    r: int = Field(ge=2)
    m: int | None = Field(default=None, ge=1)
    color_sizes: list[int] = Field(min_length=1)
    caps: list[int] = Field(min_length=1)
    trials: int = Field(default=1, ge=1)
    seed: int = Field(default=0, ge=0, le=U64_MAX)
    distribution: Literal["cube", "moment"] = "cube"
    strategy: Literal["auto", "heuristic", "exhaustive"] = "auto"
    restarts: int = Field(default=LIMITS["heuristic_restarts_default"], ge=1)
    enum_bound: int = Field(default=LIMITS["enum_bound_default"], ge=1)
    override: bool = False

    @model_validator(mode="after")
    def validate_limits(self) -> "CampaignParams":
        if self.m is None:
            self.m = len(self.color_sizes)
        if self.m != len(self.color_sizes):
            raise ValueError(f"m = {self.m} but {len(self.color_sizes)} colour sizes given")
        if len(self.caps) != len(self.color_sizes):
            raise ValueError("caps and color_sizes must have the same length")
        if any(size < 1 for size in self.color_sizes):
            raise ValueError("colour sizes must be >= 1")
        for index, cap in enumerate(self.caps):
            if not 1 <= cap <= self.r:
                raise ValueError(f"cap l_{index + 1} = {cap} violates 1 <= l_i <= r = {self.r}")
        if self.d > LIMITS["ambient_dim_max"]:
            raise ValueError(f"d exceeds {LIMITS['ambient_dim_max']}")
        if self.trials > LIMITS["trials_max"]:
            raise ValueError(f"trials exceeds {LIMITS['trials_max']}")
        if sum(self.color_sizes) > LIMITS["instance_points_max"]:
            raise ValueError(f"instances are limited to {LIMITS['instance_points_max']} points")
        if not self.override:
            violations = hypothesis_violations(self.target, self.d, self.r, self.color_sizes, self.caps)
            if violations:
                raise ValueError("hypotheses not met: " + "; ".join(violations))
        return self

    @property
    def hypotheses_hold(self) -> bool:
        return not hypothesis_violations(self.target, self.d, self.r, self.color_sizes, self.caps)

    @property
    def guaranteed(self) -> bool:
        """True when a proved statement promises a partition for every trial."""
        return self.target not in ("custom", "prob56") and self.hypotheses_hold


class TrialRecord(BaseModel):
    index: int
    seed: int
    outcome: Outcome
    decided_by: Literal["heuristic", "exhaustive"] | None = None
    partition: str | None = None
    count: int | None = None
    contradiction: bool = False
    wall_time: float = Field(default=0.0, exclude=True)


class HuntCandidate(BaseModel):
    trial: int
    seed: int
    instance: str
    reverified: bool


class CampaignReport(BaseModel):
    mode: Literal["campaign", "hunt"]
    params: CampaignParams
    hypotheses_hold: bool
    trials: list[TrialRecord] = Field(default_factory=list)
    outcome_counts: dict[str, int] = Field(default_factory=dict)
    success_count: int = 0
    contradictions: list[int] = Field(default_factory=list)
    first_failure: str | None = None
    candidates: list[HuntCandidate] = Field(default_factory=list)
    capped_vertex_count: int | None = None
    tverberg_point_count: int | None = None
    canceled: bool = False

    def canonical_json(self) -> str:
        """Byte-stable JSON: trials in index order, wall-times left out."""
        ordered = self.model_copy(update={"trials": sorted(self.trials, key=lambda t: t.index)})
        return ordered.model_dump_json(indent=2) + "\n"


class CampaignRequest(BaseModel):
    mode: Literal["campaign", "hunt"] = "campaign"
    params: CampaignParams


class CampaignSummary(BaseModel):
    campaign_id: str
    status: str
    mode: Literal["campaign", "hunt"]
    params: CampaignParams
    created_at: datetime
    updated_at: datetime
    trials_done: int = 0
    error: str | None = None


class CampaignEvent(BaseModel):
    seq: int
    type: str
    timestamp: datetime
    payload: dict[str, Any] = Field(default_factory=dict)


class PresetDescriptor(BaseModel):
    preset_id: str
    title: str
    description: str
    mode: Literal["campaign", "hunt"]
    rule: str


class InstanceUploadResponse(BaseModel):
    instance_id: str
    d: int
    r: int
    m: int
    num_vertices: int
    combinatorial: bool
    expires_at: datetime


class VerifyRequest(BaseModel):
    partition: str = Field(min_length=1)
    check_geometry: bool = True
