"""Pydantic request/response models for the HTTP surface.

Wire payloads follow the project-file encoding: the same keys and value
shapes as the persisted ``project`` body, so documents can move between
files and the API unchanged.
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class PlatformModel(BaseModel):
    id: str
    name: str
    vendor: str = ""
    notes: str = ""


class CreateProjectRequest(BaseModel):
    organization: str
    industry: str | None = None
    template: str | None = None
    platforms: list[PlatformModel] = Field(default_factory=list)
    actor: str = "api"


class ScenarioInput(BaseModel):
    name: str
    weights: dict[str, float]


class SensitivityRequest(BaseModel):
    criteria: list[str] | None = None
    scenarios: list[ScenarioInput] | None = None
    delta: float | None = None


class WhatifRequest(BaseModel):
    """Either a complete weight vector or a single-criterion perturbation."""

    weights: dict[str, float] | None = None
    criterion: str | None = None
    new_value: float | None = None


class ConstrainRequest(BaseModel):
    floors: dict[str, float]
    actor: str = "api"


class ProjectDocument(BaseModel):
    """Full project body; mirrors the on-disk 'project' object."""

    model_config = ConfigDict(extra="forbid")

    id: str
    organization: str
    industry: str | None = None
    phase: str
    version: int
    weights: dict[str, float]
    stakeholders: list[dict[str, Any]] = Field(default_factory=list)
    platforms: list[dict[str, Any]] = Field(default_factory=list)
    scorecards: dict[str, dict[str, Any]] = Field(default_factory=dict)
    audit: list[dict[str, Any]] = Field(default_factory=list)


class PutProjectRequest(BaseModel):
    project: ProjectDocument
    actor: str = "api"


class TemplateModel(BaseModel):
    sector: str
    display_name: str
    weights: dict[str, float]
    provenance: str


class TemplateListResponse(BaseModel):
    templates: list[TemplateModel]


class ErrorResponse(BaseModel):
    error: str
    violations: list[str] = Field(default_factory=list)
