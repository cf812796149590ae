"""HTTP facade over the evaluation engine.

Computation endpoints (rank, sensitivity, whatif, report) are pure reads
over the stored snapshot; what-if in particular never touches state or the
audit log, so interactive weight sliders stay out of the decision trail.
Mutations use optimistic concurrency via the project's version token.

Error mapping: 400 invalid input (with a machine-readable violation list),
404 unknown project, 409 stale version token, 422 infeasible request.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from ..calibration import apply_constraints
from ..errors import (
    InfeasibleError,
    StaleSnapshotError,
    StoreError,
    ValidationError,
)
from ..model import (
    CriterionId,
    EvaluationProject,
    Platform,
    WeightVector,
    new_project,
    validate_project,
)
from ..report import export_report
from ..scoring import rank_project
from ..sensitivity import analyze, whatif_ranking
from ..templates import TemplateRegistry, get_template
from .repository import ProjectRepository, UnknownProjectError
from .schemas import (
    ConstrainRequest,
    CreateProjectRequest,
    PutProjectRequest,
    SensitivityRequest,
    TemplateListResponse,
    TemplateModel,
    WhatifRequest,
)

DEFAULT_DATA_DIR = "lcdp_data"
API_PREFIX = "/api/v1"


def _error(status: int, message: str, violations: list[str] | None = None) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"error": message, "violations": violations or []})


def create_app(data_dir: str | Path | None = None,
               static_dir: str | Path | None = None) -> FastAPI:
    data_dir = Path(data_dir or os.environ.get("LCDP_SELECT_DATA", DEFAULT_DATA_DIR))
    repo = ProjectRepository(data_dir)
    registry = TemplateRegistry(data_dir / "templates.json")
    app = FastAPI(title="lcdp-select", docs_url="/api/docs", openapi_url="/api/openapi.json")

    @app.exception_handler(RequestValidationError)
    async def malformed_body(_request: Request, exc: RequestValidationError) -> JSONResponse:
        violations = [f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}"
                      for err in exc.errors()]
        return _error(400, "invalid request body", violations)

    @app.exception_handler(ValidationError)
    async def invalid_input(_request: Request, exc: ValidationError) -> JSONResponse:
        return _error(400, "validation failed", exc.violations)

    @app.exception_handler(InfeasibleError)
    async def infeasible(_request: Request, exc: InfeasibleError) -> JSONResponse:
        return _error(422, str(exc))

    @app.exception_handler(UnknownProjectError)
    async def unknown_project(_request: Request, exc: UnknownProjectError) -> JSONResponse:
        return _error(404, str(exc))

    @app.exception_handler(StaleSnapshotError)
    async def stale_snapshot(_request: Request, exc: StaleSnapshotError) -> JSONResponse:
        return _error(409, str(exc))

    @app.exception_handler(StoreError)
    async def store_trouble(_request: Request, exc: StoreError) -> JSONResponse:
        return _error(500, str(exc))

    # -- templates -----------------------------------------------------------

    @app.get(f"{API_PREFIX}/templates", response_model=TemplateListResponse)
    def list_templates() -> TemplateListResponse:
        return TemplateListResponse(
            templates=[TemplateModel(**t.as_dict()) for t in registry.list_templates()])

    # -- projects -------------------------------------------------------------

    @app.get(f"{API_PREFIX}/projects")
    def list_projects() -> dict:
        summaries = []
        for pid in repo.ids():
            project = repo.get(pid)
            summaries.append({"id": project.id, "organization": project.organization,
                              "phase": project.phase, "version": project.version,
                              "platforms": len(project.platforms)})
        return {"projects": summaries}

    @app.post(f"{API_PREFIX}/projects", status_code=201)
    def create(request: CreateProjectRequest) -> dict:
        weights = get_template(request.template).weights if request.template else None
        project = new_project(request.organization, industry=request.industry,
                              weights=weights, actor=request.actor)
        for platform in request.platforms:
            project.add_platform(Platform(**platform.model_dump()), request.actor)
        repo.create(project)
        return project.as_dict()

    @app.get(f"{API_PREFIX}/projects/{{project_id}}")
    def get(project_id: str) -> dict:
        return repo.get(project_id).as_dict()

    @app.put(f"{API_PREFIX}/projects/{{project_id}}")
    def put(project_id: str, request: PutProjectRequest) -> dict:
        doc = request.project
        if doc.id != project_id:
            raise ValidationError(f"body id '{doc.id}' does not match path id '{project_id}'")
        incoming = EvaluationProject.from_dict(doc.model_dump())
        violations = validate_project(incoming, require_complete_scorecards=False)
        if violations:
            raise ValidationError(violations)

        def update(current: EvaluationProject) -> None:
            # Checked under the per-project lock so concurrent PUTs serialize.
            if incoming.version != current.version:
                raise StaleSnapshotError(
                    f"stale version token: stored project is at version {current.version}, "
                    f"request was based on {incoming.version}")
            changed = False
            if incoming.weights.as_dict() != current.weights.as_dict():
                current.set_weights(incoming.weights, request.actor)
                changed = True
            if [s.as_dict() for s in incoming.stakeholders] != \
                    [s.as_dict() for s in current.stakeholders]:
                current.set_stakeholders(list(incoming.stakeholders), request.actor)
                changed = True
            current_platforms = {p.id for p in current.platforms}
            for platform in incoming.platforms:
                if platform.id not in current_platforms:
                    current.add_platform(platform, request.actor)
                    changed = True
            for pid, card in incoming.scorecards.items():
                if pid not in current.scorecards or \
                        current.scorecards[pid].as_dict() != card.as_dict():
                    current.set_scorecard(card, request.actor)
                    changed = True
            if incoming.phase != current.phase:
                current.set_phase(incoming.phase, request.actor, allow_reset=True)
                changed = True
            if incoming.organization != current.organization or \
                    incoming.industry != current.industry:
                before = {"organization": current.organization, "industry": current.industry}
                current.organization = incoming.organization
                current.industry = incoming.industry
                current._record("project.updated", request.actor, before=before,
                                after={"organization": current.organization,
                                       "industry": current.industry})
                changed = True
            if not changed:
                current._record("project.touched", request.actor)

        return repo.mutate(project_id, update).as_dict()

    @app.post(f"{API_PREFIX}/projects/{{project_id}}/weights/constrain")
    def constrain(project_id: str, request: ConstrainRequest) -> dict:
        floors = {CriterionId.parse(k): v for k, v in request.floors.items()}

        def update(current: EvaluationProject) -> None:
            constrained = apply_constraints(current.weights, floors)
            current.set_weights(constrained, request.actor, action="weights.constrained")

        return repo.mutate(project_id, update).as_dict()

    @app.get(f"{API_PREFIX}/projects/{{project_id}}/audit")
    def audit(project_id: str) -> dict:
        project = repo.get(project_id)
        return {"project": project.id, "entries": [a.as_dict() for a in project.audit]}

    # -- computations (read-only) ----------------------------------------------

    @app.post(f"{API_PREFIX}/projects/{{project_id}}/rank")
    def rank_endpoint(project_id: str) -> dict:
        return rank_project(repo.get(project_id)).as_dict()

    @app.post(f"{API_PREFIX}/projects/{{project_id}}/sensitivity")
    def sensitivity_endpoint(project_id: str, request: SensitivityRequest | None = None) -> dict:
        request = request or SensitivityRequest()
        scenarios = None
        if request.scenarios is not None:
            scenarios = [(s.name, WeightVector.from_dict(s.weights).require_valid())
                         for s in request.scenarios]
        report = analyze(repo.get(project_id), criteria=request.criteria,
                         scenarios=scenarios, delta=request.delta)
        return report.as_dict()

    @app.post(f"{API_PREFIX}/projects/{{project_id}}/whatif")
    def whatif_endpoint(project_id: str, request: WhatifRequest) -> dict:
        project = repo.get(project_id)
        weights = None
        if request.weights is not None:
            weights = WeightVector.from_dict(request.weights).require_valid()
        criterion = CriterionId.parse(request.criterion) if request.criterion else None
        return whatif_ranking(project, weights=weights, criterion=criterion,
                              new_value=request.new_value).as_dict()

    @app.post(f"{API_PREFIX}/projects/{{project_id}}/report")
    def report_endpoint(project_id: str) -> PlainTextResponse:
        project = repo.get(project_id)
        ranking = rank_project(project)
        sensitivity = analyze(project)
        markdown = export_report(project, ranking, sensitivity)
        return PlainTextResponse(markdown, media_type="text/markdown; charset=utf-8")

    # Serve the built web workspace when present (frontend/dist next to the repo
    # or overridden via LCDP_SELECT_STATIC).
    static_dir = Path(static_dir or os.environ.get("LCDP_SELECT_STATIC", "frontend/dist"))
    if static_dir.is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="webui")

    return app
