"""Project persistence and score ingestion.

Projects live in single JSON documents with sorted keys, LF line endings,
and an embedded SHA-256 checksum of the canonical project body, so saves
are deterministic and tampering or truncation is detectable. Writes take
an advisory file lock and land atomically via a temp file rename.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from filelock import FileLock

from .errors import ChecksumMismatchError, SchemaVersionError, StoreError, ValidationError
from .model import (
    SUB_CRITERIA_BY_ID,
    CriterionId,
    EvaluationProject,
    ScoreCard,
    canonical_json,
    validate_likert,
    validate_project,
)

SCHEMA_VERSION = 1
CSV_DIRECT_HEADER = ("platform", "criterion", "score")
CSV_SUB_HEADER = ("platform", "subcriterion", "score")


@dataclass(frozen=True)
class ProjectFile:
    schema_version: int
    project: EvaluationProject
    checksum: str


@dataclass(frozen=True)
class RowDiagnostic:
    line: int
    message: str


def project_checksum(project: EvaluationProject) -> str:
    return hashlib.sha256(canonical_json(project.as_dict()).encode("utf-8")).hexdigest()


def dumps(project: EvaluationProject) -> str:
    """Render the full project file body (deterministic, LF, trailing newline)."""
    document = {
        "schema_version": SCHEMA_VERSION,
        "project": project.as_dict(),
        "checksum": project_checksum(project),
    }
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False,
                      allow_nan=False) + "\n"


def loads(text: str) -> EvaluationProject:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StoreError(f"not a valid project file: {exc}") from exc
    if not isinstance(document, dict):
        raise StoreError("not a valid project file: top level must be an object")
    version = document.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaVersionError(
            f"unsupported schema_version {version!r}; this build reads version {SCHEMA_VERSION}")
    body = document.get("project")
    if not isinstance(body, dict):
        raise StoreError("project file has no 'project' object")
    stated = document.get("checksum")
    actual = hashlib.sha256(canonical_json(body).encode("utf-8")).hexdigest()
    if stated != actual:
        raise ChecksumMismatchError(
            f"checksum mismatch: file says {stated!r}, body hashes to {actual!r}")
    project = EvaluationProject.from_dict(body)
    violations = validate_project(project, require_complete_scorecards=False)
    if violations:
        raise ValidationError(violations, "project file violates invariants: "
                              + "; ".join(violations))
    return project


def save(project: EvaluationProject, path: str | Path) -> ProjectFile:
    """Write the project file atomically under an advisory lock."""
    path = Path(path)
    body = dumps(project)
    path.parent.mkdir(parents=True, exist_ok=True)
    with FileLock(str(path) + ".lock"):
        fd, tmp_name = tempfile.mkstemp(dir=str(path.parent), prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(body)
            os.replace(tmp_name, path)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
    return ProjectFile(schema_version=SCHEMA_VERSION, project=project,
                       checksum=project_checksum(project))


def load(path: str | Path) -> EvaluationProject:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise StoreError(f"cannot read project file {path}: {exc}") from exc
    return loads(text)


def _parse_csv_rows(csv_text: str) -> tuple[str, list[tuple[int, list[str]]]]:
    reader = csv.reader(io.StringIO(csv_text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValidationError("CSV is empty; expected a header row") from None
    header = tuple(h.strip().lower() for h in header)
    if header == CSV_DIRECT_HEADER:
        mode = "direct"
    elif header == CSV_SUB_HEADER:
        mode = "subcriterion"
    else:
        raise ValidationError(
            "CSV header must be 'platform,criterion,score' or 'platform,subcriterion,score', "
            f"got {','.join(header)!r}")
    rows = [(idx, row) for idx, row in enumerate(reader, start=2) if any(f.strip() for f in row)]
    return mode, rows


def import_scores_csv(project: EvaluationProject, csv_text: str,
                      actor: str = "csv-import") -> list[RowDiagnostic]:
    """Apply score rows to the project, atomically per platform.

    A platform is updated only when every one of its rows is valid and the
    merged scorecard is complete; otherwise all of its rows are skipped and
    each problem is reported with its line number. Applied changes land in
    the audit log.
    """
    mode, rows = _parse_csv_rows(csv_text)
    known_platforms = set(project.platform_ids())
    diagnostics: list[RowDiagnostic] = []

    by_platform: dict[str, list[tuple[int, str, str]]] = {}
    order: list[str] = []
    for line, row in rows:
        if len(row) != 3:
            diagnostics.append(RowDiagnostic(line, f"expected 3 fields, got {len(row)}"))
            continue
        pid, key, raw_score = (field.strip() for field in row)
        if pid not in by_platform:
            by_platform[pid] = []
            order.append(pid)
        by_platform[pid].append((line, key, raw_score))

    for pid in order:
        entries = by_platform[pid]
        problems: list[RowDiagnostic] = []
        if pid not in known_platforms:
            for line, _key, _raw in entries:
                problems.append(RowDiagnostic(line, f"unknown platform '{pid}'"))
            diagnostics.extend(problems)
            continue

        existing = project.scorecards.get(pid)
        if existing is not None and existing.mode != mode:
            for line, _key, _raw in entries:
                problems.append(RowDiagnostic(
                    line, f"platform '{pid}' already scored in {existing.mode} mode; "
                          f"cannot apply {mode} rows"))
            diagnostics.extend(problems)
            continue

        updates: dict[Any, int] = {}
        for line, key, raw_score in entries:
            try:
                score = int(raw_score)
            except ValueError:
                problems.append(RowDiagnostic(line, f"score {raw_score!r} is not an integer"))
                continue
            try:
                validate_likert(score, f"platform '{pid}'")
            except ValidationError as exc:
                problems.append(RowDiagnostic(line, exc.violations[0]))
                continue
            if mode == "direct":
                try:
                    updates[CriterionId.parse(key)] = score
                except ValidationError as exc:
                    problems.append(RowDiagnostic(line, exc.violations[0]))
            else:
                if key not in SUB_CRITERIA_BY_ID:
                    problems.append(RowDiagnostic(line, f"unknown sub-criterion '{key}'"))
                else:
                    updates[key] = score

        if not problems:
            if mode == "direct":
                merged = dict(existing.direct_scores) if existing else {}
                merged.update(updates)
                card = ScoreCard.direct(pid, merged)
            else:
                merged = dict(existing.sub_scores) if existing else {}
                merged.update(updates)
                weights = dict(existing.sub_weights) if existing else None
                if weights is not None:
                    weights.update({k: weights.get(k, 0.25) for k in merged})
                card = ScoreCard.subcriterion(pid, merged, weights)
            incomplete = card.violations(require_complete=True)
            if incomplete:
                problems.extend(RowDiagnostic(entries[0][0], msg) for msg in incomplete)

        if problems:
            diagnostics.extend(problems)
            diagnostics.append(RowDiagnostic(
                entries[0][0], f"platform '{pid}': skipped {len(entries)} row(s); "
                               "nothing was applied for this platform"))
        else:
            project.set_scorecard(card, actor, action="score.imported")

    return diagnostics
