"""Markdown decision report: weights, score matrix, ranking, sensitivity, audit digest.

All figures print at 2 decimals (half-up) except interval endpoints, which
use 4 decimals; the underlying doubles are never rounded. Reports embed the
project snapshot hash and refuse inputs computed from a different snapshot,
so every printed number can be re-derived from the stored project.
"""

from __future__ import annotations

import hashlib
from decimal import ROUND_HALF_UP, Decimal

from .calibration import aggregate
from .errors import StaleSnapshotError
from .model import (
    CRITERION_NAMES,
    CRITERION_ORDER,
    PHASE_NAMES,
    EvaluationProject,
    RankingResult,
    canonical_json,
    project_content_hash,
)
from .scoring import criterion_scores
from .sensitivity import SensitivityReport

AUDIT_DIGEST_ROWS = 10


def round_half_up(value: float, places: int = 2) -> str:
    """Presentation rounding: decimal half-up on the shortest float repr."""
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def fmt2(value: float) -> str:
    return round_half_up(value, 2)


def fmt4(value: float) -> str:
    return round_half_up(value, 4)


def _check_snapshot(project_hash: str, *parts: tuple[str, str | None]) -> None:
    for name, stated in parts:
        if stated is None:
            raise StaleSnapshotError(f"{name} carries no snapshot hash; recompute it from the project")
        if stated != project_hash:
            raise StaleSnapshotError(
                f"{name} was computed from snapshot {stated[:12]}..., "
                f"but the project is now {project_hash[:12]}...")


def export_report(project: EvaluationProject, ranking: RankingResult,
                  sensitivity: SensitivityReport) -> str:
    """Render the auditable markdown report for one project snapshot."""
    snapshot = project_content_hash(project)
    _check_snapshot(snapshot, ("ranking", ranking.snapshot_hash),
                    ("sensitivity report", sensitivity.snapshot_hash))

    names = {p.id: p.name for p in project.platforms}
    ordered_ids = [e.platform for e in ranking.entries]
    lines: list[str] = []
    out = lines.append

    out(f"# Platform Evaluation Report: {project.organization}")
    out("")
    out(f"- Project: `{project.id}`")
    if project.industry:
        out(f"- Industry: {project.industry}")
    out(f"- Phase: {PHASE_NAMES.get(project.phase, project.phase)}")
    out(f"- Snapshot: `{snapshot}`")
    out("")

    # -- weights and stakeholder dispersion ---------------------------------
    out("## Criterion Weights")
    out("")
    dispersion = aggregate(project.stakeholders) if project.stakeholders else None
    if dispersion is not None:
        out("| Criterion | Weight | Stakeholder std. dev. |")
        out("| --- | ---: | ---: |")
        for c in CRITERION_ORDER:
            out(f"| {CRITERION_NAMES[c]} ({c.value}) | {fmt2(project.weights[c])} "
                f"| {fmt4(dispersion.per_criterion_stddev[c])} |")
        out("")
        out(f"Stakeholders consulted: {len(project.stakeholders)}. "
            f"Max pairwise L1 disagreement: {fmt4(dispersion.max_pairwise_l1)}.")
    else:
        out("| Criterion | Weight |")
        out("| --- | ---: |")
        for c in CRITERION_ORDER:
            out(f"| {CRITERION_NAMES[c]} ({c.value}) | {fmt2(project.weights[c])} |")
        out("")
        out("No stakeholder weight inputs recorded.")
    out("")

    # -- score / weighted matrix --------------------------------------------
    out("## Score Matrix")
    out("")
    header = "| Criterion | Weight |"
    header += "".join(f" {names.get(pid, pid)} Score |" for pid in ordered_ids)
    header += "".join(f" {names.get(pid, pid)} Weighted |" for pid in ordered_ids)
    out(header)
    out("| --- | ---: |" + " ---: |" * (2 * len(ordered_ids)))
    entry_by_id = {e.platform: e for e in ranking.entries}
    scores_by_id = {pid: criterion_scores(project.scorecards[pid]) for pid in ordered_ids}
    for c in CRITERION_ORDER:
        row = f"| {CRITERION_NAMES[c]} ({c.value}) | {fmt2(project.weights[c])} |"
        for pid in ordered_ids:
            row += f" {fmt2(scores_by_id[pid][c])} |"
        for pid in ordered_ids:
            row += f" {fmt2(entry_by_id[pid].contributions[c])} |"
        out(row)
    total_row = f"| Total Score | {fmt2(project.weights.total())} |"
    total_row += " |" * len(ordered_ids)
    total_row += "".join(f" {fmt2(entry_by_id[pid].total)} |" for pid in ordered_ids)
    out(total_row)
    out("")

    # -- ranking with tie disclosure -----------------------------------------
    out("## Ranking")
    out("")
    for position, entry in enumerate(ranking.entries, start=1):
        out(f"{position}. **{names.get(entry.platform, entry.platform)}** "
            f"(`{entry.platform}`) — {fmt2(entry.total)}")
    out("")
    tie_groups: dict[int, list[str]] = {}
    for entry in ranking.entries:
        tie_groups.setdefault(entry.tie_group, []).append(entry.platform)
    tied = {g: pids for g, pids in tie_groups.items() if len(pids) > 1}
    if tied:
        out("### Ties")
        out("")
        for group, pids in sorted(tied.items()):
            out(f"- Totals equal within 1e-09 for: {', '.join(pids)}. Order within the tie is "
                "deterministic: higher score on the highest-weighted criterion, then the "
                "remaining criteria by descending weight, then platform id.")
        out("")
    else:
        out("No ties: all totals differ by more than 1e-09.")
        out("")

    # -- sensitivity -----------------------------------------------------------
    out("## Sensitivity")
    out("")
    out("One criterion's weight is varied at a time; the remaining weights keep their "
        "relative proportions. Intervals are closed at 1e-4 resolution and show where the "
        "current leader keeps rank 1. This perturbation scheme and the tie-break above are "
        "conventions of this tool.")
    out("")
    out("| Criterion | Leader stays rank 1 for weight in | Exact bounds |")
    out("| --- | --- | --- |")
    for interval in sensitivity.intervals:
        exact = []
        if interval.low_exact is not None:
            exact.append(f"low = {interval.low_exact}")
        if interval.high_exact is not None:
            exact.append(f"high = {interval.high_exact}")
        out(f"| {CRITERION_NAMES[interval.criterion]} ({interval.criterion.value}) "
            f"| [{fmt4(interval.low)}, {fmt4(interval.high)}] "
            f"| {'; '.join(exact) if exact else 'n/a'} |")
    out("")

    real_crossings = [c for c in sensitivity.crossings if c.kind == "crossing"]
    if real_crossings:
        out("### Crossing Points")
        out("")
        out("| Criterion | Pair | Crossing weight | Leads below | Leads above |")
        out("| --- | --- | ---: | --- | --- |")
        for crossing in real_crossings:
            out(f"| {crossing.criterion.value} | {crossing.x} vs {crossing.y} "
                f"| {fmt4(crossing.at)} | {crossing.leader_below} | {crossing.leader_above} |")
        out("")
    always_equal = [c for c in sensitivity.crossings if c.kind == "always-equal"]
    if always_equal:
        out("Pairs with identical totals at every weight: "
            + "; ".join(f"{c.x}/{c.y} ({c.criterion.value})" for c in always_equal) + ".")
        out("")

    if sensitivity.scenarios:
        out("### Scenario Comparison")
        out("")
        out("| Scenario | Weights | Order | Totals |")
        out("| --- | --- | --- | --- |")
        for row in sensitivity.scenarios:
            weight_text = ", ".join(f"{c.value} {fmt2(row.weights[c])}" for c in CRITERION_ORDER)
            totals_text = ", ".join(f"{pid} {fmt2(row.totals[pid])}" for pid in row.order)
            out(f"| {row.name} | {weight_text} | {' > '.join(row.order)} | {totals_text} |")
        out("")

    if sensitivity.tornado is not None:
        out("### Leader Total Range")
        out("")
        out("| Criterion | Min total | Max total |")
        out("| --- | ---: | ---: |")
        for c in CRITERION_ORDER:
            lo, hi = sensitivity.tornado[c]
            out(f"| {CRITERION_NAMES[c]} ({c.value}) | {fmt2(lo)} | {fmt2(hi)} |")
        out("")

    # -- audit digest -----------------------------------------------------------
    out("## Audit Digest")
    out("")
    audit_hash = hashlib.sha256(
        canonical_json([a.as_dict() for a in project.audit]).encode("utf-8")).hexdigest()
    out(f"- Entries: {len(project.audit)}")
    if project.audit:
        out(f"- First: {project.audit[0].timestamp} ({project.audit[0].action})")
        out(f"- Last: {project.audit[-1].timestamp} ({project.audit[-1].action})")
    out(f"- Log digest: `{audit_hash}`")
    out("")
    if project.audit:
        out(f"Most recent entries (up to {AUDIT_DIGEST_ROWS}):")
        out("")
        out("| Timestamp | Actor | Action |")
        out("| --- | --- | --- |")
        for entry in project.audit[-AUDIT_DIGEST_ROWS:]:
            out(f"| {entry.timestamp} | {entry.actor} | {entry.action} |")
        out("")
    return "\n".join(lines)
