"""Command-line workflow: init, weights, scores, rank, sensitivity, report, serve.

Commands operate on a project file (``--project``, default
``project.lcdp.json``). Exit codes: 0 success, 1 validation problem,
2 I/O problem, 3 infeasible request.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import os
import sys
from pathlib import Path

import click

from . import store
from .calibration import aggregate, apply_constraints, normalize
from .errors import EvaluationError, InfeasibleError, StoreError, ValidationError
from .model import (
    CRITERION_NAMES,
    CRITERION_ORDER,
    CriterionId,
    Platform,
    StakeholderWeightInput,
    WeightVector,
    new_project,
    require_valid_project,
    validate_project,
)
from .report import export_report, fmt2, fmt4
from .scoring import rank_project
from .sensitivity import analyze
from .templates import get_template

EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_INFEASIBLE = 3

DEFAULT_LISTEN = "127.0.0.1:8080"


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InfeasibleError as exc:
            click.echo(f"infeasible: {exc}", err=True)
            sys.exit(EXIT_INFEASIBLE)
        except ValidationError as exc:
            click.echo("validation failed:", err=True)
            for violation in exc.violations:
                click.echo(f"  - {violation}", err=True)
            sys.exit(EXIT_VALIDATION)
        except (StoreError, OSError) as exc:
            click.echo(f"i/o error: {exc}", err=True)
            sys.exit(EXIT_IO)
        except EvaluationError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_VALIDATION)
    return wrapper


def _load(path: Path):
    project = store.load(path)
    violations = validate_project(project, require_complete_scorecards=False)
    if violations:
        raise ValidationError(violations)
    return project


def _parse_assignments(pairs: tuple[str, ...], what: str) -> dict[CriterionId, float]:
    out: dict[CriterionId, float] = {}
    for pair in pairs:
        if "=" not in pair:
            raise ValidationError(f"{what} must look like BPO=0.25, got {pair!r}")
        key, _, value = pair.partition("=")
        try:
            out[CriterionId.parse(key.strip())] = float(value)
        except ValueError:
            raise ValidationError(f"{what} value for {key.strip()!r} is not a number: {value!r}")
    return out


@click.group()
@click.option("--project", "-p", "project_path", default="project.lcdp.json",
              envvar="LCDP_SELECT_PROJECT", show_default=True,
              type=click.Path(path_type=Path), help="Project file to operate on.")
@click.pass_context
def main(ctx: click.Context, project_path: Path) -> None:
    """Weighted-sum evaluation workflow for low-code platform selection."""
    ctx.obj = project_path


@main.command()
@click.option("--org", required=True, help="Organization running the evaluation.")
@click.option("--industry", default=None, help="Free-text sector tag.")
@click.option("--template", "template_sector", default=None,
              help="Start from a built-in industry weight template.")
@click.option("--actor", default="cli", show_default=True)
@click.pass_obj
@handle_errors
def init(project_path: Path, org: str, industry: str | None,
         template_sector: str | None, actor: str) -> None:
    """Create a new project file (phases 1-2)."""
    if project_path.exists():
        raise StoreError(f"refusing to overwrite existing project file {project_path}")
    weights = get_template(template_sector).weights if template_sector else None
    project = new_project(org, industry=industry, weights=weights, actor=actor)
    if template_sector:
        project._record("weights.template_applied", actor, after=template_sector)
    store.save(project, project_path)
    click.echo(f"created project {project.id} in {project_path}")


@main.group()
def platform() -> None:
    """Manage candidate platforms (phase 3 prerequisites)."""


@platform.command("add")
@click.argument("platform_id")
@click.option("--name", default=None, help="Display name (defaults to the id).")
@click.option("--vendor", default="")
@click.option("--notes", default="")
@click.option("--actor", default="cli", show_default=True)
@click.pass_obj
@handle_errors
def platform_add(project_path: Path, platform_id: str, name: str | None,
                 vendor: str, notes: str, actor: str) -> None:
    """Register a candidate platform."""
    project = _load(project_path)
    project.add_platform(Platform(id=platform_id, name=name or platform_id,
                                  vendor=vendor, notes=notes), actor)
    store.save(project, project_path)
    click.echo(f"added platform {platform_id}")


@platform.command("list")
@click.pass_obj
@handle_errors
def platform_list(project_path: Path) -> None:
    """List registered platforms."""
    project = _load(project_path)
    for p in project.platforms:
        scored = "scored" if p.id in project.scorecards else "unscored"
        click.echo(f"{p.id}\t{p.name}\t{p.vendor}\t{scored}")


@main.group()
def weights() -> None:
    """Set, aggregate, or constrain criterion weights (phase 2)."""


@weights.command("show")
@click.pass_obj
@handle_errors
def weights_show(project_path: Path) -> None:
    """Print current weights, highest first."""
    project = _load(project_path)
    for c in sorted(CRITERION_ORDER, key=lambda c: (-project.weights[c],
                                                    CRITERION_ORDER.index(c))):
        click.echo(f"{c.value}\t{fmt2(project.weights[c])}\t{CRITERION_NAMES[c]}")


@weights.command("set")
@click.argument("assignments", nargs=-1, required=True)
@click.option("--actor", default="cli", show_default=True)
@click.pass_obj
@handle_errors
def weights_set(project_path: Path, assignments: tuple[str, ...], actor: str) -> None:
    """Set weights from raw values (normalized to sum 1), e.g. BPO=25 UCF=15 ..."""
    project = _load(project_path)
    project.set_weights(normalize(_parse_assignments(assignments, "weight")), actor)
    store.save(project, project_path)
    click.echo("weights updated:")
    for c in CRITERION_ORDER:
        click.echo(f"  {c.value} = {fmt2(project.weights[c])}")


@weights.command("aggregate")
@click.option("--csv", "csv_path", required=True, type=click.Path(path_type=Path),
              help="Stakeholder CSV: stakeholder,role,BPO,UCF,II,GS,AEA")
@click.option("--actor", default="cli", show_default=True)
@click.pass_obj
@handle_errors
def weights_aggregate(project_path: Path, csv_path: Path, actor: str) -> None:
    """Aggregate stakeholder weight vectors into the project weights."""
    project = _load(project_path)
    try:
        text = csv_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise StoreError(f"cannot read stakeholder CSV: {exc}") from exc
    inputs = _parse_stakeholder_csv(text)
    consensus = aggregate(inputs)
    project.set_stakeholders(inputs, actor)
    project.set_weights(consensus.aggregated, actor, action="weights.aggregated")
    store.save(project, project_path)
    click.echo(f"aggregated {len(inputs)} stakeholder vectors")
    for c in CRITERION_ORDER:
        click.echo(f"  {c.value} = {fmt2(consensus.aggregated[c])} "
                   f"(stddev {fmt4(consensus.per_criterion_stddev[c])})")
    click.echo(f"max pairwise L1 disagreement: {fmt4(consensus.max_pairwise_l1)}")


def _parse_stakeholder_csv(text: str) -> list[StakeholderWeightInput]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise ValidationError("stakeholder CSV is empty") from None
    expected = ["stakeholder", "role"] + [c.value for c in CRITERION_ORDER]
    if [h.lower() for h in header[:2]] != expected[:2] or header[2:] != expected[2:]:
        raise ValidationError(f"stakeholder CSV header must be {','.join(expected)}")
    inputs = []
    for idx, row in enumerate(reader, start=2):
        if not any(f.strip() for f in row):
            continue
        if len(row) != len(expected):
            raise ValidationError(f"line {idx}: expected {len(expected)} fields, got {len(row)}")
        try:
            proposed = {c: float(row[2 + i]) for i, c in enumerate(CRITERION_ORDER)}
        except ValueError:
            raise ValidationError(f"line {idx}: weights must be numbers") from None
        inputs.append(StakeholderWeightInput(stakeholder=row[0].strip(),
                                             role=row[1].strip(), proposed=proposed))
    if not inputs:
        raise ValidationError("stakeholder CSV contains no data rows")
    return inputs


@weights.command("constrain")
@click.argument("floors", nargs=-1, required=True)
@click.option("--actor", default="cli", show_default=True)
@click.pass_obj
@handle_errors
def weights_constrain(project_path: Path, floors: tuple[str, ...], actor: str) -> None:
    """Apply per-criterion floors, e.g. GS=0.30; the rest rescales to keep sum 1."""
    project = _load(project_path)
    constrained = apply_constraints(project.weights, _parse_assignments(floors, "floor"))
    project.set_weights(constrained, actor, action="weights.constrained")
    store.save(project, project_path)
    click.echo("weights after constraints:")
    for c in CRITERION_ORDER:
        click.echo(f"  {c.value} = {fmt2(project.weights[c])}")


@main.group()
def score() -> None:
    """Enter or import Likert scores (phase 3)."""


@score.command("set")
@click.argument("platform_id")
@click.argument("criterion")
@click.argument("value")
@click.option("--actor", default="cli", show_default=True)
@click.pass_obj
@handle_errors
def score_set(project_path: Path, platform_id: str, criterion: str,
              value: str, actor: str) -> None:
    """Set one direct criterion score (integer 1-5)."""
    project = _load(project_path)
    try:
        parsed = int(value)
    except ValueError:
        raise ValidationError(f"Likert score must be an integer in 1-5, got {value!r}") from None
    project.set_direct_score(platform_id, CriterionId.parse(criterion), parsed, actor)
    store.save(project, project_path)
    click.echo(f"set {platform_id}/{CriterionId.parse(criterion).value} = {parsed}")


@score.command("import")
@click.argument("csv_file", type=click.Path(path_type=Path))
@click.option("--actor", default="cli", show_default=True)
@click.pass_obj
@handle_errors
def score_import(project_path: Path, csv_file: Path, actor: str) -> None:
    """Import scores from CSV (header: platform,criterion,score)."""
    project = _load(project_path)
    try:
        text = csv_file.read_text(encoding="utf-8")
    except OSError as exc:
        raise StoreError(f"cannot read score CSV: {exc}") from exc
    diagnostics = store.import_scores_csv(project, text, actor=actor)
    store.save(project, project_path)
    applied = len(project.scorecards)
    click.echo(f"import finished; {applied} platform(s) carry scorecards")
    if diagnostics:
        click.echo("diagnostics:", err=True)
        for diag in diagnostics:
            click.echo(f"  line {diag.line}: {diag.message}", err=True)
        sys.exit(EXIT_VALIDATION)


@main.command()
@click.option("--format", "fmt", type=click.Choice(["table", "csv"]), default="table",
              show_default=True)
@click.pass_obj
@handle_errors
def rank(project_path: Path, fmt: str) -> None:
    """Rank all platforms under the current weights (phase 4)."""
    project = _load(project_path)
    require_valid_project(project)
    result = rank_project(project)
    if fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["rank", "platform", "total", "tie_group"]
                        + [c.value for c in CRITERION_ORDER])
        for position, entry in enumerate(result.entries, start=1):
            writer.writerow([position, entry.platform, fmt2(entry.total), entry.tie_group]
                            + [fmt2(entry.contributions[c]) for c in CRITERION_ORDER])
        return
    click.echo(f"{'rank':<6}{'platform':<16}{'total':<8}tie")
    for position, entry in enumerate(result.entries, start=1):
        click.echo(f"{position:<6}{entry.platform:<16}{fmt2(entry.total):<8}{entry.tie_group}")
    groups: dict[int, int] = {}
    for entry in result.entries:
        groups[entry.tie_group] = groups.get(entry.tie_group, 0) + 1
    if any(n > 1 for n in groups.values()):
        click.echo("note: tie groups with more than one platform are ordered by the "
                   "deterministic tie-break (highest-weighted criterion first).")


@main.command()
@click.option("--criterion", "criteria", multiple=True,
              help="Restrict to specific criteria (repeatable).")
@click.option("--scenarios", "scenarios_path", type=click.Path(path_type=Path),
              help="JSON file: [{\"name\": ..., \"weights\": {BPO: ...}}, ...]")
@click.option("--delta", type=float, default=None,
              help="Also compute the leader's total range at +/- delta per criterion.")
@click.pass_obj
@handle_errors
def sensitivity(project_path: Path, criteria: tuple[str, ...],
                scenarios_path: Path | None, delta: float | None) -> None:
    """Stability intervals, crossing points, and scenario comparison (phase 5)."""
    project = _load(project_path)
    require_valid_project(project)
    scenario_list = None
    if scenarios_path is not None:
        try:
            raw = json.loads(scenarios_path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise StoreError(f"cannot read scenarios file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ValidationError(f"scenarios file is not valid JSON: {exc}") from None
        scenario_list = [(str(item["name"]),
                          WeightVector.from_dict(item["weights"]).require_valid())
                         for item in raw]
    report = analyze(project, criteria=list(criteria) or None,
                     scenarios=scenario_list, delta=delta)
    click.echo("stability intervals (leader keeps rank 1):")
    for interval in report.intervals:
        exact = ""
        if interval.low_exact or interval.high_exact:
            exact = f"  (exact: {interval.low_exact or '?'} .. {interval.high_exact or '?'})"
        click.echo(f"  {interval.criterion.value}: [{fmt4(interval.low)}, "
                   f"{fmt4(interval.high)}] leader {interval.leader}{exact}")
    crossings = [c for c in report.crossings if c.kind == "crossing"]
    if crossings:
        click.echo("crossing points:")
        for crossing in crossings:
            click.echo(f"  {crossing.criterion.value}: {crossing.x} vs {crossing.y} at "
                       f"{fmt4(crossing.at)} ({crossing.leader_above} leads above)")
    for row in report.scenarios:
        totals = ", ".join(f"{pid} {fmt2(row.totals[pid])}" for pid in row.order)
        click.echo(f"scenario {row.name}: {' > '.join(row.order)} ({totals})")
    if report.tornado is not None:
        click.echo(f"leader total range at +/-{delta}:")
        for c in CRITERION_ORDER:
            lo, hi = report.tornado[c]
            click.echo(f"  {c.value}: [{fmt2(lo)}, {fmt2(hi)}]")


@main.command()
@click.option("--out", "out_path", required=True, type=click.Path(path_type=Path))
@click.pass_obj
@handle_errors
def report(project_path: Path, out_path: Path) -> None:
    """Write the markdown decision report (phase 6)."""
    project = _load(project_path)
    require_valid_project(project)
    ranking = rank_project(project)
    sens = analyze(project)
    markdown = export_report(project, ranking, sens)
    try:
        out_path.write_text(markdown, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise StoreError(f"cannot write report: {exc}") from exc
    click.echo(f"report written to {out_path}")


@main.command()
@click.option("--listen", default=None, metavar="ADDR:PORT",
              help=f"Bind address (env LCDP_SELECT_LISTEN, default {DEFAULT_LISTEN}).")
@click.option("--data-dir", default=None, type=click.Path(path_type=Path),
              help="Directory holding the service's project files.")
@handle_errors
def serve(listen: str | None, data_dir: Path | None) -> None:
    """Start the HTTP service for the web workspace and other clients."""
    import uvicorn

    from .service import create_app

    listen = listen or os.environ.get("LCDP_SELECT_LISTEN", DEFAULT_LISTEN)
    host, _, port_text = listen.rpartition(":")
    if not host or not port_text.isdigit():
        raise ValidationError(f"--listen must look like 127.0.0.1:8080, got {listen!r}")
    app = create_app(data_dir=data_dir)
    uvicorn.run(app, host=host, port=int(port_text), log_level="info")


if __name__ == "__main__":
    main()
