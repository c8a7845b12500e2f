"""Pipeline command line: one subcommand per stage.

Stages persist their artifacts under the configured output directory so the
expensive ingest can be reused across generation and grouping parameter
sweeps:

    model_<project>.json   resolved program model, one per corpus project
    candidates.jsonl       generated + original candidate pool
    records.jsonl          grouped working set (A_Group and M_Group)
    annotations.log        append-only review log (written by `serve`)
    dataset.jsonl          final labeled export
    stats.json             machine-readable dataset statistics

Exit codes: 0 success, 2 config error, 3 missing input artifact,
4 validation failure.
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path

import click

from .config import ConfigError, PipelineConfig, load_config
from .grouping import CandidateSample, assemble_pool
from .ingest import IngestError, build_project_model
from .model import ProjectModel
from .review import ReviewStore
from .store import (
    StoreError,
    balance_negatives,
    compute_stats,
    format_stats,
    read_jsonl,
    read_records,
    route_candidates,
    write_jsonl,
    write_records,
)
from .common import SmellKind
from .validate import validate_dataset

EXIT_CONFIG = 2
EXIT_MISSING_INPUT = 3
EXIT_VALIDATION = 4

log = logging.getLogger(__name__)


def _load_config_or_die(path: str) -> PipelineConfig:
    try:
        return load_config(path)
    except ConfigError as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)


def _require(path: Path, hint: str) -> Path:
    if not path.exists():
        click.echo(f"missing input: {path} (run `smellforge {hint}` first)", err=True)
        sys.exit(EXIT_MISSING_INPUT)
    return path


def _model_path(cfg: PipelineConfig, project_id: str) -> Path:
    return cfg.output_dir / f"model_{project_id}.json"


def _load_models(cfg: PipelineConfig) -> list[ProjectModel]:
    models = []
    for project in cfg.projects:
        path = _require(_model_path(cfg, project.project_id), "ingest")
        models.append(ProjectModel.from_dict(json.loads(path.read_text(encoding="utf-8"))))
    return models


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Enable debug logging.")
def main(verbose: bool) -> None:
    """Semi-automatic code smell dataset generation."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )


@main.command()
@click.option("-c", "--config", "config_path", required=True, type=click.Path())
def ingest(config_path: str) -> None:
    """Parse the corpus projects into program model dumps."""
    cfg = _load_config_or_die(config_path)
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    for project in cfg.projects:
        try:
            model = build_project_model(project)
        except IngestError as exc:
            click.echo(f"ingest failed: {exc}", err=True)
            sys.exit(EXIT_MISSING_INPUT)
        path = _model_path(cfg, project.project_id)
        path.write_text(
            json.dumps(model.to_dict(), ensure_ascii=False, sort_keys=True), encoding="utf-8"
        )
        click.echo(
            f"{project.project_id}: {len(model.classes)} classes, "
            f"{sum(len(c.methods) for c in model.classes)} methods -> {path}"
        )


@main.command()
@click.option("-c", "--config", "config_path", required=True, type=click.Path())
def generate(config_path: str) -> None:
    """Build the candidate pool: transformed positives plus original entities."""
    cfg = _load_config_or_die(config_path)
    rows: list[dict] = []
    for model in _load_models(cfg):
        pool, discards = assemble_pool(model, cfg.thresholds)
        rows.extend(c.to_dict() for c in pool)
        click.echo(
            f"{model.project_id}: {len(pool)} candidates "
            f"({sum(1 for c in pool if c.origin.value == 'GENERATED')} generated, "
            f"{len(discards)} transform discards)"
        )
    out = cfg.output_dir / "candidates.jsonl"
    write_jsonl(rows, out)
    click.echo(f"wrote {len(rows)} candidates -> {out}")


@main.command()
@click.option("-c", "--config", "config_path", required=True, type=click.Path())
def group(config_path: str) -> None:
    """Route candidates into A_Group / M_Group records."""
    cfg = _load_config_or_die(config_path)
    path = _require(cfg.output_dir / "candidates.jsonl", "generate")
    try:
        pool = [CandidateSample.from_dict(row) for row in read_jsonl(path)]
    except StoreError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_MISSING_INPUT)
    records, discarded = route_candidates(pool)
    out = cfg.output_dir / "records.jsonl"
    write_records(records, out)
    a = sum(1 for r in records if r.group.value == "A_GROUP")
    m = len(records) - a
    click.echo(f"{a} A_Group, {m} M_Group, discarded by rule: {discarded or 'none'}")
    click.echo(f"wrote {len(records)} records -> {out}")


@main.command()
@click.option("-c", "--config", "config_path", required=True, type=click.Path())
@click.option("--balance/--no-balance", default=None, help="Override the config's balance flag.")
@click.option("--seed", type=int, default=None, help="Override the config's sampling seed.")
def export(config_path: str, balance: bool | None, seed: int | None) -> None:
    """Export the final labeled dataset (A_Group plus annotated M_Group)."""
    cfg = _load_config_or_die(config_path)
    records_path = _require(cfg.output_dir / "records.jsonl", "group")
    try:
        records = read_records(records_path)
    except StoreError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_MISSING_INPUT)
    store = ReviewStore(records, cfg.output_dir / "annotations.log", cfg.lease_seconds)
    final = store.export_final()
    do_balance = cfg.balance if balance is None else balance
    use_seed = seed if seed is not None else cfg.seed
    if do_balance:
        if use_seed is None:
            click.echo("config error: balancing requires a seed", err=True)
            sys.exit(EXIT_CONFIG)
        for smell in SmellKind:
            final = balance_negatives(final, smell, "TRAIN", use_seed)
    out = cfg.output_dir / "dataset.jsonl"
    write_records(final, out)
    meta = {
        "balance": do_balance,
        "seed": use_seed if do_balance else None,
        "thresholds": cfg.thresholds.to_dict(),
        "loc_definition": "lines bearing a non-comment token within the entity span",
        "records": len(final),
    }
    (cfg.output_dir / "dataset_meta.json").write_text(
        json.dumps(meta, indent=2, sort_keys=True), encoding="utf-8"
    )
    click.echo(f"wrote {len(final)} labeled records -> {out}")


@main.command()
@click.option("-c", "--config", "config_path", required=True, type=click.Path())
@click.option("--json", "json_out", type=click.Path(), default=None, help="Also write stats JSON here.")
def stats(config_path: str, json_out: str | None) -> None:
    """Print dataset statistics per smell, label, and split."""
    cfg = _load_config_or_die(config_path)
    path = _require(cfg.output_dir / "dataset.jsonl", "export")
    try:
        records = read_records(path)
    except StoreError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_MISSING_INPUT)
    st = compute_stats(records)
    click.echo(format_stats(st))
    target = Path(json_out) if json_out else cfg.output_dir / "stats.json"
    target.write_text(json.dumps(st.to_dict(), indent=2, sort_keys=True), encoding="utf-8")
    click.echo(f"wrote {target}")


@main.command()
@click.option("-c", "--config", "config_path", required=True, type=click.Path())
def validate(config_path: str) -> None:
    """Re-check every dataset-level invariant; nonzero exit on violation."""
    cfg = _load_config_or_die(config_path)
    path = _require(cfg.output_dir / "dataset.jsonl", "export")
    try:
        records = read_records(path)
    except StoreError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_MISSING_INPUT)
    problems = validate_dataset(records, cfg.thresholds)
    st = compute_stats(records)
    if problems:
        for p in problems:
            click.echo(f"FAIL {p}", err=True)
        click.echo(f"{len(problems)} invariant violations in {st.total} records", err=True)
        sys.exit(EXIT_VALIDATION)
    click.echo(f"ok: {st.total} records, all invariants hold")


@main.command()
@click.option("-c", "--config", "config_path", required=True, type=click.Path())
@click.option("--bind", default="127.0.0.1:8008", help="host:port to listen on.")
def serve(config_path: str, bind: str) -> None:
    """Run the review service over the grouped records."""
    import uvicorn

    from .server import create_app

    cfg = _load_config_or_die(config_path)
    records_path = _require(cfg.output_dir / "records.jsonl", "group")
    try:
        records = read_records(records_path)
    except StoreError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_MISSING_INPUT)
    store = ReviewStore(records, cfg.output_dir / "annotations.log", cfg.lease_seconds)
    app = create_app(store, export_path=cfg.output_dir / "dataset.jsonl")
    host, _, port = bind.partition(":")
    click.echo(f"review service on http://{bind} ({len(records)} records)")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8008), log_level="warning")


if __name__ == "__main__":
    main()
