"""Pipeline configuration: a small declarative YAML file.

Example::

    projects:
      - id: webshop
        roots: [corpus/webshop]
        role: TRAIN            # TRAIN or EVAL; assigned per project
        exclude: ["**/generated/**"]
    thresholds:                # optional overrides; defaults are built in
      lm_max: 30
    seed: 7                    # required when balance is on
    balance: true
    output_dir: out
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .ingest import CorpusConfig, IngestError
from .metrics import Thresholds


class ConfigError(Exception):
    pass


@dataclass
class PipelineConfig:
    projects: list[CorpusConfig]
    thresholds: Thresholds
    seed: int | None
    balance: bool
    output_dir: Path
    lease_seconds: int = 30 * 60
    config_dir: Path = field(default_factory=Path)

    def __post_init__(self) -> None:
        if not self.projects:
            raise ConfigError("config needs at least one corpus project")
        if self.balance and self.seed is None:
            raise ConfigError("balance: true requires a seed")


def load_config(path: Path | str) -> PipelineConfig:
    path = Path(path)
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        raise ConfigError(f"{path}: YAML parse error{where}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: top level must be a mapping")

    base = path.parent
    projects_raw = raw.get("projects")
    if not isinstance(projects_raw, list) or not projects_raw:
        raise ConfigError(f"{path}: 'projects' must be a non-empty list")
    projects: list[CorpusConfig] = []
    for i, entry in enumerate(projects_raw):
        if not isinstance(entry, dict):
            raise ConfigError(f"{path}: projects[{i}] must be a mapping")
        try:
            project_id = entry["id"]
            roots = entry["roots"]
        except KeyError as exc:
            raise ConfigError(f"{path}: projects[{i}] missing key {exc}") from exc
        try:
            projects.append(
                CorpusConfig(
                    root_dirs=[base / r for r in roots],
                    project_id=str(project_id),
                    exclude_globs=list(entry.get("exclude", [])),
                    role=str(entry.get("role", "TRAIN")),
                )
            )
        except IngestError as exc:
            raise ConfigError(f"{path}: projects[{i}]: {exc}") from exc

    try:
        thresholds = Thresholds.from_overrides(raw.get("thresholds"))
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"{path}: thresholds: {exc}") from exc

    seed = raw.get("seed")
    if seed is not None and not isinstance(seed, int):
        raise ConfigError(f"{path}: seed must be an integer")
    balance = bool(raw.get("balance", False))
    output_dir = base / raw.get("output_dir", "out")
    lease_seconds = raw.get("lease_seconds", 30 * 60)
    if not isinstance(lease_seconds, int) or lease_seconds <= 0:
        raise ConfigError(f"{path}: lease_seconds must be a positive integer")

    try:
        return PipelineConfig(
            projects=projects,
            thresholds=thresholds,
            seed=seed,
            balance=balance,
            output_dir=output_dir,
            lease_seconds=lease_seconds,
            config_dir=base,
        )
    except ConfigError:
        raise
