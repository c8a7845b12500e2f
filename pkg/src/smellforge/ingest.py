"""Corpus ingestion: walk project roots, parse Java files, build the model.

Files that fail to parse are skipped and logged (a partially ingested file
would corrupt metric counts); a project with zero parseable files is fatal.
Iteration order is pinned to sorted relative paths so the same corpus bytes
always produce the same model dump.
"""

from __future__ import annotations

import fnmatch
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .analysis import resolve_model
from .javaparse import JavaSyntaxError, parse_unit
from .model import ClassEntity, ProjectModel

log = logging.getLogger(__name__)


class IngestError(Exception):
    pass


@dataclass
class CorpusConfig:
    root_dirs: list[Path]
    project_id: str
    exclude_globs: list[str] = field(default_factory=list)
    role: str = "TRAIN"  # TRAIN or EVAL, assigned per project

    def __post_init__(self) -> None:
        if not self.root_dirs:
            raise IngestError(f"project '{self.project_id}': root_dirs must be non-empty")
        if self.role not in ("TRAIN", "EVAL"):
            raise IngestError(f"project '{self.project_id}': role must be TRAIN or EVAL")
        self.root_dirs = [Path(p) for p in self.root_dirs]


def parse_file(source: str, path: str) -> list[ClassEntity]:
    """Parse one compilation unit into (unresolved) class entities."""
    return parse_unit(source, path).classes


def _iter_java_files(config: CorpusConfig) -> list[tuple[str, Path]]:
    """(store_key, absolute path) pairs, deterministically ordered."""
    out: list[tuple[str, Path]] = []
    for root in config.root_dirs:
        if not root.is_dir():
            raise IngestError(f"corpus root does not exist: {root}")
        for p in sorted(root.rglob("*.java")):
            rel = p.relative_to(root).as_posix()
            if any(fnmatch.fnmatch(rel, g) for g in config.exclude_globs):
                continue
            out.append((f"{root.name}/{rel}", p))
    out.sort(key=lambda kv: kv[0])
    return out


def build_project_model(config: CorpusConfig) -> ProjectModel:
    classes: list[ClassEntity] = []
    files: dict[str, str] = {}
    seen_names: set[str] = set()
    parsed_any = False
    for key, path in _iter_java_files(config):
        try:
            source = path.read_text(encoding="utf-8", errors="replace")
        except OSError as exc:
            log.warning("unreadable file skipped: %s (%s)", path, exc)
            continue
        try:
            parsed = parse_file(source, key)
        except JavaSyntaxError as exc:
            log.warning(
                "parse failure, file skipped: %s at line %d col %d: %s",
                key, exc.line, exc.col, exc.message,
            )
            continue
        parsed_any = True
        files[key] = source
        for cls in parsed:
            if cls.qualified_name in seen_names:
                log.warning(
                    "duplicate class %s in %s skipped (already ingested elsewhere)",
                    cls.qualified_name, key,
                )
                continue
            seen_names.add(cls.qualified_name)
            classes.append(cls)
    if not parsed_any:
        raise IngestError(f"project '{config.project_id}': no parseable .java files found")
    classes.sort(key=lambda c: (c.file, c.span[0], c.qualified_name))
    model = ProjectModel(
        project_id=config.project_id,
        classes=classes,
        files=files,
        role=config.role,
    )
    resolve_model(model)
    return model
