"""Dataset persistence: sample records, JSONL files, stats, balancing.

Records live in line-delimited JSON (one object per line, UTF-8, fixed key
order) for diff-ability and ML-toolchain friendliness. Writes go through a
temp file plus rename so a crashed export never leaves a half-written
dataset. Record ids are content hashes over the identity-bearing provenance
(project, files, spans, pattern, targets) so re-running the pipeline on the
same corpus reproduces the same ids and annotations stay attachable.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import random
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__ as PIPELINE_VERSION
from .common import Group, Label, Origin, RefactoringAction, SmellKind
from .grouping import CandidateSample, assign_group
from .metrics import Likelihood, MetricVector, Verdict

log = logging.getLogger(__name__)


class StoreError(Exception):
    pass


# provenance keys that identify a sample independent of thresholds or rules
_ID_KEYS = (
    "file",
    "span",
    "entity",
    "pattern",
    "caller",
    "callee",
    "statement_index",
    "site_ordinal",
    "absorber",
    "absorbed",
    "method",
    "original_owner",
    "generation_target",
    "via",
)


def record_id(project: str, smell: SmellKind, origin: Origin, provenance: dict) -> str:
    identity = {
        "project": project,
        "smell": smell.value,
        "origin": origin.value,
        "provenance": {k: provenance[k] for k in _ID_KEYS if k in provenance},
    }
    digest = hashlib.sha256(json.dumps(identity, sort_keys=True).encode("utf-8"))
    return digest.hexdigest()[:16]


@dataclass
class SampleRecord:
    id: str
    smell: SmellKind
    origin: Origin
    group: Group
    label: Label | None
    code: str
    context: dict[str, str]
    metrics: MetricVector
    likelihood: Likelihood
    advisor: Verdict | None
    ground_truth: RefactoringAction | None
    split: str
    provenance: dict

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "smell": self.smell.value,
            "origin": self.origin.value,
            "group": self.group.value,
            "label": self.label.value if self.label else None,
            "code": self.code,
            "context": dict(self.context),
            "metrics": self.metrics.to_dict(),
            "likelihood": self.likelihood.value,
            "advisor": self.advisor.value if self.advisor else None,
            "ground_truth": self.ground_truth.to_dict() if self.ground_truth else None,
            "split": self.split,
            "provenance": self.provenance,
        }

    @staticmethod
    def from_dict(d: dict) -> "SampleRecord":
        return SampleRecord(
            id=d["id"],
            smell=SmellKind(d["smell"]),
            origin=Origin(d["origin"]),
            group=Group(d["group"]),
            label=Label(d["label"]) if d["label"] else None,
            code=d["code"],
            context=dict(d["context"]),
            metrics=MetricVector.from_dict(d["metrics"]),
            likelihood=Likelihood(d["likelihood"]),
            advisor=Verdict(d["advisor"]) if d["advisor"] else None,
            ground_truth=RefactoringAction.from_dict(d["ground_truth"]) if d["ground_truth"] else None,
            split=d["split"],
            provenance=d["provenance"],
        )


def route_candidates(
    pool: list[CandidateSample], split: str | None = None
) -> tuple[list[SampleRecord], dict[str, int]]:
    """Assign every candidate to a group; keep A_Group and M_Group records,
    count discards per smell. When ``split`` is None each candidate inherits
    its project's role from provenance."""
    records: list[SampleRecord] = []
    discarded: dict[str, int] = {}
    for cand in pool:
        assignment = assign_group(cand)
        if assignment.group == Group.DISCARD:
            discarded[cand.smell.value] = discarded.get(cand.smell.value, 0) + 1
            continue
        project = cand.provenance.get("project", "")
        record_split = split or cand.provenance.get("role", "TRAIN")
        provenance = {
            **cand.provenance,
            "rule_id": assignment.rule_id,
            "pipeline_version": PIPELINE_VERSION,
        }
        if assignment.group == Group.A_GROUP:
            provenance["label_source"] = f"rule:{assignment.rule_id}"
        records.append(
            SampleRecord(
                id=record_id(project, cand.smell, cand.origin, cand.provenance),
                smell=cand.smell,
                origin=cand.origin,
                group=assignment.group,
                label=assignment.auto_label,
                code=cand.entity_source,
                context=cand.context_sources,
                metrics=cand.metrics,
                likelihood=cand.likelihood,
                advisor=cand.advisor,
                ground_truth=cand.ground_truth,
                split=record_split,
                provenance=provenance,
            )
        )
    return records, discarded


# -- line-delimited persistence ---------------------------------------------------


def write_jsonl(rows: list[dict], path: Path | str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False))
            fh.write("\n")
    os.replace(tmp, path)


def read_jsonl(path: Path | str) -> list[dict]:
    path = Path(path)
    rows: list[dict] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rows.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise StoreError(f"{path}: malformed record at line {lineno}: {exc}") from exc
    return rows


def write_records(records: list[SampleRecord], path: Path | str) -> None:
    write_jsonl([r.to_dict() for r in records], path)


def read_records(path: Path | str) -> list[SampleRecord]:
    records = []
    for lineno, row in enumerate(read_jsonl(path), start=1):
        try:
            records.append(SampleRecord.from_dict(row))
        except (KeyError, ValueError) as exc:
            raise StoreError(f"{path}: invalid record at line {lineno}: {exc}") from exc
    return records


# -- statistics -----------------------------------------------------------------


@dataclass
class DatasetStats:
    cells: dict[tuple[str, str, str], int] = field(default_factory=dict)  # (split, smell, label)
    total: int = 0

    def count(self, split: str, smell: str, label: str) -> int:
        return self.cells.get((split, smell, label), 0)

    def to_dict(self) -> dict:
        out: dict = {"total": self.total, "splits": {}}
        for (split, smell, label), n in sorted(self.cells.items()):
            out["splits"].setdefault(split, {}).setdefault(smell, {})[label] = n
        return out


def compute_stats(records: list[SampleRecord]) -> DatasetStats:
    stats = DatasetStats()
    for r in records:
        label = r.label.value if r.label else "UNLABELED"
        key = (r.split, r.smell.value, label)
        stats.cells[key] = stats.cells.get(key, 0) + 1
        stats.total += 1
    return stats


def format_stats(stats: DatasetStats) -> str:
    lines = [f"{'split':<6} {'smell':<14} {'positive':>9} {'negative':>9} {'unlabeled':>10}"]
    splits = sorted({k[0] for k in stats.cells})
    smells = [s.value for s in SmellKind]
    for split in splits:
        for smell in smells:
            pos = stats.count(split, smell, "POSITIVE")
            neg = stats.count(split, smell, "NEGATIVE")
            unl = stats.count(split, smell, "UNLABELED")
            if pos or neg or unl:
                lines.append(f"{split:<6} {smell:<14} {pos:>9} {neg:>9} {unl:>10}")
    lines.append(f"total records: {stats.total}")
    return "\n".join(lines)


# -- balancing ------------------------------------------------------------------


def balance_negatives(
    records: list[SampleRecord], smell: SmellKind, split: str, seed: int
) -> list[SampleRecord]:
    """Down-sample negatives to the positive count for one (smell, split)
    cell with a seeded uniform draw. Only the training split is ever
    balanced; evaluation data stays at its natural ratio."""
    if split != "TRAIN":
        log.warning("balance requested for split %s ignored (TRAIN only)", split)
        return records
    pos = [r for r in records if r.smell == smell and r.split == split and r.label == Label.POSITIVE]
    neg_idx = [
        i
        for i, r in enumerate(records)
        if r.smell == smell and r.split == split and r.label == Label.NEGATIVE
    ]
    if len(neg_idx) < len(pos):
        log.warning(
            "cannot balance %s/%s: %d negatives < %d positives",
            smell.value, split, len(neg_idx), len(pos),
        )
        return records
    rng = random.Random(seed)
    keep = set(rng.sample(neg_idx, len(pos)))
    return [
        r
        for i, r in enumerate(records)
        if not (i in neg_idx and i not in keep)
    ]
