"""Manual review: guideline checklists, annotation log, leases, final export.

The annotation log is append-only, one JSON event per line; replaying it from
empty reconstructs the exact labeled state, so the log is the source of truth
and the in-memory store is just a view. Every sample is reviewed by at most
one reviewer (first accepted annotation wins); the log still records reviewer
ids so a cross-review mode can be layered on later without a format change.

Leases keep two concurrent reviewers off the same sample and expire after a
timeout so an abandoned browser tab cannot starve the queue.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from .common import ActionKind, Group, Label, RefactoringAction, SmellKind
from .javaparse import JavaSyntaxError, parse_class_snippet
from .store import SampleRecord

DEFAULT_LEASE_SECONDS = 30 * 60


@dataclass(frozen=True)
class Question:
    id: str
    text: str
    kind: str  # YES_NO or ACTION


@dataclass(frozen=True)
class GuidelineChecklist:
    smell: SmellKind
    questions: tuple[Question, ...]

    def to_dict(self) -> dict:
        return {
            "smell": self.smell.value,
            "questions": [
                {"id": q.id, "text": q.text, "kind": q.kind} for q in self.questions
            ],
        }


CHECKLISTS: dict[SmellKind, GuidelineChecklist] = {
    SmellKind.LONG_METHOD: GuidelineChecklist(
        SmellKind.LONG_METHOD,
        (
            Question("LM.Q1", "Is the target method hard to read?", "YES_NO"),
            Question(
                "LM.Q2",
                "Is the target method accessing too many attributes or other methods that may reduce the maintainability?",
                "YES_NO",
            ),
            Question(
                "LM.Q3",
                "Does the target method have multiple functions or too many parameters, which may reduce the reusability?",
                "YES_NO",
            ),
            Question(
                "LM.Q4",
                "If the target method is a long method, which lines should be extracted from this method?",
                "ACTION",
            ),
        ),
    ),
    SmellKind.LARGE_CLASS: GuidelineChecklist(
        SmellKind.LARGE_CLASS,
        (
            Question("LC.Q1", "Does the class have too many lines of code?", "YES_NO"),
            Question("LC.Q2", "Does the class have too many fields?", "YES_NO"),
            Question("LC.Q3", "Does the class have too many complex methods?", "YES_NO"),
            Question(
                "LC.Q4",
                "Does the class have class extraction opportunities that may reduce the reusability of the target class?",
                "YES_NO",
            ),
            Question(
                "LC.Q5",
                "Does the class have too many responsibilities, which may reduce the maintainability of the target class?",
                "YES_NO",
            ),
            Question(
                "LC.Q6",
                "If the target class is a large class, which method should be extracted from the target class?",
                "ACTION",
            ),
        ),
    ),
    SmellKind.FEATURE_ENVY: GuidelineChecklist(
        SmellKind.FEATURE_ENVY,
        (
            Question("FE.Q1", "Does the method frequently call from another class?", "YES_NO"),
            Question("FE.Q2", "Does the method frequently access another class?", "YES_NO"),
            Question("FE.Q3", "Does the method rarely use attributes in its own class?", "YES_NO"),
            Question(
                "FE.Q4",
                "Does the method seem more cohesive with another class semantically?",
                "YES_NO",
            ),
            Question(
                "FE.Q5",
                "If the target method is identified as feature envy, which class should it be moved to?",
                "ACTION",
            ),
        ),
    ),
}

_ACTION_KIND_FOR_SMELL = {
    SmellKind.LONG_METHOD: ActionKind.EXTRACT_LINES,
    SmellKind.LARGE_CLASS: ActionKind.EXTRACT_MEMBERS,
    SmellKind.FEATURE_ENVY: ActionKind.MOVE_METHOD,
}


class AnnotationRejected(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass
class Annotation:
    sample_id: str
    reviewer_id: str
    verdict: Label
    answers: dict[str, bool]
    action: RefactoringAction | None
    timestamp: float

    def to_dict(self) -> dict:
        return {
            "sample_id": self.sample_id,
            "reviewer_id": self.reviewer_id,
            "verdict": self.verdict.value,
            "answers": dict(self.answers),
            "action": self.action.to_dict() if self.action else None,
            "timestamp": self.timestamp,
        }

    @staticmethod
    def from_dict(d: dict) -> "Annotation":
        return Annotation(
            sample_id=d["sample_id"],
            reviewer_id=d["reviewer_id"],
            verdict=Label(d["verdict"]),
            answers={k: bool(v) for k, v in d["answers"].items()},
            action=RefactoringAction.from_dict(d["action"]) if d.get("action") else None,
            timestamp=float(d["timestamp"]),
        )


def validate_annotation(a: Annotation, record: SampleRecord) -> None:
    """Field-level validation; raises AnnotationRejected with the reason."""
    checklist = CHECKLISTS[record.smell]
    expected = {q.id for q in checklist.questions if q.kind == "YES_NO"}
    missing = expected - set(a.answers)
    if missing:
        raise AnnotationRejected(f"answers missing for: {', '.join(sorted(missing))}")
    stray = set(a.answers) - expected
    if stray:
        raise AnnotationRejected(f"unknown question ids: {', '.join(sorted(stray))}")

    if a.verdict == Label.NEGATIVE:
        if a.action is not None:
            raise AnnotationRejected("a negative verdict must not carry an action")
        return
    if a.action is None:
        raise AnnotationRejected("a positive verdict requires a refactoring action")
    try:
        a.action.validate_shape()
    except ValueError as exc:
        raise AnnotationRejected(str(exc)) from exc
    wanted = _ACTION_KIND_FOR_SMELL[record.smell]
    if a.action.kind != wanted:
        raise AnnotationRejected(
            f"{record.smell.value} requires a {wanted.value} action, got {a.action.kind.value}"
        )

    if a.action.kind == ActionKind.EXTRACT_LINES:
        line_count = record.code.count("\n") + 1
        for lo, hi in a.action.extract_lines or []:
            if lo < 1 or hi > line_count:
                raise AnnotationRejected(
                    f"line range {lo}-{hi} outside method (1-{line_count})"
                )
    elif a.action.kind == ActionKind.EXTRACT_MEMBERS:
        try:
            cls = parse_class_snippet(record.code)
        except JavaSyntaxError as exc:
            raise AnnotationRejected(f"sample code is not a parseable class: {exc}") from exc
        members = {f.name for f in cls.fields} | {m.name for m in cls.methods}
        unknown = [m for m in a.action.extract_members or [] if m not in members]
        if unknown:
            raise AnnotationRejected(f"members not present in the class: {', '.join(unknown)}")
    else:
        targets = record.provenance.get("candidate_targets") or []
        if not targets:
            raise AnnotationRejected("sample has no known candidate target classes")
        if a.action.move_target not in targets:
            raise AnnotationRejected(
                f"move target must be one of: {', '.join(targets)}"
            )


class ReviewStore:
    """In-memory review state over a record set plus an append-only log."""

    def __init__(
        self,
        records: list[SampleRecord],
        log_path: Path | str,
        lease_seconds: int = DEFAULT_LEASE_SECONDS,
        time_fn=time.time,
    ):
        self.records = records
        self.by_id = {r.id: r for r in records}
        self.log_path = Path(log_path)
        self.lease_seconds = lease_seconds
        self.time_fn = time_fn
        self.annotations: dict[str, Annotation] = {}
        self.leases: dict[str, tuple[str, float]] = {}
        self._lock = threading.Lock()
        if self.log_path.exists():
            self._replay()

    def _replay(self) -> None:
        with open(self.log_path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    a = Annotation.from_dict(json.loads(line))
                except (json.JSONDecodeError, KeyError, ValueError) as exc:
                    raise AnnotationRejected(
                        f"{self.log_path}: corrupt annotation at line {lineno}: {exc}"
                    ) from exc
                self.annotations.setdefault(a.sample_id, a)

    def _purge_leases(self, now: float) -> None:
        expired = [sid for sid, (_, until) in self.leases.items() if until <= now]
        for sid in expired:
            del self.leases[sid]

    def queue_next(
        self, reviewer_id: str, smell: SmellKind | None = None
    ) -> tuple[SampleRecord, GuidelineChecklist] | None:
        """Oldest unannotated M_Group sample not leased to someone else;
        leases it to the caller. Empty queue returns None."""
        with self._lock:
            now = self.time_fn()
            self._purge_leases(now)
            for record in self.records:
                if record.group != Group.M_GROUP or record.id in self.annotations:
                    continue
                if smell is not None and record.smell != smell:
                    continue
                lease = self.leases.get(record.id)
                if lease is not None and lease[0] != reviewer_id:
                    continue
                self.leases[record.id] = (reviewer_id, now + self.lease_seconds)
                return record, CHECKLISTS[record.smell]
            return None

    def submit_annotation(self, a: Annotation) -> None:
        """Validate and persist one annotation; raises AnnotationRejected."""
        with self._lock:
            record = self.by_id.get(a.sample_id)
            if record is None:
                raise AnnotationRejected(f"unknown sample id: {a.sample_id}")
            if record.group != Group.M_GROUP:
                raise AnnotationRejected("only M_Group samples accept annotations")
            if a.sample_id in self.annotations:
                raise AnnotationRejected("sample is already annotated (single-reviewer policy)")
            now = self.time_fn()
            self._purge_leases(now)
            lease = self.leases.get(a.sample_id)
            if lease is not None and lease[0] != a.reviewer_id:
                raise AnnotationRejected("sample is leased to another reviewer")
            validate_annotation(a, record)
            self.log_path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.log_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(a.to_dict(), ensure_ascii=False))
                fh.write("\n")
            self.annotations[a.sample_id] = a
            self.leases.pop(a.sample_id, None)

    def queue_stats(self) -> dict:
        with self._lock:
            now = self.time_fn()
            self._purge_leases(now)
            out: dict = {"pending": {}, "annotated": {}, "leased": len(self.leases), "a_group": 0}
            for record in self.records:
                if record.group == Group.A_GROUP:
                    out["a_group"] += 1
                    continue
                if record.group != Group.M_GROUP:
                    continue
                bucket = "annotated" if record.id in self.annotations else "pending"
                out[bucket][record.smell.value] = out[bucket].get(record.smell.value, 0) + 1
            return out

    def export_final(self) -> list[SampleRecord]:
        """A_Group records plus annotated M_Group records (reviewer labels);
        pending M_Group samples are excluded. Each record's provenance names
        its label source."""
        with self._lock:
            out: list[SampleRecord] = []
            for record in self.records:
                if record.group == Group.A_GROUP:
                    out.append(record)
                    continue
                if record.group != Group.M_GROUP:
                    continue
                a = self.annotations.get(record.id)
                if a is None:
                    continue
                provenance = {
                    **record.provenance,
                    "label_source": f"reviewer:{a.reviewer_id}",
                    "annotation": {
                        "reviewer_id": a.reviewer_id,
                        "timestamp": a.timestamp,
                        "answers": dict(a.answers),
                    },
                }
                ground_truth = record.ground_truth
                if a.action is not None:
                    if record.ground_truth is not None:
                        provenance["generated_action"] = record.ground_truth.to_dict()
                    ground_truth = a.action
                out.append(
                    SampleRecord(
                        id=record.id,
                        smell=record.smell,
                        origin=record.origin,
                        group=record.group,
                        label=a.verdict,
                        code=record.code,
                        context=record.context,
                        metrics=record.metrics,
                        likelihood=record.likelihood,
                        advisor=record.advisor,
                        ground_truth=ground_truth,
                        split=record.split,
                        provenance=provenance,
                    )
                )
            return out
