"""Candidate pool assembly and routing into A_Group, M_Group, or discard.

The routing rules form a decision table per smell over (origin, likelihood,
advisor). Rule identifiers are stable strings persisted into provenance:

Long Method
    LM.A1  generated, HIGH           -> A_GROUP POSITIVE
    LM.A2  original, LOW, advisor-   -> A_GROUP NEGATIVE
    LM.M1  original, HIGH            -> M_GROUP
    LM.M2  generated, MODERATE       -> M_GROUP
    LM.M3  original, MODERATE, advisor- -> M_GROUP
    LM.M4  original, LOW|MODERATE, advisor+ -> M_GROUP (advisor-flagged
           originals below HIGH are exactly the ambiguous cases)
    LM.D1  generated, LOW            -> DISCARD (the merge failed to
           manufacture a smell; labeling it either way would inject noise)

Large Class
    LC.A1  generated, HIGH     -> A_GROUP POSITIVE
    LC.A2  original, LOW       -> A_GROUP NEGATIVE
    LC.M1  generated, MODERATE -> M_GROUP
    LC.M2  original, MODERATE  -> M_GROUP
    LC.M3  original, HIGH      -> M_GROUP
    LC.D1  generated, LOW      -> DISCARD

Feature Envy
    FE.A1  generated, HIGH     -> A_GROUP POSITIVE
    FE.A2  original, LOW       -> A_GROUP NEGATIVE
    FE.M1  generated, MODERATE -> M_GROUP
    FE.M2  original, MODERATE  -> M_GROUP
    FE.M3  original, HIGH      -> M_GROUP
    FE.D1  generated, LOW      -> DISCARD

Exactly one rule fires for every well-formed candidate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .common import Label, Group, Origin, RefactoringAction, SmellKind
from .generators import GeneratedSample, generate_all
from .metrics import (
    AdvisorFn,
    Likelihood,
    MetricVector,
    Thresholds,
    Verdict,
    default_advisor,
    likelihood_feature_envy,
    likelihood_large_class,
    likelihood_long_method,
    metrics_for_class,
    metrics_for_method,
)
from .model import ClassEntity, ClassKind, MethodEntity, ProjectModel, ancestors


class GroupingError(Exception):
    """A pipeline bug: a candidate reached routing without required inputs."""


@dataclass
class CandidateSample:
    smell: SmellKind
    origin: Origin
    entity_source: str
    context_sources: dict[str, str]
    metrics: MetricVector
    likelihood: Likelihood
    advisor: Verdict | None = None  # Long Method originals only
    ground_truth: RefactoringAction | None = None  # generated only
    provenance: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "smell": self.smell.value,
            "origin": self.origin.value,
            "entity_source": self.entity_source,
            "context_sources": dict(self.context_sources),
            "metrics": self.metrics.to_dict(),
            "likelihood": self.likelihood.value,
            "advisor": self.advisor.value if self.advisor else None,
            "ground_truth": self.ground_truth.to_dict() if self.ground_truth else None,
            "provenance": self.provenance,
        }

    @staticmethod
    def from_dict(d: dict) -> "CandidateSample":
        return CandidateSample(
            smell=SmellKind(d["smell"]),
            origin=Origin(d["origin"]),
            entity_source=d["entity_source"],
            context_sources=dict(d["context_sources"]),
            metrics=MetricVector.from_dict(d["metrics"]),
            likelihood=Likelihood(d["likelihood"]),
            advisor=Verdict(d["advisor"]) if d["advisor"] else None,
            ground_truth=RefactoringAction.from_dict(d["ground_truth"]) if d["ground_truth"] else None,
            provenance=d["provenance"],
        )


@dataclass
class GroupAssignment:
    group: Group
    auto_label: Label | None
    rule_id: str


def likelihood_for(smell: SmellKind, metrics: MetricVector, thresholds: Thresholds) -> Likelihood:
    if smell == SmellKind.LONG_METHOD:
        return likelihood_long_method(metrics, thresholds)
    if smell == SmellKind.LARGE_CLASS:
        return likelihood_large_class(metrics, thresholds)
    return likelihood_feature_envy(metrics, thresholds)


def assign_group(c: CandidateSample) -> GroupAssignment:
    """Route one candidate; exactly one rule fires."""
    smell, origin, level = c.smell, c.origin, c.likelihood

    if smell == SmellKind.LONG_METHOD:
        if origin == Origin.GENERATED:
            if level == Likelihood.HIGH:
                return GroupAssignment(Group.A_GROUP, Label.POSITIVE, "LM.A1")
            if level == Likelihood.MODERATE:
                return GroupAssignment(Group.M_GROUP, None, "LM.M2")
            return GroupAssignment(Group.DISCARD, None, "LM.D1")
        if c.advisor is None:
            raise GroupingError("original Long Method candidate lacks an advisor verdict")
        if level == Likelihood.HIGH:
            return GroupAssignment(Group.M_GROUP, None, "LM.M1")
        if c.advisor == Verdict.POSITIVE:
            return GroupAssignment(Group.M_GROUP, None, "LM.M4")
        if level == Likelihood.LOW:
            return GroupAssignment(Group.A_GROUP, Label.NEGATIVE, "LM.A2")
        return GroupAssignment(Group.M_GROUP, None, "LM.M3")

    prefix = "LC" if smell == SmellKind.LARGE_CLASS else "FE"
    if origin == Origin.GENERATED:
        if level == Likelihood.HIGH:
            return GroupAssignment(Group.A_GROUP, Label.POSITIVE, f"{prefix}.A1")
        if level == Likelihood.MODERATE:
            return GroupAssignment(Group.M_GROUP, None, f"{prefix}.M1")
        return GroupAssignment(Group.DISCARD, None, f"{prefix}.D1")
    if level == Likelihood.LOW:
        return GroupAssignment(Group.A_GROUP, Label.NEGATIVE, f"{prefix}.A2")
    if level == Likelihood.MODERATE:
        return GroupAssignment(Group.M_GROUP, None, f"{prefix}.M2")
    return GroupAssignment(Group.M_GROUP, None, f"{prefix}.M3")


# -- candidate assembly -----------------------------------------------------


def _candidate_classes(model: ProjectModel) -> list[ClassEntity]:
    return [
        cls
        for cls in model.classes
        if cls.kind in (ClassKind.CLASS, ClassKind.ENUM) and not cls.is_anonymous
    ]


def _fe_candidate_targets(m: MethodEntity, cls: ClassEntity, model: ProjectModel) -> list[str]:
    """Classes a reviewer could plausibly move this method to: internal
    foreign classes it touches, plus an internal parent."""
    anc = {a.qualified_name for a in ancestors(model, cls)}
    targets = {
        acc.target.name
        for acc in m.field_accesses
        if acc.target.is_internal
        and acc.target.name != cls.qualified_name
        and acc.target.name not in anc
    }
    if cls.superclass_ref is not None and cls.superclass_ref.is_internal:
        targets.add(cls.superclass_ref.name)
    return sorted(targets)


def collect_original_candidates(
    model: ProjectModel,
    thresholds: Thresholds,
    advisor: AdvisorFn = default_advisor,
) -> list[CandidateSample]:
    """One Large Class candidate per class; one Long Method and one Feature
    Envy candidate per concrete method."""
    out: list[CandidateSample] = []
    for cls in _candidate_classes(model):
        mv = metrics_for_class(cls)
        base = {
            "project": model.project_id,
            "file": cls.file,
            "span": list(cls.span),
            "entity": cls.qualified_name,
        }
        out.append(
            CandidateSample(
                smell=SmellKind.LARGE_CLASS,
                origin=Origin.ORIGINAL,
                entity_source=cls.source_text,
                context_sources={},
                metrics=mv,
                likelihood=likelihood_large_class(mv, thresholds),
                provenance=base,
            )
        )
        advisor_name = getattr(advisor, "__name__", advisor.__class__.__name__)
        for m in cls.methods:
            if m.is_abstract:
                continue
            mv = metrics_for_method(m, model)
            base = {
                "project": model.project_id,
                "file": cls.file,
                "span": list(m.span),
                "entity": f"{cls.qualified_name}.{m.name}/{m.arity}",
            }
            out.append(
                CandidateSample(
                    smell=SmellKind.LONG_METHOD,
                    origin=Origin.ORIGINAL,
                    entity_source=m.source_text,
                    context_sources={},
                    metrics=mv,
                    likelihood=likelihood_long_method(mv, thresholds),
                    advisor=advisor(m, model),
                    provenance={**base, "advisor_source": advisor_name},
                )
            )
            out.append(
                CandidateSample(
                    smell=SmellKind.FEATURE_ENVY,
                    origin=Origin.ORIGINAL,
                    entity_source=m.source_text,
                    context_sources={},
                    metrics=mv,
                    likelihood=likelihood_feature_envy(mv, thresholds),
                    provenance={**base, "candidate_targets": _fe_candidate_targets(m, cls, model)},
                )
            )
    return out


def wrap_generated(samples: list[GeneratedSample], thresholds: Thresholds, project_id: str) -> list[CandidateSample]:
    out = []
    for s in samples:
        provenance = {"project": project_id, **s.provenance}
        out.append(
            CandidateSample(
                smell=s.smell,
                origin=Origin.GENERATED,
                entity_source=s.new_source,
                context_sources=s.context_sources,
                metrics=s.metrics,
                likelihood=likelihood_for(s.smell, s.metrics, thresholds),
                ground_truth=s.ground_truth,
                provenance=provenance,
            )
        )
    return out


def assemble_pool(
    model: ProjectModel,
    thresholds: Thresholds,
    advisor: AdvisorFn = default_advisor,
) -> tuple[list[CandidateSample], list[dict]]:
    """The full candidate pool for a project: generated samples first, then
    the original entities. Returns (candidates, generation discard log)."""
    generated, discards = generate_all(model)
    pool = wrap_generated(generated, thresholds, model.project_id)
    pool.extend(collect_original_candidates(model, thresholds, advisor))
    for cand in pool:
        cand.provenance.setdefault("role", model.role)
    return pool, discards
