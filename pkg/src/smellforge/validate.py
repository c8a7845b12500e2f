"""Dataset-level invariant checks backing the `validate` subcommand."""

from __future__ import annotations

from .common import Group, Label, Origin, SmellKind
from .metrics import Thresholds
from .store import SampleRecord, record_id


def validate_dataset(records: list[SampleRecord], thresholds: Thresholds) -> list[str]:
    """Every violated invariant as a human-readable problem string."""
    problems: list[str] = []
    t = thresholds

    seen_ids: dict[str, int] = {}
    project_splits: dict[str, set[str]] = {}
    for i, r in enumerate(records):
        where = f"record {i} (id {r.id})"

        if r.id in seen_ids:
            problems.append(f"{where}: duplicate id (first at record {seen_ids[r.id]})")
        else:
            seen_ids[r.id] = i

        project = r.provenance.get("project", "")
        recomputed = record_id(project, r.smell, r.origin, r.provenance)
        if recomputed != r.id:
            problems.append(f"{where}: id does not match its provenance (expected {recomputed})")

        if r.split not in ("TRAIN", "EVAL"):
            problems.append(f"{where}: invalid split {r.split!r}")
        project_splits.setdefault(project, set()).add(r.split)

        if r.label is None:
            problems.append(f"{where}: exported record has no label")
            continue
        source = r.provenance.get("label_source", "")
        if r.group == Group.A_GROUP and not source.startswith("rule:"):
            problems.append(f"{where}: A_Group record lacks a rule label source")
        if r.group == Group.M_GROUP and not source.startswith("reviewer:"):
            problems.append(f"{where}: labeled M_Group record lacks a reviewer label source")

        if r.label == Label.POSITIVE and r.ground_truth is None:
            problems.append(f"{where}: positive record has no refactoring action")
        if r.origin == Origin.GENERATED and r.ground_truth is None:
            problems.append(f"{where}: generated record has no ground-truth action")

        if r.group == Group.A_GROUP:
            problems.extend(_check_bounds(where, r, t))

    for project, splits in project_splits.items():
        if len(splits) > 1:
            problems.append(
                f"project {project!r} contributes to multiple splits: {sorted(splits)}"
            )
    return problems


def _check_bounds(where: str, r: SampleRecord, t: Thresholds) -> list[str]:
    problems = []
    m = r.metrics
    if r.smell == SmellKind.LONG_METHOD:
        if r.label == Label.POSITIVE and m.loc <= t.lm_max:
            problems.append(f"{where}: A_Group Long Method positive with LOC {m.loc} <= {t.lm_max}")
        if r.label == Label.NEGATIVE and m.loc >= t.lm_min:
            problems.append(f"{where}: A_Group Long Method negative with LOC {m.loc} >= {t.lm_min}")
    elif r.smell == SmellKind.FEATURE_ENVY:
        if r.label == Label.POSITIVE and (m.nfdi is None or m.nfdi <= t.fe_max):
            problems.append(f"{where}: A_Group Feature Envy positive with NFDI {m.nfdi} <= {t.fe_max}")
        if r.label == Label.NEGATIVE and (m.nfdi is None or m.nfdi >= t.fe_min):
            problems.append(f"{where}: A_Group Feature Envy negative with NFDI {m.nfdi} >= {t.fe_min}")
    else:
        if r.label == Label.POSITIVE and not (
            m.loc > t.lc_max_loc
            and (m.nom or 0) > t.lc_max_nom
            and (m.noa or 0) > t.lc_max_noa
        ):
            problems.append(
                f"{where}: A_Group Large Class positive below max thresholds "
                f"(loc={m.loc}, nom={m.nom}, noa={m.noa})"
            )
        if r.label == Label.NEGATIVE and not (
            m.loc < t.lc_min_loc
            and (m.nom if m.nom is not None else t.lc_min_nom) < t.lc_min_nom
            and (m.noa if m.noa is not None else t.lc_min_noa) < t.lc_min_noa
        ):
            problems.append(
                f"{where}: A_Group Large Class negative above min thresholds "
                f"(loc={m.loc}, nom={m.nom}, noa={m.noa})"
            )
    return problems
