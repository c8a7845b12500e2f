"""Baseline metrics (LOC, NOM, NOA, NFDI) and per-smell possibility ranges.

LOC counts effective lines: any line in the entity span bearing at least one
token that is neither whitespace nor comment, signature and brace lines
included. NFDI counts *occurrences* (not distinct members) of field reads,
field writes, and method calls whose resolved target class is project-internal
and is neither the method's owner nor one of its ancestors — accessing
inherited state is not foreign.

The Long Method grouping rules additionally consult an Advisor, a pluggable
pre-screen for original methods. The default heuristic flags a method when it
is deeply nested, takes many parameters, or touches many distinct foreign
classes; swap in anything with the same signature via the pipeline config.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from . import javaparse
from .model import ClassEntity, MethodEntity, ProjectModel, ancestors


class Likelihood(str, Enum):
    LOW = "LOW"
    MODERATE = "MODERATE"
    HIGH = "HIGH"

    @property
    def rank(self) -> int:
        return {"LOW": 0, "MODERATE": 1, "HIGH": 2}[self.value]


class Verdict(str, Enum):
    POSITIVE = "POSITIVE"
    NEGATIVE = "NEGATIVE"


@dataclass
class MetricVector:
    loc: int
    nom: int | None = None  # classes only
    noa: int | None = None  # classes only
    nfdi: int | None = None  # methods only

    def to_dict(self) -> dict:
        return {"loc": self.loc, "nom": self.nom, "noa": self.noa, "nfdi": self.nfdi}

    @staticmethod
    def from_dict(d: dict) -> "MetricVector":
        return MetricVector(loc=d["loc"], nom=d["nom"], noa=d["noa"], nfdi=d["nfdi"])


@dataclass(frozen=True)
class Thresholds:
    lm_min: int = 15
    lm_max: int = 30
    lc_min_loc: int = 70
    lc_min_nom: int = 7
    lc_min_noa: int = 5
    lc_max_loc: int = 130
    lc_max_nom: int = 10
    lc_max_noa: int = 10
    fe_min: int = 2
    fe_max: int = 5

    def __post_init__(self) -> None:
        pairs = [
            ("lm", self.lm_min, self.lm_max),
            ("lc loc", self.lc_min_loc, self.lc_max_loc),
            ("lc nom", self.lc_min_nom, self.lc_max_nom),
            ("lc noa", self.lc_min_noa, self.lc_max_noa),
            ("fe", self.fe_min, self.fe_max),
        ]
        for label, lo, hi in pairs:
            if lo >= hi:
                raise ValueError(f"threshold {label}: min ({lo}) must be < max ({hi})")

    @staticmethod
    def from_overrides(overrides: dict | None) -> "Thresholds":
        if not overrides:
            return Thresholds()
        known = set(Thresholds.__dataclass_fields__)
        bad = set(overrides) - known
        if bad:
            raise ValueError(f"unknown threshold keys: {sorted(bad)}")
        return Thresholds(**overrides)

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


# -- metric computations ------------------------------------------------------


def loc(entity: MethodEntity | ClassEntity) -> int:
    return javaparse.effective_loc(entity.source_text)


def nom(cls: ClassEntity) -> int:
    return len(cls.methods)


def noa(cls: ClassEntity) -> int:
    return len(cls.fields)


def nfdi(m: MethodEntity, model: ProjectModel) -> int:
    owner = model.class_index.get(m.owner)
    ancestor_names: set[str] = set()
    if owner is not None:
        ancestor_names = {a.qualified_name for a in ancestors(model, owner)}
    count = 0
    for acc in m.field_accesses:
        if not acc.target.is_internal:
            continue
        if acc.target.name == m.owner or acc.target.name in ancestor_names:
            continue
        count += 1
    return count


def metrics_for_method(m: MethodEntity, model: ProjectModel) -> MetricVector:
    return MetricVector(loc=loc(m), nfdi=nfdi(m, model))


def metrics_for_class(cls: ClassEntity) -> MetricVector:
    return MetricVector(loc=loc(cls), nom=nom(cls), noa=noa(cls))


# -- possibility ranges ---------------------------------------------------------
# Boundary policy: MODERATE is the closed interval [min, max]; HIGH is
# strictly above max, LOW strictly below min.


def likelihood_long_method(v: MetricVector, t: Thresholds) -> Likelihood:
    if v.loc < t.lm_min:
        return Likelihood.LOW
    if v.loc <= t.lm_max:
        return Likelihood.MODERATE
    return Likelihood.HIGH


def likelihood_large_class(v: MetricVector, t: Thresholds) -> Likelihood:
    if v.nom is None or v.noa is None:
        raise ValueError("large-class likelihood needs nom and noa")
    if v.loc > t.lc_max_loc and v.nom > t.lc_max_nom and v.noa > t.lc_max_noa:
        return Likelihood.HIGH
    if v.loc < t.lc_min_loc and v.nom < t.lc_min_nom and v.noa < t.lc_min_noa:
        return Likelihood.LOW
    return Likelihood.MODERATE


def likelihood_feature_envy(v: MetricVector, t: Thresholds) -> Likelihood:
    if v.nfdi is None:
        raise ValueError("feature-envy likelihood needs nfdi")
    if v.nfdi < t.fe_min:
        return Likelihood.LOW
    if v.nfdi <= t.fe_max:
        return Likelihood.MODERATE
    return Likelihood.HIGH


# -- Advisor -----------------------------------------------------------------

AdvisorFn = Callable[[MethodEntity, Optional[ProjectModel]], Verdict]

MAX_NESTING = 3
MAX_PARAMS = 4
MAX_FOREIGN_CLASSES = 3


def body_nesting_depth(m: MethodEntity) -> int:
    """Maximum brace depth inside the method body (body block itself is 0)."""
    if m.is_abstract:
        return 0
    tokens = javaparse.tokenize(m.source_text)
    depth = -1  # the body '{' lifts this to 0
    max_depth = 0
    seen_body = False
    for tok in tokens:
        if tok.kind != "op":
            continue
        if tok.text == "{":
            depth += 1
            seen_body = True
            max_depth = max(max_depth, depth)
        elif tok.text == "}":
            depth -= 1
    return max_depth if seen_body else 0


def _distinct_foreign_classes(m: MethodEntity, model: ProjectModel | None) -> int:
    ancestor_names: set[str] = set()
    if model is not None:
        owner = model.class_index.get(m.owner)
        if owner is not None:
            ancestor_names = {a.qualified_name for a in ancestors(model, owner)}
    targets = {
        acc.target.name
        for acc in m.field_accesses
        if acc.target.is_internal
        and acc.target.name != m.owner
        and acc.target.name not in ancestor_names
    }
    return len(targets)


def default_advisor(m: MethodEntity, model: ProjectModel | None = None) -> Verdict:
    """Default Long Method pre-screen; a stand-in, not normative."""
    if body_nesting_depth(m) > MAX_NESTING:
        return Verdict.POSITIVE
    if len(m.parameters) > MAX_PARAMS:
        return Verdict.POSITIVE
    if _distinct_foreign_classes(m, model) > MAX_FOREIGN_CLASSES:
        return Verdict.POSITIVE
    return Verdict.NEGATIVE
