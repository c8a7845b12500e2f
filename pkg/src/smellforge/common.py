"""Shared pipeline vocabulary: smells, origins, groups, labels, actions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class SmellKind(str, Enum):
    LONG_METHOD = "LONG_METHOD"
    LARGE_CLASS = "LARGE_CLASS"
    FEATURE_ENVY = "FEATURE_ENVY"


class Origin(str, Enum):
    GENERATED = "GENERATED"
    ORIGINAL = "ORIGINAL"


class Group(str, Enum):
    A_GROUP = "A_GROUP"
    M_GROUP = "M_GROUP"
    DISCARD = "DISCARD"


class Label(str, Enum):
    POSITIVE = "POSITIVE"
    NEGATIVE = "NEGATIVE"


class ActionKind(str, Enum):
    EXTRACT_LINES = "EXTRACT_LINES"
    EXTRACT_MEMBERS = "EXTRACT_MEMBERS"
    MOVE_METHOD = "MOVE_METHOD"


class ActionError(ValueError):
    pass


@dataclass
class RefactoringAction:
    """The refactoring that undoes a smell: extract lines from a long method,
    extract members from a large class, or move an envious method.

    Exactly the payload field matching ``kind`` is populated; line ranges are
    1-based inclusive within the sample's code text.
    """

    kind: ActionKind
    extract_lines: list[tuple[int, int]] | None = None
    extract_members: list[str] | None = None
    move_target: str | None = None

    def validate_shape(self) -> None:
        payloads = {
            ActionKind.EXTRACT_LINES: self.extract_lines,
            ActionKind.EXTRACT_MEMBERS: self.extract_members,
            ActionKind.MOVE_METHOD: self.move_target,
        }
        for kind, value in payloads.items():
            if kind == self.kind:
                if not value:
                    raise ActionError(f"{self.kind.value} action has an empty payload")
            elif value:
                raise ActionError(
                    f"{self.kind.value} action must not carry a {kind.value} payload"
                )
        if self.kind == ActionKind.EXTRACT_LINES:
            for rng in self.extract_lines or []:
                if len(rng) != 2 or rng[0] < 1 or rng[1] < rng[0]:
                    raise ActionError(f"malformed line range: {rng!r}")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "extract_lines": [list(r) for r in self.extract_lines] if self.extract_lines else None,
            "extract_members": list(self.extract_members) if self.extract_members else None,
            "move_target": self.move_target,
        }

    @staticmethod
    def from_dict(d: dict) -> "RefactoringAction":
        return RefactoringAction(
            kind=ActionKind(d["kind"]),
            extract_lines=[tuple(r) for r in d["extract_lines"]] if d.get("extract_lines") else None,
            extract_members=list(d["extract_members"]) if d.get("extract_members") else None,
            move_target=d.get("move_target"),
        )
