"""Feature Envy generation: move a method into a related class.

Related classes come from three relations: the owner's parent when the method
touches none of the owner's unique fields (P1), the declared class of an
accessed field (P2), and the declared class of a parameter (P3). Targets are
always project-internal.

The transplanted method is rewired so it still resolves in its new home:
P2 gives the target a field of the source-class type and P3 swaps the target
parameter for a source-class parameter; accesses to target members become
local (``price.amount`` -> ``amount``) while remaining source-member accesses
route through the new field/parameter (``tax`` -> ``book.tax``, ``this`` ->
``book``). P1 moves verbatim after verifying every referenced member is
visible from the parent. The recorded ground truth is the move back to the
original owner.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..analysis import Resolver, fields_used_by, reresolve_class
from ..common import ActionKind, RefactoringAction, SmellKind
from ..javaparse import JavaSyntaxError, build_match_map, parse_class_snippet, parse_method_snippet, tokenize
from ..javaparse import effective_loc
from ..metrics import MetricVector, nfdi
from ..model import ClassEntity, ClassKind, MethodEntity, ProjectModel, unique_fields_of
from .base import GeneratedSample, TransformDiscard, build_scope, sweep_method
from .textops import (
    Edit,
    apply_edits,
    closing_brace_line,
    fresh_name,
    lower_camel,
    member_indent_of,
    reindent_member,
)


class MovePatternFE(str, Enum):
    P1_PARENT = "P1_PARENT"
    P2_PROPERTY = "P2_PROPERTY"
    P3_PARAMETER = "P3_PARAMETER"


@dataclass
class MoveCandidateFE:
    source_class: ClassEntity
    method: MethodEntity
    target_class: ClassEntity
    pattern: MovePatternFE
    via: str | None  # P2: one accessed field of the target type; P3: the parameter name

    def describe(self) -> str:
        return (
            f"{self.method.owner}.{self.method.name}/{self.method.arity}"
            f" -> {self.target_class.qualified_name} {self.pattern.value}"
        )


def _movable_target(cls: ClassEntity | None, source: ClassEntity) -> bool:
    return (
        cls is not None
        and cls.kind == ClassKind.CLASS
        and not cls.is_anonymous
        and not cls.type_params
        and cls.qualified_name != source.qualified_name
    )


def _plain_type(type_text: str) -> bool:
    return "<" not in type_text and "[" not in type_text and "..." not in type_text


def find_move_candidates_feature_envy(model: ProjectModel) -> list[MoveCandidateFE]:
    resolver = Resolver(model.classes)
    out: list[MoveCandidateFE] = []
    for cls in model.classes:
        if cls.kind != ClassKind.CLASS or cls.is_anonymous:
            continue
        for m in cls.methods:
            if m.is_constructor or m.is_abstract or m.type_params:
                continue
            if "static" in m.modifiers:
                continue
            used_fields = fields_used_by(m, cls, resolver)

            if cls.superclass_ref is not None and cls.superclass_ref.is_internal:
                parent = model.class_index.get(cls.superclass_ref.name)
                if _movable_target(parent, cls) and not (
                    used_fields & unique_fields_of(model, cls)
                ):
                    out.append(MoveCandidateFE(cls, m, parent, MovePatternFE.P1_PARENT, None))

            seen_targets: set[str] = set()
            for f in cls.fields:
                if f.name not in used_fields or not f.declared_type.is_internal:
                    continue
                if not _plain_type(f.type_text):
                    continue
                target = model.class_index.get(f.declared_type.name)
                if not _movable_target(target, cls):
                    continue
                if target.qualified_name in seen_targets:
                    continue
                seen_targets.add(target.qualified_name)
                out.append(MoveCandidateFE(cls, m, target, MovePatternFE.P2_PROPERTY, f.name))

            seen_targets = set()
            for p in m.parameters:
                if not p.type_ref.is_internal or not _plain_type(p.type_text) or p.is_vararg:
                    continue
                target = model.class_index.get(p.type_ref.name)
                if not _movable_target(target, cls):
                    continue
                if target.qualified_name in seen_targets:
                    continue
                seen_targets.add(target.qualified_name)
                out.append(MoveCandidateFE(cls, m, target, MovePatternFE.P3_PARAMETER, p.name))
    out.sort(
        key=lambda c: (
            c.source_class.file,
            c.method.span[0],
            c.pattern.value,
            c.target_class.qualified_name,
        )
    )
    return out


def _member_names(cls: ClassEntity, resolver: Resolver) -> set[str]:
    names = {f.name for f in cls.fields} | {m.name for m in cls.methods if not m.is_constructor}
    for anc in resolver.ancestors(cls):
        names.update(f.name for f in anc.fields)
        names.update(m.name for m in anc.methods if not m.is_constructor)
    return names


def _rewrite_moved_method(
    cand: MoveCandidateFE,
    resolver: Resolver,
    new_ref: str,
) -> str:
    """Rewire the method text for its new home (P2/P3). Raises on uses that
    cannot be rewired."""
    m = cand.method
    source, target = cand.source_class, cand.target_class
    text = m.source_text
    tokens = tokenize(text)
    match = build_match_map(tokens)

    if cand.pattern == MovePatternFE.P2_PROPERTY:
        localized = {
            f.name
            for f in source.fields
            if f.declared_type.is_internal and f.declared_type.name == target.qualified_name
        }
        dropped_param = None
    else:
        localized = set()
        dropped_param = cand.via

    local_names = set(m.locals) | {p.name for p in m.parameters if p.name != dropped_param}
    routed = _member_names(source, resolver) - {m.name}

    # the parameter list region is rewritten wholesale (P3); body edits must
    # stay out of it
    name_idx = next(
        (
            i
            for i, t in enumerate(tokens)
            if t.kind == "ident" and t.text == m.name and i + 1 < len(tokens) and tokens[i + 1].text == "("
        ),
        None,
    )
    if name_idx is None:
        raise TransformDiscard("method declaration not found in its own text")
    params_open = name_idx + 1
    params_close = match[params_open]

    edits: list[Edit] = []
    if cand.pattern == MovePatternFE.P3_PARAMETER:
        segments: list[tuple[int, int]] = []
        seg_start = params_open + 1
        i = params_open + 1
        while i < params_close:
            if tokens[i].kind == "op" and tokens[i].text in ("(", "[", "{"):
                i = match[i] + 1
                continue
            if tokens[i].text == ",":
                segments.append((seg_start, i))
                seg_start = i + 1
            i += 1
        segments.append((seg_start, params_close))
        target_seg = None
        for s, e in segments:
            if any(tokens[k].kind == "ident" and tokens[k].text == dropped_param for k in range(s, e)):
                target_seg = (s, e)
                break
        if target_seg is None:
            raise TransformDiscard(f"parameter '{dropped_param}' not found in signature")
        a, b = tokens[target_seg[0]], tokens[target_seg[1] - 1]
        edits.append(
            Edit(a.line, a.col, b.end_line, b.end_col, f"{source.simple_name} {new_ref}")
        )

    idx = params_close + 1
    consumed_until = -1
    while idx < len(tokens):
        if idx <= consumed_until:
            idx += 1
            continue
        t = tokens[idx]
        prev = tokens[idx - 1] if idx > 0 else None
        nxt = tokens[idx + 1] if idx + 1 < len(tokens) else None
        if prev is not None and prev.text in (".", "::", "@"):
            idx += 1
            continue

        if t.kind == "kw" and t.text == "this":
            if nxt is not None and nxt.text == "." and idx + 2 < len(tokens):
                member = tokens[idx + 2]
                after = tokens[idx + 3] if idx + 3 < len(tokens) else None
                if member.text in localized:
                    if after is not None and after.text == ".":
                        # this.price.amount -> amount
                        edits.append(Edit(t.line, t.col, after.end_line, after.end_col, ""))
                        consumed_until = idx + 3
                    elif after is not None and after.text in ("=", "+=", "-=", "*=", "/=", "%="):
                        raise TransformDiscard(
                            f"target-typed field '{member.text}' is reassigned"
                        )
                    else:
                        # this.price as a value -> this
                        edits.append(Edit(t.line, t.col, member.end_line, member.end_col, "this"))
                        consumed_until = idx + 2
                else:
                    # this.tax -> book.tax (any source member or unknown)
                    edits.append(Edit(t.line, t.col, t.end_line, t.end_col, new_ref))
            else:
                # bare this (argument, return value) -> book
                edits.append(Edit(t.line, t.col, t.end_line, t.end_col, new_ref))
            idx += 1
            continue

        if t.kind != "ident":
            idx += 1
            continue

        if t.text in localized or (dropped_param is not None and t.text == dropped_param):
            if nxt is not None and nxt.text == ".":
                # price.amount -> amount / campaign.getRate() -> getRate()
                edits.append(Edit(t.line, t.col, nxt.end_line, nxt.end_col, ""))
                consumed_until = idx + 1
            elif nxt is not None and nxt.text in ("=", "+=", "-=", "*=", "/=", "%="):
                raise TransformDiscard(f"'{t.text}' is reassigned inside the method")
            else:
                # the receiver object itself -> this
                edits.append(Edit(t.line, t.col, t.end_line, t.end_col, "this"))
            idx += 1
            continue

        if t.text in routed and t.text not in local_names:
            edits.append(Edit(t.line, t.col, t.line, t.col, f"{new_ref}."))
        idx += 1

    try:
        return apply_edits(text, edits)
    except ValueError as exc:
        raise TransformDiscard(f"conflicting rewrites: {exc}") from exc


def _verify_parent_visibility(
    cand: MoveCandidateFE, resolver: Resolver
) -> None:
    """P1 precondition beyond unique fields: every bare member the method
    uses must be visible from the parent."""
    m, source, target = cand.method, cand.source_class, cand.target_class
    visible = _member_names(target, resolver)
    for name in fields_used_by(m, source, resolver):
        if name not in visible:
            raise TransformDiscard(f"field '{name}' is not visible from the parent")
    chain = {source.qualified_name}
    for inv in m.invocations:
        if inv.receiver is None and inv.callee is not None and inv.callee.owner in chain:
            if inv.name not in visible:
                raise TransformDiscard(f"method '{inv.name}' is not visible from the parent")
        if inv.receiver == "this" and inv.callee is not None and inv.callee.owner in chain:
            if inv.name not in visible:
                raise TransformDiscard(f"method '{inv.name}' is not visible from the parent")


def move_method(cand: MoveCandidateFE, model: ProjectModel) -> GeneratedSample:
    m = cand.method
    source, target = cand.source_class, cand.target_class
    resolver = Resolver(model.classes)

    if resolver.find_method(target, m.name, m.arity) is not None:
        raise TransformDiscard("name clash at target")

    if cand.pattern == MovePatternFE.P1_PARENT:
        _verify_parent_visibility(cand, resolver)
        moved_text = m.source_text
        new_ref = None
    else:
        taken = (
            _member_names(target, resolver)
            | set(m.locals)
            | {p.name for p in m.parameters}
            | _member_names(source, resolver)
        )
        new_ref = fresh_name(lower_camel(source.simple_name), taken)
        moved_text = _rewrite_moved_method(cand, resolver, new_ref)

    try:
        moved = parse_method_snippet(moved_text)
    except (JavaSyntaxError, StopIteration) as exc:
        raise TransformDiscard(f"moved method does not re-parse: {exc}") from exc

    # assemble the rewritten target class
    target_lines = target.source_text.split("\n")
    close_at = closing_brace_line(target_lines)
    if close_at is None:
        raise TransformDiscard("target closing brace not found")
    indent = member_indent_of(
        [
            target.source_text.split("\n")[e.span[0] - target.span[0]]
            for e in [*target.fields, *target.methods]
        ]
    )
    insert_block: list[str] = []
    if cand.pattern == MovePatternFE.P2_PROPERTY:
        insert_block.extend(["", f"{indent}private {source.simple_name} {new_ref};"])
    insert_block.append("")
    insert_block.extend(reindent_member(moved_text, indent).split("\n"))
    new_target_lines = target_lines[:close_at] + insert_block + target_lines[close_at:]
    new_target_text = "\n".join(new_target_lines)

    try:
        new_target = parse_class_snippet(new_target_text)
    except JavaSyntaxError as exc:
        raise TransformDiscard(f"rewritten target does not re-parse: {exc}") from exc

    # overlay the rewritten target into the model and recompute the moved
    # method's foreign-data profile in its new home
    new_target.qualified_name = target.qualified_name
    new_target.simple_name = target.simple_name
    new_target.package = target.package
    new_target.file = target.file
    new_target.imports = sorted(set(source.imports) | set(target.imports))
    new_target.has_wildcard_import = source.has_wildcard_import or target.has_wildcard_import
    for member in [*new_target.fields, *new_target.methods]:
        member.owner = target.qualified_name
    overlay_classes = [
        c for c in model.classes if c.qualified_name != target.qualified_name
    ] + [new_target]
    reresolve_class(new_target, overlay_classes)
    overlay = ProjectModel(
        project_id=model.project_id,
        classes=overlay_classes,
        files={},
        role=model.role,
    )
    moved_in_target = next(
        (x for x in new_target.methods if x.name == m.name and x.arity == m.arity), None
    )
    if moved_in_target is None:
        raise TransformDiscard("moved method missing from rewritten target")

    scope = build_scope(
        overlay,
        new_target,
        resolver.ancestors(target),
        import_sources=[source, target],
        extra_names={new_ref} if new_ref else set(),
    )
    unresolved = sweep_method(moved_in_target, scope)
    if unresolved:
        raise TransformDiscard(f"unresolved identifiers after move: {', '.join(unresolved)}")

    action = RefactoringAction(kind=ActionKind.MOVE_METHOD, move_target=source.qualified_name)
    provenance = {
        "pattern": cand.pattern.value,
        "method": {
            "name": m.name,
            "arity": m.arity,
            "file": source.file,
            "span": list(m.span),
        },
        "original_owner": source.qualified_name,
        "generation_target": target.qualified_name,
        "via": cand.via,
        "instance_ref": new_ref,
        "candidate_targets": [source.qualified_name, target.qualified_name],
    }
    return GeneratedSample(
        smell=SmellKind.FEATURE_ENVY,
        new_source=moved_in_target.source_text,
        context_sources={
            "target_class": new_target_text,
            "source_class": source.source_text,
        },
        ground_truth=action,
        provenance=provenance,
        metrics=MetricVector(
            loc=effective_loc(moved_in_target.source_text),
            nfdi=nfdi(moved_in_target, overlay),
        ),
    )
