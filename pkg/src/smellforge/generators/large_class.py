"""Large Class generation: merge a related class into an absorber.

Two relations create merge opportunities: the absorber's direct superclass
(P1) and a class used as the declared type of one of the absorber's fields
(P2). All fields and concrete non-constructor methods of the absorbed class
are copied into the absorber. P1 additionally re-targets the ``extends``
clause at the absorbed class's own parent (or drops it), rewrites ``super.``
references to ``this.``, and deletes ``super(...)`` delegations that would
dangle; P2 deletes the absorbed-type field(s) and makes the merged members
local (``cart.items`` becomes ``items``). Candidates whose deleted field is
used outside member access, or whose rewrite fails to re-parse or leaves
unresolved names, are discarded with a reason.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..analysis import Resolver
from ..common import ActionKind, RefactoringAction, SmellKind
from ..javaparse import JavaSyntaxError, build_match_map, parse_class_snippet, skip_angles, tokenize
from ..metrics import metrics_for_class
from ..model import ClassEntity, ClassKind, ProjectModel
from .base import GeneratedSample, TransformDiscard, build_scope, sweep_class
from .textops import (
    Edit,
    apply_edits,
    closing_brace_line,
    member_indent_of,
    reindent_member,
)


class MergePatternLC(str, Enum):
    P1_INHERITANCE = "P1_INHERITANCE"
    P2_USAGE = "P2_USAGE"


@dataclass
class MergeCandidateLC:
    absorber: ClassEntity
    absorbed: ClassEntity
    pattern: MergePatternLC
    usage_fields: list[str] = field(default_factory=list)  # P2: absorber fields of the absorbed type

    def describe(self) -> str:
        return f"{self.absorber.qualified_name} <- {self.absorbed.qualified_name} {self.pattern.value}"


def _copyable_members(absorbed: ClassEntity) -> tuple[list[tuple[tuple[int, int], str]], list[str]]:
    """((span, text) blocks in declaration order, member names). Multi-name
    field declarations contribute one block but every declarator name."""
    blocks: dict[tuple[int, int], str] = {}
    names: list[str] = []
    for f in absorbed.fields:
        if f.span not in blocks:
            blocks[f.span] = f.source_text
        names.append(f.name)
    for m in absorbed.methods:
        if m.is_constructor or m.is_abstract:
            continue
        blocks[m.span] = m.source_text
        names.append(m.name)
    ordered = sorted(blocks.items(), key=lambda kv: kv[0])
    return ordered, names


def _mergeable_class(cls: ClassEntity) -> bool:
    return cls.kind == ClassKind.CLASS and not cls.is_anonymous and not cls.type_params


def find_merge_candidates_large_class(model: ProjectModel) -> list[MergeCandidateLC]:
    out: list[MergeCandidateLC] = []
    for cls in model.classes:
        if not _mergeable_class(cls):
            continue
        own_names = {f.name for f in cls.fields} | {
            m.name for m in cls.methods if not m.is_constructor
        }

        def admit(absorbed: ClassEntity, pattern: MergePatternLC, usage_fields: list[str]) -> None:
            if not _mergeable_class(absorbed) or absorbed.qualified_name == cls.qualified_name:
                return
            _, copied_names = _copyable_members(absorbed)
            if not copied_names:
                return  # nothing to extract afterwards
            if own_names & set(copied_names):
                return  # member-name collision
            out.append(MergeCandidateLC(cls, absorbed, pattern, usage_fields))

        if cls.superclass_ref is not None and cls.superclass_ref.is_internal:
            parent = model.class_index.get(cls.superclass_ref.name)
            if parent is not None:
                admit(parent, MergePatternLC.P1_INHERITANCE, [])
        by_target: dict[str, list[str]] = {}
        for f in cls.fields:
            if not f.declared_type.is_internal:
                continue
            if "<" in f.type_text or "[" in f.type_text:
                continue  # only plain part-of relations
            by_target.setdefault(f.declared_type.name, []).append(f.name)
        for target_name in sorted(by_target):
            target = model.class_index.get(target_name)
            if target is not None:
                admit(target, MergePatternLC.P2_USAGE, by_target[target_name])
    out.sort(
        key=lambda c: (
            c.absorber.file,
            c.absorber.span[0],
            c.pattern.value,
            c.absorbed.qualified_name,
        )
    )
    return out


def _simple(name: str) -> str:
    return name.rsplit("$", 1)[-1].rsplit(".", 1)[-1]


def _extends_edit(cand: MergeCandidateLC, tokens, match) -> Edit:
    """Locate ``extends Parent`` in the absorber header and produce the edit
    replacing it with the absorbed class's own extends clause (or nothing)."""
    header_end = None
    for idx, t in enumerate(tokens):
        if t.text == "{":
            header_end = idx
            break
    if header_end is None:
        raise TransformDiscard("absorber header has no body brace")
    i = 0
    ext_idx = None
    while i < header_end:
        t = tokens[i]
        if t.text == "<":
            i = skip_angles(tokens, i)
            continue
        if t.kind == "kw" and t.text == "extends":
            ext_idx = i
            break
        i += 1
    if ext_idx is None:
        raise TransformDiscard("absorber lost its extends clause")
    j = ext_idx + 1
    while j < header_end:
        t = tokens[j]
        if t.kind == "kw" and t.text == "implements":
            break
        if t.text == "<":
            j = skip_angles(tokens, j)
            continue
        if t.kind not in ("ident",) and t.text != ".":
            break
        j += 1
    end_tok = tokens[j - 1]
    sup = cand.absorbed.superclass_ref
    if sup is None:
        replacement = ""
    elif sup.is_internal:
        replacement = f"extends {_simple(sup.name)}"
    else:
        replacement = f"extends {sup.name}"
    start = tokens[ext_idx]
    start_col = start.col
    if replacement == "" and start_col > 0:
        start_col -= 1  # swallow the separating space as well
    return Edit(start.line, start_col, end_tok.end_line, end_tok.end_col, replacement)


def merge_classes(cand: MergeCandidateLC, model: ProjectModel) -> GeneratedSample:
    absorber = cand.absorber
    text = absorber.source_text
    try:
        snap = parse_class_snippet(text)
    except JavaSyntaxError as exc:
        raise TransformDiscard(f"absorber does not re-parse standalone: {exc}") from exc
    tokens = tokenize(text)
    match = build_match_map(tokens)
    edits: list[Edit] = []
    deleted_fields: list[str] = []

    lines = text.split("\n")
    if cand.pattern == MergePatternLC.P1_INHERITANCE:
        edits.append(_extends_edit(cand, tokens, match))
        for idx, t in enumerate(tokens):
            if t.kind == "kw" and t.text == "super" and idx + 1 < len(tokens):
                if tokens[idx + 1].text == ".":
                    edits.append(Edit(t.line, t.col, t.end_line, t.end_col, "this"))
        for m in snap.methods:
            if not m.is_constructor or not m.body_statements:
                continue
            first = m.body_statements[0]
            head = first.text.lstrip()
            if head.startswith("super") and head[len("super") :].lstrip().startswith("("):
                edits.append(
                    Edit(
                        first.start_line,
                        first.start_col,
                        first.end_line,
                        len(lines[first.end_line - 1]),
                        "",
                    )
                )
    else:
        field_names = set(cand.usage_fields)
        decl_spans = {f.span for f in snap.fields if f.name in field_names}
        for span in decl_spans:
            edits.append(Edit(span[0], 0, span[1], len(lines[span[1] - 1]), ""))
        deleted_fields = sorted(field_names)
        decl_lines = {ln for span in decl_spans for ln in range(span[0], span[1] + 1)}
        for idx, t in enumerate(tokens):
            if t.kind != "ident" or t.text not in field_names or t.line in decl_lines:
                continue
            prev = tokens[idx - 1] if idx > 0 else None
            prev2 = tokens[idx - 2] if idx > 1 else None
            nxt = tokens[idx + 1] if idx + 1 < len(tokens) else None
            if prev is not None and prev.text in ("::", "@"):
                continue
            this_qualified = (
                prev is not None
                and prev.text == "."
                and prev2 is not None
                and prev2.kind == "kw"
                and prev2.text == "this"
            )
            if prev is not None and prev.text == "." and not this_qualified:
                continue  # another receiver's member that shares the name
            if nxt is not None and nxt.text == ".":
                # strip the receiver: cart.items -> items, this.cart.items -> this.items
                edits.append(Edit(t.line, t.col, nxt.end_line, nxt.end_col, ""))
                continue
            if nxt is not None and nxt.text == "=":
                stmt = _initializer_statement(tokens, match, idx, cand.absorbed)
                if stmt is not None:
                    s_tok, e_tok = stmt
                    edits.append(Edit(s_tok.line, s_tok.col, e_tok.end_line, e_tok.end_col, ""))
                    continue
            raise TransformDiscard(
                f"field '{t.text}' used outside member access at line {t.line}"
            )

    try:
        rewritten = apply_edits(text, _dedupe_edits(edits))
    except ValueError as exc:
        raise TransformDiscard(f"conflicting rewrites: {exc}") from exc

    blocks, copied_names = _copyable_members(cand.absorbed)
    member_indent = member_indent_of(
        [text.split("\n")[m.span[0] - 1] for m in [*snap.fields, *snap.methods]]
    )
    new_lines = rewritten.split("\n")
    close_at = closing_brace_line(new_lines)
    if close_at is None:
        raise TransformDiscard("absorber closing brace not found")
    insert_block: list[str] = []
    for _, block_text in blocks:
        insert_block.append("")
        insert_block.extend(reindent_member(block_text, member_indent).split("\n"))
    new_lines[close_at:close_at] = insert_block
    merged_text = "\n".join(new_lines)

    try:
        merged = parse_class_snippet(merged_text)
    except JavaSyntaxError as exc:
        raise TransformDiscard(f"merged class does not re-parse: {exc}") from exc

    expected = (
        ({f.name for f in absorber.fields} - set(deleted_fields))
        | {m.name for m in absorber.methods}
        | set(copied_names)
    )
    got = {f.name for f in merged.fields} | {m.name for m in merged.methods}
    if got != expected:
        raise TransformDiscard(
            f"merged member set mismatch: missing {sorted(expected - got)}, stray {sorted(got - expected)}"
        )

    resolver = Resolver(model.classes)
    if cand.pattern == MergePatternLC.P1_INHERITANCE:
        ancestor_classes = resolver.ancestors(cand.absorbed)
    else:
        ancestor_classes = resolver.ancestors(absorber)
    scope = build_scope(
        model,
        merged,
        ancestor_classes,
        import_sources=[absorber, cand.absorbed],
    )
    unresolved = sweep_class(merged, scope)
    if unresolved:
        raise TransformDiscard(f"unresolved identifiers after merge: {', '.join(unresolved)}")

    ordered_names = list(dict.fromkeys(copied_names))
    action = RefactoringAction(kind=ActionKind.EXTRACT_MEMBERS, extract_members=ordered_names)
    provenance = {
        "pattern": cand.pattern.value,
        "absorber": {
            "class": absorber.qualified_name,
            "file": absorber.file,
            "span": list(absorber.span),
        },
        "absorbed": {
            "class": cand.absorbed.qualified_name,
            "file": cand.absorbed.file,
            "span": list(cand.absorbed.span),
        },
        "copied_members": ordered_names,
        "deleted_fields": deleted_fields,
    }
    return GeneratedSample(
        smell=SmellKind.LARGE_CLASS,
        new_source=merged_text,
        context_sources={"absorbed_class": cand.absorbed.source_text},
        ground_truth=action,
        provenance=provenance,
        metrics=metrics_for_class(merged),
    )


def _dedupe_edits(edits: list[Edit]) -> list[Edit]:
    seen = set()
    out = []
    for e in edits:
        key = (e.line, e.col, e.end_line, e.end_col)
        if key not in seen:
            seen.add(key)
            out.append(e)
    return out


def _initializer_statement(tokens, match, idx, absorbed: ClassEntity):
    """For ``[this.]f = new AbsorbedType(...);`` return (first, last) tokens
    of the whole statement so it can be deleted; otherwise None."""
    i = idx + 1  # '='
    if tokens[i].text != "=":
        return None
    j = i + 1
    if j >= len(tokens) or not (tokens[j].kind == "kw" and tokens[j].text == "new"):
        return None
    j += 1
    parts = []
    while j < len(tokens) and tokens[j].kind == "ident":
        parts.append(tokens[j].text)
        j += 1
        if j < len(tokens) and tokens[j].text == ".":
            j += 1
            continue
        break
    if not parts or _simple(".".join(parts)) != _simple(absorbed.qualified_name):
        return None
    if j >= len(tokens) or tokens[j].text != "(":
        return None
    j = match[j] + 1
    if j >= len(tokens) or tokens[j].text != ";":
        return None
    start = idx
    if idx >= 2 and tokens[idx - 1].text == "." and tokens[idx - 2].text == "this":
        start = idx - 2
    return tokens[start], tokens[j]
