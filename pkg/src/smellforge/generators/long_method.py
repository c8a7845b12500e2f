"""Long Method generation: inline a callee into its caller at one call site.

Three invocation shapes are handled, mirroring how the call embeds in its
statement: the call as a whole statement (P1), the call as the right-hand
side of an assignment or initialization (P2), and the call inside a larger
expression (P3). The callee's statements are copied to the call site with
formal parameters textually substituted by the argument expressions; local
name collisions get a ``__mN`` suffix; P2 replaces the right-hand side with
the callee's trailing return expression and P3 routes it through a fresh
temporary. The recorded ground truth is the extract-lines action that undoes
the inline.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..analysis import Resolver
from ..common import ActionKind, RefactoringAction, SmellKind
from ..javaparse import (
    JavaSyntaxError,
    build_match_map,
    effective_loc,
    parse_method_snippet,
    tokenize,
)
from ..metrics import MetricVector
from ..model import CallPattern, ClassEntity, ClassKind, InvocationSite, MethodEntity, ProjectModel
from .base import GeneratedSample, TransformDiscard, build_scope, sweep_method
from .textops import (
    fresh_name,
    leading_ws,
    paren_wrap,
    reindent_block,
    statement_start_index,
    substitute_idents,
    token_at,
    token_ending_at,
)


class MergePattern(str, Enum):
    P1_STATEMENT = "P1_STATEMENT"
    P2_ASSIGNED = "P2_ASSIGNED"
    P3_EXPRESSION = "P3_EXPRESSION"


_PATTERN_FOR_CALL = {
    CallPattern.STATEMENT_CALL: MergePattern.P1_STATEMENT,
    CallPattern.ASSIGNED_RETURN: MergePattern.P2_ASSIGNED,
    CallPattern.EXPRESSION_CALL: MergePattern.P3_EXPRESSION,
}


@dataclass
class MergeCandidateLM:
    caller_class: ClassEntity
    caller: MethodEntity
    callee_class: ClassEntity
    callee: MethodEntity
    site: InvocationSite
    site_ordinal: int  # index of the site within the caller's invocation list
    pattern: MergePattern

    def describe(self) -> str:
        return (
            f"{self.caller.owner}.{self.caller.name}/{self.caller.arity}"
            f" <- {self.callee.owner}.{self.callee.name}/{self.callee.arity}"
            f" @stmt{self.site.statement_index} {self.pattern.value}"
        )


def _trailing_return(callee: MethodEntity) -> tuple[str | None, bool]:
    """(return expression text or None, has trailing return) for the callee's
    final top-level statement."""
    if not callee.body_statements:
        return None, False
    last = callee.body_statements[-1]
    text = last.text.strip()
    if last.kind == "simple" and text.startswith("return"):
        inner = text[len("return") :].strip()
        if inner.endswith(";"):
            inner = inner[:-1].strip()
        return (inner or None), True
    return None, False


def _return_token_count(callee: MethodEntity) -> int:
    tokens = tokenize(callee.source_text)
    return sum(1 for t in tokens if t.kind == "kw" and t.text == "return")


def _self_contained(callee: MethodEntity) -> bool:
    """True when the callee references no own-class state: safe to inline
    across objects (receiver-qualified call sites)."""
    if any(acc.receiver in ("", "this") or acc.receiver.startswith("this.") for acc in callee.field_accesses):
        return False
    if any(inv.receiver in (None, "this", "super") for inv in callee.invocations):
        return False
    tokens = tokenize(callee.source_text)
    return not any(t.kind == "kw" and t.text in ("this", "super") for t in tokens)


def _reaches(model: ProjectModel, start: MethodEntity, goal: MethodEntity) -> bool:
    """Whether ``start`` transitively calls ``goal`` through resolved edges."""
    goal_key = (goal.owner, goal.name, goal.arity)
    index: dict[tuple[str, str, int], MethodEntity] = {}
    for cls in model.classes:
        for m in cls.methods:
            index[(m.owner, m.name, m.arity)] = m
    seen: set[tuple[str, str, int]] = set()
    stack = [(start.owner, start.name, start.arity)]
    while stack:
        key = stack.pop()
        if key in seen:
            continue
        seen.add(key)
        if key == goal_key:
            return True
        method = index.get(key)
        if method is None:
            continue
        for inv in method.invocations:
            if inv.callee is not None:
                stack.append((inv.callee.owner, inv.callee.name, inv.callee.arity))
    return False


def find_merge_candidates_long_method(model: ProjectModel) -> list[MergeCandidateLM]:
    """All (caller, callee, site) triples eligible for method merging."""
    out: list[MergeCandidateLM] = []
    for cls in model.classes:
        if cls.kind in (ClassKind.INTERFACE, ClassKind.ANNOTATION) or cls.is_anonymous:
            continue
        for caller in cls.methods:
            if caller.is_abstract:
                continue
            for ordinal, site in enumerate(caller.invocations):
                if site.callee is None:
                    continue
                callee_cls = model.class_index.get(site.callee.owner)
                if callee_cls is None or callee_cls.is_anonymous:
                    continue
                callee = next(
                    (
                        m
                        for m in callee_cls.methods
                        if m.name == site.callee.name and m.arity == site.callee.arity
                    ),
                    None,
                )
                if callee is None or callee.is_abstract or callee.is_constructor:
                    continue
                if callee is caller:
                    continue
                if callee.type_params:
                    continue
                if any(p.is_vararg for p in callee.parameters) or site.arity != callee.arity:
                    continue
                ret_expr, has_trailing = _trailing_return(callee)
                returns = _return_token_count(callee)
                if returns > 1 or (returns == 1 and not has_trailing):
                    continue  # mid-body returns would change control flow
                pattern = _PATTERN_FOR_CALL[site.pattern]
                if pattern == MergePattern.P1_STATEMENT and ret_expr is not None:
                    continue  # discarded value; restrict to void-style callees
                if pattern != MergePattern.P1_STATEMENT and ret_expr is None:
                    continue  # assignment/expression sites need a value
                body_count = len(callee.body_statements) - (1 if has_trailing else 0)
                if body_count < 1:
                    continue  # nothing to extract
                if "static" in caller.modifiers and "static" not in callee.modifiers:
                    continue
                if site.receiver not in (None, "this") and not _self_contained(callee):
                    continue
                if _reaches(model, callee, caller):
                    continue
                out.append(
                    MergeCandidateLM(
                        caller_class=cls,
                        caller=caller,
                        callee_class=callee_cls,
                        callee=callee,
                        site=site,
                        site_ordinal=ordinal,
                        pattern=pattern,
                    )
                )
    out.sort(
        key=lambda c: (
            c.caller_class.file,
            c.caller.span[0],
            c.site.statement_index,
            c.site_ordinal,
            c.callee.owner,
            c.callee.name,
        )
    )
    return out


def _inline_statements(cand: MergeCandidateLM) -> tuple[list[str], dict[str, str], str | None]:
    """Substituted callee statement texts ready for splicing, the substitution
    map actually applied, and the substituted trailing return expression."""
    callee, caller = cand.callee, cand.caller
    ret_expr, has_trailing = _trailing_return(callee)
    stmts = callee.body_statements[:-1] if has_trailing else list(callee.body_statements)

    mapping: dict[str, str] = {}
    for p, arg in zip(callee.parameters, cand.site.argument_texts):
        mapping[p.name] = paren_wrap(arg)
    caller_names = set(caller.locals) | {p.name for p in caller.parameters}
    taken = (
        caller_names
        | set(callee.locals)
        | {f.name for f in cand.caller_class.fields}
        | {f.name for f in cand.callee_class.fields}
        | set(mapping)
    )
    renames: dict[str, str] = {}
    for local in callee.locals:
        if local in caller_names:
            new = fresh_name(local, taken)
            taken.add(new)
            renames[local] = new
    mapping.update(renames)

    texts = [substitute_idents(s.text, mapping) for s in stmts]
    sub_ret = substitute_idents(ret_expr, mapping) if ret_expr else None
    return [
        reindent_block(text, stmt.start_col, "")
        for text, stmt in zip(texts, stmts)
    ], mapping, sub_ret


def merge_methods(cand: MergeCandidateLM, model: ProjectModel) -> GeneratedSample:
    """Apply the merge; raises TransformDiscard when the rewrite cannot yield
    a well-formed method."""
    caller = cand.caller
    text = caller.source_text
    lines = text.split("\n")
    offset = caller.span[0] - 1  # file line -> text line delta

    tokens = tokenize(text)
    match = build_match_map(tokens)
    es_line, es_col = cand.site.expr_start[0] - offset, cand.site.expr_start[1]
    ee_line, ee_col = cand.site.expr_end[0] - offset, cand.site.expr_end[1]
    start_idx = token_at(tokens, es_line, es_col)
    close_idx = token_ending_at(tokens, ee_line, ee_col)
    if start_idx is None or close_idx is None:
        raise TransformDiscard("call expression not found in caller text")

    inline_texts, mapping, ret_expr = _inline_statements(cand)

    if cand.pattern == MergePattern.P1_STATEMENT:
        semi_idx = close_idx + 1
        if semi_idx >= len(tokens) or tokens[semi_idx].text != ";":
            raise TransformDiscard("statement call not followed by ';'")
        first_line, last_line = es_line, tokens[semi_idx].end_line
        if lines[first_line - 1][:es_col].strip():
            raise TransformDiscard("call statement shares its line with other code")
        if lines[last_line - 1][tokens[semi_idx].end_col :].strip():
            raise TransformDiscard("call statement shares its line with other code")
        indent = leading_ws(lines[first_line - 1])
        block = [reindent_block(t, 0, indent) for t in inline_texts]
        new_lines = lines[: first_line - 1] + "\n".join(block).split("\n") + lines[last_line:]
        insert_at = first_line
        block_len = sum(t.count("\n") + 1 for t in block)
        new_text = "\n".join(new_lines)
    else:
        stmt_tok = statement_start_index(tokens, match, start_idx)
        stmt_line = tokens[stmt_tok].line
        if lines[stmt_line - 1][: tokens[stmt_tok].col].strip():
            raise TransformDiscard("host statement shares its line with other code")
        indent = leading_ws(lines[stmt_line - 1])
        replacement = ret_expr if cand.pattern == MergePattern.P2_ASSIGNED else None
        if cand.pattern == MergePattern.P3_EXPRESSION:
            taken = set(mapping.values()) | set(caller.locals) | {p.name for p in caller.parameters}
            temp = fresh_name(f"{cand.callee.name}Result", taken)
            replacement = temp
        # rewrite the call expression in place (single- or multi-line)
        if es_line == ee_line:
            host = lines[ee_line - 1]
            lines[ee_line - 1] = host[:es_col] + replacement + host[ee_col:]
        else:
            head = lines[es_line - 1][:es_col] + replacement + lines[ee_line - 1][ee_col:]
            lines[es_line - 1 : ee_line] = [head]
        block = [reindent_block(t, 0, indent) for t in inline_texts]
        if cand.pattern == MergePattern.P3_EXPRESSION:
            ret_type = cand.callee.return_type or "Object"
            block.append(f"{indent}{ret_type} {replacement} = {ret_expr};")
        new_lines = lines[: stmt_line - 1] + "\n".join(block).split("\n") + lines[stmt_line - 1 :]
        insert_at = stmt_line
        block_len = sum(t.count("\n") + 1 for t in inline_texts)
        new_text = "\n".join(new_lines)

    try:
        merged = parse_method_snippet(new_text, cand.caller_class.simple_name)
    except (JavaSyntaxError, StopIteration) as exc:
        raise TransformDiscard(f"merged method does not re-parse: {exc}") from exc

    resolver = Resolver(model.classes)
    scope = build_scope(
        model,
        cand.caller_class,
        resolver.ancestors(cand.caller_class),
        import_sources=[cand.caller_class, cand.callee_class],
        extra_names=set(cand.caller_class.type_params) | set(cand.callee_class.type_params),
    )
    unresolved = sweep_method(merged, scope)
    if unresolved:
        raise TransformDiscard(f"unresolved identifiers after merge: {', '.join(unresolved)}")

    extract_range = (insert_at, insert_at + block_len - 1)
    action = RefactoringAction(kind=ActionKind.EXTRACT_LINES, extract_lines=[extract_range])
    provenance = {
        "pattern": cand.pattern.value,
        "caller": {
            "class": cand.caller_class.qualified_name,
            "method": caller.name,
            "arity": caller.arity,
            "file": cand.caller_class.file,
            "span": list(caller.span),
        },
        "callee": {
            "class": cand.callee_class.qualified_name,
            "method": cand.callee.name,
            "arity": cand.callee.arity,
            "file": cand.callee_class.file,
            "span": list(cand.callee.span),
        },
        "statement_index": cand.site.statement_index,
        "site_ordinal": cand.site_ordinal,
        "substitutions": mapping,
        "inlined_lines": list(extract_range),
        "inlined_statements": len(inline_texts),
    }
    return GeneratedSample(
        smell=SmellKind.LONG_METHOD,
        new_source=new_text,
        context_sources={},
        ground_truth=action,
        provenance=provenance,
        metrics=MetricVector(loc=effective_loc(new_text)),
    )
