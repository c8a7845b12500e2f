"""Token-aware text surgery shared by the transformations.

All edits address (line, col) coordinates in the text being rewritten
(1-based lines, 0-based cols, end-exclusive) and are applied back-to-front so
earlier coordinates stay valid.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..javaparse import Token, tokenize


@dataclass(frozen=True)
class Edit:
    line: int
    col: int
    end_line: int
    end_col: int
    replacement: str


def apply_edits(text: str, edits: list[Edit]) -> str:
    if not edits:
        return text
    ordered = sorted(edits, key=lambda e: (e.line, e.col), reverse=True)
    for a, b in zip(ordered, ordered[1:]):
        if (b.end_line, b.end_col) > (a.line, a.col):
            raise ValueError(f"overlapping edits at line {a.line}")
    lines = text.split("\n")
    for e in ordered:
        head = lines[e.line - 1][: e.col]
        tail = lines[e.end_line - 1][e.end_col :]
        merged = (head + e.replacement + tail).split("\n")
        lines[e.line - 1 : e.end_line] = merged
    return "\n".join(lines)


def substitute_idents(text: str, mapping: dict[str, str]) -> str:
    """Replace free identifier tokens per ``mapping``. Tokens reached through
    ``.``/``::``/``@`` are member or annotation positions and stay untouched."""
    if not mapping:
        return text
    tokens = tokenize(text)
    edits: list[Edit] = []
    for idx, tok in enumerate(tokens):
        if tok.kind != "ident" or tok.text not in mapping:
            continue
        if idx > 0 and tokens[idx - 1].text in (".", "::", "@"):
            continue
        edits.append(Edit(tok.line, tok.col, tok.end_line, tok.end_col, mapping[tok.text]))
    return apply_edits(text, edits)


def is_atomic_expr(text: str) -> bool:
    """True when substituting the expression needs no protective parens:
    a lone token, a dotted name chain, or an already-parenthesized group."""
    try:
        tokens = tokenize(text)
    except Exception:
        return False
    if not tokens:
        return False
    if len(tokens) == 1:
        return True
    if all(
        t.kind in ("ident", "num", "str", "char")
        or (t.kind == "kw" and t.text in ("this", "true", "false", "null"))
        or t.text == "."
        for t in tokens
    ):
        return True
    if tokens[0].text == "(":
        depth = 0
        for i, t in enumerate(tokens):
            if t.text == "(":
                depth += 1
            elif t.text == ")":
                depth -= 1
                if depth == 0:
                    return i == len(tokens) - 1
    return False


def paren_wrap(expr: str) -> str:
    return expr if is_atomic_expr(expr) else f"({expr})"


def fresh_name(base: str, taken: set[str]) -> str:
    if base not in taken:
        return base
    n = 1
    while f"{base}__m{n}" in taken:
        n += 1
    return f"{base}__m{n}"


def lower_camel(simple_name: str) -> str:
    cleaned = simple_name.replace("$", "_")
    return cleaned[:1].lower() + cleaned[1:] if cleaned else "ref"


def leading_ws(line: str) -> str:
    return line[: len(line) - len(line.lstrip())]


def reindent_block(text: str, base_col: int, indent: str) -> str:
    """Re-anchor a statement/member text (whose first line starts at column 0
    of the slice but sat at ``base_col`` in its original source) to ``indent``."""
    lines = text.split("\n")
    out = [indent + lines[0]]
    for line in lines[1:]:
        stripped = line
        removed = 0
        while removed < base_col and stripped[:1] in (" ", "\t"):
            stripped = stripped[1:]
            removed += 1
        out.append(indent + stripped if stripped.strip() else stripped.strip())
    return "\n".join(out)


def reindent_member(text: str, new_indent: str) -> str:
    """Re-anchor a whole-line member text (which carries its original
    indentation) to ``new_indent``."""
    lines = text.split("\n")
    old_indent = leading_ws(lines[0])
    out = []
    for line in lines:
        if line.startswith(old_indent):
            line = new_indent + line[len(old_indent) :]
        elif line.strip():
            line = new_indent + line.lstrip()
        out.append(line)
    return "\n".join(out)


def member_indent_of(members_first_lines: list[str]) -> str:
    for line in members_first_lines:
        indent = leading_ws(line)
        if indent:
            return indent
    return "    "


def closing_brace_line(lines: list[str]) -> int | None:
    for i in range(len(lines) - 1, -1, -1):
        if lines[i].strip() == "}":
            return i
    return None


def token_at(tokens: list[Token], line: int, col: int) -> int | None:
    for i, t in enumerate(tokens):
        if t.line == line and t.col == col:
            return i
    return None


def token_ending_at(tokens: list[Token], end_line: int, end_col: int) -> int | None:
    for i, t in enumerate(tokens):
        if t.end_line == end_line and t.end_col == end_col:
            return i
    return None


def _is_expr_brace(tokens: list[Token], open_idx: int) -> bool:
    """True for braces that live inside an expression (array initializers,
    lambda bodies) rather than opening a block statement or body."""
    if open_idx == 0:
        return False
    prev = tokens[open_idx - 1].text
    return prev in ("=", ",", "[", "]", "(", "->", "return")


def statement_start_index(tokens: list[Token], match: dict[int, int], idx: int) -> int:
    """Index of the first token of the statement containing ``idx``, found by
    walking back over balanced groups to the nearest statement boundary."""
    i = idx - 1
    while i >= 0:
        t = tokens[i]
        if t.kind == "op":
            if t.text == ";":
                return i + 1
            if t.text in (")", "]"):
                opener = match.get(i)
                if opener is None:
                    break
                i = opener - 1
                continue
            if t.text == "}":
                opener = match.get(i)
                if opener is None:
                    break
                if _is_expr_brace(tokens, opener):
                    i = opener - 1
                    continue
                return i + 1
            if t.text == "{":
                if _is_expr_brace(tokens, i):
                    i -= 1
                    continue
                return i + 1
        i -= 1
    return 0
