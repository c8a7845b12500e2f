"""Structural Java parser: tokens, statements, members, entities.

This is not a full Java front end. It recovers exactly the structure the
pipeline needs — class and member boundaries, method body statements (top
level plus one nesting level), invocation sites with their embedding pattern,
and member-access sites — while treating expressions as opaque token runs.
Anything it cannot account for raises :class:`JavaSyntaxError`; callers skip
the file or discard the transformed sample, which keeps every entity that
does enter the model structurally sound.

Entities come out with *unresolved* references (receivers and type names are
raw text). Cross-class resolution lives in :mod:`smellforge.analysis`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import (
    AccessKind,
    CallPattern,
    ClassEntity,
    ClassKind,
    FieldAccessSite,
    FieldEntity,
    InvocationSite,
    MethodEntity,
    Param,
    Statement,
    TypeRef,
)


class JavaSyntaxError(Exception):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"{message} (line {line}, col {col})")
        self.message = message
        self.line = line
        self.col = col


KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while""".split()
)

MODIFIERS = frozenset(
    """public private protected static final abstract synchronized native
    strictfp transient volatile default""".split()
)

PRIMITIVES = frozenset("boolean byte char short int long float double void".split())

_OPS4 = (">>>=",)
_OPS3 = (">>>", "<<=", ">>=", "...")
_OPS2 = (
    "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=", "/=",
    "%=", "&=", "|=", "^=", "<<", ">>", "->", "::",
)

ASSIGN_OPS = frozenset(
    ("=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>=")
)


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "kw", "num", "str", "char", "op"
    text: str
    line: int  # 1-based
    col: int  # 0-based
    end_line: int
    end_col: int  # exclusive


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    n = len(text)
    i = 0
    line = 1
    col = 0

    def advance(k: int) -> None:
        nonlocal i, line, col
        for _ in range(k):
            if text[i] == "\n":
                line += 1
                col = 0
            else:
                col += 1
            i += 1

    while i < n:
        c = text[i]
        if c in " \t\r\n\f":
            advance(1)
            continue
        if c == "/" and i + 1 < n:
            if text[i + 1] == "/":
                while i < n and text[i] != "\n":
                    advance(1)
                continue
            if text[i + 1] == "*":
                sl, sc = line, col
                advance(2)
                while i + 1 < n and not (text[i] == "*" and text[i + 1] == "/"):
                    advance(1)
                if i + 1 >= n:
                    raise JavaSyntaxError("unterminated block comment", sl, sc)
                advance(2)
                continue
        if c.isalpha() or c in "_$":
            sl, sc = line, col
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_$"):
                j += 1
            word = text[i:j]
            advance(j - i)
            tokens.append(Token("kw" if word in KEYWORDS else "ident", word, sl, sc, line, col))
            continue
        if c.isdigit():
            sl, sc = line, col
            j = i
            while j < n:
                ch = text[j]
                if ch.isalnum() or ch == "_":
                    j += 1
                elif ch == "." and j + 1 < n and (text[j + 1].isdigit() or text[j + 1] in "eEfFdD"):
                    j += 1
                elif ch in "+-" and j > i and text[j - 1] in "eEpP":
                    j += 1
                else:
                    break
            word = text[i:j]
            advance(j - i)
            tokens.append(Token("num", word, sl, sc, line, col))
            continue
        if c == '"':
            sl, sc = line, col
            if text[i : i + 3] == '"""':
                advance(3)
                while i + 2 < n and text[i : i + 3] != '"""':
                    if text[i] == "\\":
                        advance(1)
                    advance(1)
                if text[i : i + 3] != '"""':
                    raise JavaSyntaxError("unterminated text block", sl, sc)
                advance(3)
            else:
                advance(1)
                while i < n and text[i] != '"':
                    if text[i] == "\n":
                        raise JavaSyntaxError("unterminated string literal", sl, sc)
                    if text[i] == "\\":
                        advance(1)
                    advance(1)
                if i >= n:
                    raise JavaSyntaxError("unterminated string literal", sl, sc)
                advance(1)
            tokens.append(Token("str", "<str>", sl, sc, line, col))
            continue
        if c == "'":
            sl, sc = line, col
            advance(1)
            while i < n and text[i] != "'":
                if text[i] == "\\":
                    advance(1)
                advance(1)
            if i >= n:
                raise JavaSyntaxError("unterminated char literal", sl, sc)
            advance(1)
            tokens.append(Token("char", "<char>", sl, sc, line, col))
            continue
        sl, sc = line, col
        matched = None
        for group in (_OPS4, _OPS3, _OPS2):
            for op in group:
                if text.startswith(op, i):
                    matched = op
                    break
            if matched:
                break
        op = matched or c
        advance(len(op))
        tokens.append(Token("op", op, sl, sc, line, col))
    return tokens


def effective_loc(text: str) -> int:
    """Count lines carrying at least one token character (comment-only and
    blank lines excluded; string literal contents count as code)."""
    effective: set[int] = set()
    n = len(text)
    i = 0
    line = 0
    state = "code"
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            if state == "line_comment":
                state = "code"
            i += 1
            continue
        if state == "code":
            if c == "/" and i + 1 < n and text[i + 1] == "/":
                state = "line_comment"
                i += 2
                continue
            if c == "/" and i + 1 < n and text[i + 1] == "*":
                state = "block_comment"
                i += 2
                continue
            if not c.isspace():
                effective.add(line)
            if text.startswith('"""', i):
                state = "textblock"
                i += 3
                continue
            if c == '"':
                state = "string"
            elif c == "'":
                state = "char"
            i += 1
            continue
        if state == "line_comment":
            i += 1
            continue
        if state == "block_comment":
            if c == "*" and i + 1 < n and text[i + 1] == "/":
                state = "code"
                i += 2
            else:
                i += 1
            continue
        # inside a literal
        if not c.isspace():
            effective.add(line)
        if state == "string":
            if c == "\\":
                i += 2
                continue
            if c == '"':
                state = "code"
        elif state == "char":
            if c == "\\":
                i += 2
                continue
            if c == "'":
                state = "code"
        elif state == "textblock":
            if text.startswith('"""', i):
                state = "code"
                i += 3
                continue
        i += 1
    return len(effective)


def slice_text(lines: list[str], sl: int, sc: int, el: int, ec: int) -> str:
    """Slice by token coordinates (1-based lines, 0-based cols, end exclusive)."""
    if sl == el:
        return lines[sl - 1][sc:ec]
    parts = [lines[sl - 1][sc:]]
    parts.extend(lines[sl:el - 1])
    parts.append(lines[el - 1][:ec])
    return "\n".join(parts)


def build_match_map(tokens: list[Token]) -> dict[int, int]:
    """Map every (, [, { token index to its closing partner and vice versa."""
    stack: list[tuple[str, int]] = []
    closers = {")": "(", "]": "[", "}": "{"}
    match: dict[int, int] = {}
    for idx, tok in enumerate(tokens):
        if tok.kind != "op":
            continue
        if tok.text in ("(", "[", "{"):
            stack.append((tok.text, idx))
        elif tok.text in closers:
            if not stack or stack[-1][0] != closers[tok.text]:
                raise JavaSyntaxError(f"unbalanced '{tok.text}'", tok.line, tok.col)
            _, open_idx = stack.pop()
            match[open_idx] = idx
            match[idx] = open_idx
    if stack:
        tok = tokens[stack[-1][1]]
        raise JavaSyntaxError(f"unclosed '{tok.text}'", tok.line, tok.col)
    return match


def skip_angles(tokens: list[Token], i: int) -> int:
    """Advance past a generic argument/parameter group starting at '<'."""
    depth = 0
    start = tokens[i]
    while i < len(tokens):
        t = tokens[i].text
        if t == "<":
            depth += 1
        elif t in (">", ">>", ">>>"):
            depth -= len(t)
            if depth < 0:
                raise JavaSyntaxError("unbalanced '>' in type", tokens[i].line, tokens[i].col)
            if depth == 0:
                return i + 1
        elif t in (";", "{", ")", "=="):
            raise JavaSyntaxError("malformed generic type", start.line, start.col)
        i += 1
    raise JavaSyntaxError("unclosed generic type", start.line, start.col)


# ---------------------------------------------------------------------------
# Statement splitting
# ---------------------------------------------------------------------------


@dataclass
class _Stmt:
    kind: str
    s: int  # first token index
    e: int  # one past last token index
    sub: list["_Stmt"] = field(default_factory=list)
    sub_ranges: list[tuple[int, int]] = field(default_factory=list)


class _Splitter:
    def __init__(self, tokens: list[Token], match: dict[int, int]):
        self.tokens = tokens
        self.match = match

    def split_block(self, lo: int, hi: int) -> list[_Stmt]:
        out: list[_Stmt] = []
        i = lo
        while i < hi:
            stmt, i = self.read_statement(i, hi)
            out.append(stmt)
        return out

    def read_statement(self, i: int, hi: int) -> tuple[_Stmt, int]:
        toks = self.tokens
        start = i
        t = toks[i]
        if t.text == ";":
            return _Stmt("empty", start, i + 1), i + 1

        if t.kind == "kw" and t.text in ("case", "default"):
            j = i
            while j < hi and toks[j].text != ":":
                if toks[j].text in ("(", "[", "{"):
                    j = self.match[j] + 1
                else:
                    j += 1
            if j >= hi:
                raise JavaSyntaxError("unterminated case label", t.line, t.col)
            i = j + 1
            if i >= hi or (toks[i].kind == "kw" and toks[i].text in ("case", "default")) or toks[i].text == "}":
                return _Stmt("label", start, i), i
            inner, i = self.read_statement(i, hi)
            return _Stmt(inner.kind, start, i, sub=inner.sub, sub_ranges=inner.sub_ranges), i

        if t.text == "{":
            close = self.match[i]
            stmt = _Stmt("block", start, close + 1)
            stmt.sub = self.split_block(i + 1, close)
            stmt.sub_ranges.append((i + 1, close))
            return stmt, close + 1

        if t.kind == "kw" and t.text in ("if", "for", "while", "switch", "synchronized"):
            kind = "sync" if t.text == "synchronized" else t.text
            i += 1
            if i >= hi or toks[i].text != "(":
                raise JavaSyntaxError(f"'{t.text}' without parenthesized head", t.line, t.col)
            i = self.match[i] + 1
            stmt = _Stmt(kind, start, i)
            i = self.read_embedded(i, hi, stmt)
            if kind == "if":
                while i < hi and toks[i].kind == "kw" and toks[i].text == "else":
                    i += 1
                    i = self.read_embedded(i, hi, stmt)
            stmt.e = i
            return stmt, i

        if t.kind == "kw" and t.text == "do":
            stmt = _Stmt("do", start, i + 1)
            i = self.read_embedded(i + 1, hi, stmt)
            if i < hi and toks[i].kind == "kw" and toks[i].text == "while":
                i += 1
                if i < hi and toks[i].text == "(":
                    i = self.match[i] + 1
                if i < hi and toks[i].text == ";":
                    i += 1
            else:
                raise JavaSyntaxError("do without while", t.line, t.col)
            stmt.e = i
            return stmt, i

        if t.kind == "kw" and t.text == "try":
            stmt = _Stmt("try", start, i + 1)
            i += 1
            if i < hi and toks[i].text == "(":  # try-with-resources
                i = self.match[i] + 1
            i = self.read_embedded(i, hi, stmt)
            while i < hi and toks[i].kind == "kw" and toks[i].text == "catch":
                i += 1
                if i < hi and toks[i].text == "(":
                    i = self.match[i] + 1
                i = self.read_embedded(i, hi, stmt)
            if i < hi and toks[i].kind == "kw" and toks[i].text == "finally":
                i += 1
                i = self.read_embedded(i, hi, stmt)
            stmt.e = i
            return stmt, i

        # local type declaration
        j = i
        while j < hi and toks[j].kind == "kw" and toks[j].text in MODIFIERS:
            j += 1
        if j < hi and toks[j].kind == "kw" and toks[j].text in ("class", "interface", "enum"):
            k = j
            while k < hi and toks[k].text != "{":
                k += 1
            if k >= hi:
                raise JavaSyntaxError("malformed local type declaration", t.line, t.col)
            end = self.match[k] + 1
            return _Stmt("localclass", start, end), end

        # statement label
        if t.kind == "ident" and i + 1 < hi and toks[i + 1].text == ":":
            inner, i2 = self.read_statement(i + 2, hi)
            return _Stmt(inner.kind, start, i2, sub=inner.sub, sub_ranges=inner.sub_ranges), i2

        # simple statement: run to ';' at depth 0; braces here are
        # expression-level (array init, lambda body, anonymous class body)
        while i < hi:
            tok = toks[i]
            if tok.kind == "op" and tok.text in ("(", "[", "{"):
                i = self.match[i] + 1
                continue
            if tok.text == ";":
                return _Stmt("simple", start, i + 1), i + 1
            if tok.text == "}":
                break
            i += 1
        raise JavaSyntaxError("statement not terminated by ';'", t.line, t.col)

    def read_embedded(self, i: int, hi: int, parent: _Stmt) -> int:
        """Consume the statement controlled by a control structure, recording
        it (or its block's contents) as sub-statements of ``parent``."""
        toks = self.tokens
        if i >= hi:
            last = toks[hi - 1]
            raise JavaSyntaxError("missing controlled statement", last.line, last.col)
        if toks[i].text == "{":
            close = self.match[i]
            parent.sub.extend(self.split_block(i + 1, close))
            parent.sub_ranges.append((i + 1, close))
            return close + 1
        inner, i2 = self.read_statement(i, hi)
        parent.sub.append(inner)
        parent.sub_ranges.append((inner.s, inner.e))
        return i2


# ---------------------------------------------------------------------------
# Site extraction
# ---------------------------------------------------------------------------


def _anon_body_ranges(tokens: list[Token], match: dict[int, int], lo: int, hi: int) -> list[tuple[int, int]]:
    """Token ranges of anonymous class bodies (``new T(...) { ... }``) in [lo, hi)."""
    out: list[tuple[int, int]] = []
    i = lo
    while i < hi:
        if tokens[i].kind == "kw" and tokens[i].text == "new" and i + 1 < hi and tokens[i + 1].kind == "ident":
            j = i + 2
            while j + 1 < hi and tokens[j].text == "." and tokens[j + 1].kind == "ident":
                j += 2
            if j < hi and tokens[j].text == "<":
                try:
                    j = skip_angles(tokens, j)
                except JavaSyntaxError:
                    i += 1
                    continue
            if j < hi and tokens[j].text == "(":
                close = match[j]
                if close + 1 < hi and tokens[close + 1].text == "{":
                    body_close = match[close + 1]
                    out.append((close + 1, body_close + 1))
                    i = body_close + 1
                    continue
        i += 1
    return out


class _SiteExtractor:
    def __init__(self, tokens: list[Token], match: dict[int, int], lines: list[str]):
        self.tokens = tokens
        self.match = match
        self.lines = lines
        self.invocations: list[InvocationSite] = []
        self.accesses: list[FieldAccessSite] = []

    def extract_statement(self, stmt: _Stmt, top_index: int) -> None:
        if stmt.kind in ("localclass", "label", "empty"):
            return
        skip = list(stmt.sub_ranges)
        skip.extend(_anon_body_ranges(self.tokens, self.match, stmt.s, stmt.e))
        self._scan_range(stmt.s, stmt.e, top_index, skip)
        for sub in stmt.sub:
            self.extract_statement(sub, top_index)

    def _effective_start(self, s: int, e: int) -> int:
        """First token index past any ``case X:`` / ``label:`` prefixes."""
        toks = self.tokens
        i = s
        while i < e:
            t = toks[i]
            if t.kind == "kw" and t.text in ("case", "default"):
                while i < e and toks[i].text != ":":
                    if toks[i].kind == "op" and toks[i].text in ("(", "[", "{"):
                        i = self.match[i] + 1
                    else:
                        i += 1
                i += 1
                continue
            if t.kind == "ident" and i + 1 < e and toks[i + 1].text == ":":
                i += 2
                continue
            break
        return i

    def _scan_range(self, s: int, e: int, top_index: int, skip: list[tuple[int, int]]) -> None:
        toks = self.tokens
        i = s
        while i < e:
            in_skip = False
            for lo, hi in skip:
                if lo <= i < hi:
                    i = hi
                    in_skip = True
                    break
            if in_skip:
                continue
            t = toks[i]
            is_name = t.kind == "ident" or (t.kind == "kw" and t.text in ("this", "super"))
            if not is_name:
                i += 1
                continue
            prev = toks[i - 1] if i > 0 else None
            if prev is not None and prev.text in (".", "::", "@"):
                i += 1
                continue
            nxt = toks[i + 1].text if i + 1 < e else ""
            if nxt == "(":
                if not self._call_blocked(i):
                    self._record_call(i, i, s, e, top_index, receiver=None)
                i += 1
                continue
            if nxt == ".":
                i = self._record_chain(i, s, e, top_index)
                continue
            if t.kind == "ident":
                # bare identifier: a possible own-member reference; the
                # resolution pass keeps it only if it names a visible field
                self.accesses.append(
                    FieldAccessSite(
                        statement_index=top_index,
                        receiver="",
                        target=TypeRef("", False),
                        member_name=t.text,
                        kind=self._ident_kind(i, i, e),
                    )
                )
            i += 1

    def _call_blocked(self, i: int) -> bool:
        t = self.tokens[i]
        if t.kind == "kw":  # this(...)/super(...) delegation; control keywords
            return True
        if i > 0:
            p = self.tokens[i - 1]
            if p.kind == "kw" and p.text == "new":
                return True
            if p.text == "::":
                return True
        return False

    def _record_chain(self, i: int, s: int, e: int, top_index: int) -> int:
        """Handle ``recv.member...`` starting at the receiver token ``i``.
        Returns the index scanning should resume from."""
        toks = self.tokens
        chain = [toks[i].text]
        j = i
        while j + 2 < e and toks[j + 1].text == "." and toks[j + 2].kind == "ident":
            chain.append(toks[j + 2].text)
            j += 2
            after = toks[j + 1].text if j + 1 < e else ""
            if after == "(":
                self._record_call(j, i, s, e, top_index, receiver=".".join(chain[:-1]))
                return j + 1
            if after != ".":
                self.accesses.append(
                    FieldAccessSite(
                        statement_index=top_index,
                        receiver=".".join(chain[:-1]),
                        target=TypeRef(".".join(chain[:-1]), False),
                        member_name=chain[-1],
                        kind=self._ident_kind(j, i, e),
                    )
                )
                return j + 1
            if len(chain) == 2:
                # only the first hop of deeper chains is modeled
                self.accesses.append(
                    FieldAccessSite(
                        statement_index=top_index,
                        receiver=chain[0],
                        target=TypeRef(chain[0], False),
                        member_name=chain[1],
                        kind=AccessKind.FIELD_READ,
                    )
                )
        return j + 1

    def _ident_kind(self, idx: int, chain_start: int, e: int) -> AccessKind:
        toks = self.tokens
        nxt = toks[idx + 1].text if idx + 1 < e else ""
        if nxt in ASSIGN_OPS or nxt in ("++", "--"):
            return AccessKind.FIELD_WRITE
        if chain_start > 0 and toks[chain_start - 1].text in ("++", "--"):
            return AccessKind.FIELD_WRITE
        return AccessKind.FIELD_READ

    def _record_call(
        self, name_idx: int, chain_start: int, s: int, e: int, top_index: int, receiver: str | None
    ) -> None:
        toks = self.tokens
        open_paren = name_idx + 1
        close = self.match[open_paren]
        args = self._split_args(open_paren, close)
        start_tok = toks[chain_start]
        self.invocations.append(
            InvocationSite(
                statement_index=top_index,
                name=toks[name_idx].text,
                arity=len(args),
                receiver=receiver,
                callee=None,
                pattern=self._classify(chain_start, close, s, e),
                argument_texts=args,
                expr_start=(start_tok.line, start_tok.col),
                expr_end=(toks[close].end_line, toks[close].end_col),
            )
        )

    def _split_args(self, open_paren: int, close: int) -> list[str]:
        toks = self.tokens
        if close == open_paren + 1:
            return []
        args = []
        seg_start = open_paren + 1
        i = open_paren + 1
        while i < close:
            t = toks[i]
            if t.kind == "op" and t.text in ("(", "[", "{"):
                i = self.match[i] + 1
                continue
            if t.text == ",":
                args.append(self._slice(seg_start, i))
                seg_start = i + 1
            i += 1
        args.append(self._slice(seg_start, close))
        return args

    def _slice(self, s: int, e: int) -> str:
        a, b = self.tokens[s], self.tokens[e - 1]
        return slice_text(self.lines, a.line, a.col, b.end_line, b.end_col).strip()

    def _classify(self, chain_start: int, close: int, s: int, e: int) -> CallPattern:
        toks = self.tokens
        is_tail = close + 2 == e and toks[close + 1].text == ";"
        if not is_tail:
            return CallPattern.EXPRESSION_CALL
        if chain_start == self._effective_start(s, e):
            return CallPattern.STATEMENT_CALL
        prev = toks[chain_start - 1]
        if prev.kind == "op" and prev.text == "=":
            return CallPattern.ASSIGNED_RETURN
        return CallPattern.EXPRESSION_CALL


# ---------------------------------------------------------------------------
# Local variable collection
# ---------------------------------------------------------------------------


def _match_type(tokens: list[Token], i: int, hi: int) -> tuple[int | None, str | None]:
    """Try to read a type at ``i``: dotted idents or a primitive, optional
    generics, optional []s. Returns (index after the type, base type text)."""
    t = tokens[i]
    if t.kind == "kw" and t.text in PRIMITIVES:
        base = t.text
        j = i + 1
    elif t.kind == "ident":
        parts = [t.text]
        j = i + 1
        while j + 1 < hi and tokens[j].text == "." and tokens[j + 1].kind == "ident":
            parts.append(tokens[j + 1].text)
            j += 2
        base = ".".join(parts)
    else:
        return None, None
    if j < hi and tokens[j].text == "<":
        try:
            j = skip_angles(tokens, j)
        except JavaSyntaxError:
            return None, None
    while j + 1 < hi and tokens[j].text == "[" and tokens[j + 1].text == "]":
        j += 2
    return j, base


def collect_locals(
    tokens: list[Token], match: dict[int, int], lo: int, hi: int
) -> tuple[list[str], dict[str, str]]:
    """Best-effort harvest of local variable names (with base types where
    declared) inside a body range: declarations, loop headers, catch clauses,
    try-with-resources, and lambda parameters."""
    names: list[str] = []
    types: dict[str, str] = {}
    seen: set[str] = set()

    def add(name: str, type_text: str | None) -> None:
        if name not in seen:
            seen.add(name)
            names.append(name)
        if type_text and name not in types:
            types[name] = type_text

    decl_context = {";", "{", "}", "(", ",", "final"}
    i = lo
    while i < hi:
        t = tokens[i]
        if t.kind == "kw" and t.text == "catch" and i + 1 < hi and tokens[i + 1].text == "(":
            close = match[i + 1]
            last_ident = None
            for k in range(i + 2, close):
                if tokens[k].kind == "ident":
                    last_ident = tokens[k].text
            if last_ident:
                add(last_ident, None)
            i = close + 1
            continue
        if t.kind == "op" and t.text == "->" and i > lo:
            p = tokens[i - 1]
            if p.kind == "ident":
                add(p.text, None)
            elif p.text == ")" and (i - 1) in match:
                open_idx = match[i - 1]
                seg_last: str | None = None
                for k in range(open_idx + 1, i - 1):
                    if tokens[k].text == ",":
                        if seg_last:
                            add(seg_last, None)
                        seg_last = None
                    elif tokens[k].kind == "ident":
                        seg_last = tokens[k].text
                if seg_last:
                    add(seg_last, None)
            i += 1
            continue
        is_type_start = t.kind == "ident" or (t.kind == "kw" and t.text in PRIMITIVES)
        if is_type_start:
            prev_ok = i == lo or tokens[i - 1].text in decl_context
            if prev_ok:
                j, base = _match_type(tokens, i, hi)
                if j is not None and j < hi and tokens[j].kind == "ident" and j > i:
                    k = j + 1
                    while k + 1 < hi and tokens[k].text == "[" and tokens[k + 1].text == "]":
                        k += 2
                    if k < hi and tokens[k].text in ("=", ";", ",", ":", ")"):
                        add(tokens[j].text, base)
                        m = k

                        def _skip_initializer(m: int) -> int:
                            if m < hi and tokens[m].text == "=":
                                m += 1
                                while m < hi and tokens[m].text not in (",", ";"):
                                    if tokens[m].kind == "op" and tokens[m].text in ("(", "[", "{"):
                                        m = match[m] + 1
                                    else:
                                        m += 1
                            return m

                        m = _skip_initializer(m)
                        while m < hi and tokens[m].text == ",":
                            if m + 2 < hi and tokens[m + 1].kind == "ident" and tokens[m + 2].text in ("=", ",", ";"):
                                add(tokens[m + 1].text, base)
                                m = _skip_initializer(m + 2)
                            else:
                                break
                        i = k
                        continue
        i += 1
    return names, types


# ---------------------------------------------------------------------------
# Member and class parsing
# ---------------------------------------------------------------------------


@dataclass
class ParsedUnit:
    package: str
    imports: list[str]  # imported simple names
    has_wildcard_import: bool
    classes: list[ClassEntity]  # flattened; nested and anonymous included


class _UnitParser:
    def __init__(self, text: str, path: str = ""):
        self.text = text
        self.path = path
        self.lines = text.split("\n")
        self.tokens = tokenize(text)
        self.match = build_match_map(self.tokens)
        self.package = ""
        self.imports: list[str] = []
        self.wildcard = False
        self.classes: list[ClassEntity] = []
        self._nested_ranges: dict[str, list[tuple[int, int]]] = {}

    def _member_text(self, s_tok: Token, e_tok: Token) -> tuple[tuple[int, int], str]:
        span = (s_tok.line, e_tok.end_line)
        return span, "\n".join(self.lines[span[0] - 1 : span[1]])

    def _skip_one_annotation(self, i: int, hi: int) -> int:
        toks = self.tokens
        i += 1  # '@'
        if i < hi and toks[i].kind in ("ident", "kw"):
            i += 1
            while i + 1 < hi and toks[i].text == "." and toks[i + 1].kind == "ident":
                i += 2
        if i < hi and toks[i].text == "(":
            i = self.match[i] + 1
        return i

    def _mods_and_annotations(self, i: int, hi: int) -> tuple[int, list[str]]:
        toks = self.tokens
        mods: list[str] = []
        while i < hi:
            t = toks[i]
            if t.text == "@" and not (i + 1 < hi and toks[i + 1].text == "interface"):
                i = self._skip_one_annotation(i, hi)
                continue
            if t.kind == "kw" and t.text in MODIFIERS:
                mods.append(t.text)
                i += 1
                continue
            break
        return i, mods

    # -- top level ------------------------------------------------------------

    def parse(self) -> ParsedUnit:
        toks = self.tokens
        n = len(toks)
        i = 0
        if i < n and toks[i].kind == "kw" and toks[i].text == "package":
            parts = []
            j = i + 1
            while j < n and toks[j].text != ";":
                if toks[j].kind in ("ident", "kw"):
                    parts.append(toks[j].text)
                j += 1
            if j >= n:
                raise JavaSyntaxError("unterminated package declaration", toks[i].line, toks[i].col)
            self.package = ".".join(parts)
            i = j + 1
        while i < n and toks[i].kind == "kw" and toks[i].text == "import":
            j = i + 1
            if j < n and toks[j].kind == "kw" and toks[j].text == "static":
                j += 1
            parts = []
            star = False
            while j < n and toks[j].text != ";":
                if toks[j].kind in ("ident", "kw"):
                    parts.append(toks[j].text)
                elif toks[j].text == "*":
                    star = True
                j += 1
            if j >= n:
                raise JavaSyntaxError("unterminated import", toks[i].line, toks[i].col)
            if star:
                self.wildcard = True
            elif parts:
                self.imports.append(parts[-1])
            i = j + 1
        while i < n:
            if toks[i].text == ";":
                i += 1
                continue
            i = self.parse_type_decl(i, n, outer=None)
        for cls in self.classes:
            cls.imports = list(self.imports)
            cls.has_wildcard_import = self.wildcard
        return ParsedUnit(self.package, self.imports, self.wildcard, self.classes)

    # -- type declarations ------------------------------------------------------

    def parse_type_decl(self, start: int, hi: int, outer: ClassEntity | None) -> int:
        toks = self.tokens
        i, modifiers = self._mods_and_annotations(start, hi)
        if i >= hi:
            raise JavaSyntaxError("truncated type declaration", toks[start].line, toks[start].col)
        kind_tok = toks[i]
        if kind_tok.text == "@" and i + 1 < hi and toks[i + 1].text == "interface":
            kind = ClassKind.ANNOTATION
            i += 2
        elif kind_tok.kind == "kw" and kind_tok.text == "class":
            kind = ClassKind.CLASS
            i += 1
        elif kind_tok.kind == "kw" and kind_tok.text == "interface":
            kind = ClassKind.INTERFACE
            i += 1
        elif kind_tok.kind == "kw" and kind_tok.text == "enum":
            kind = ClassKind.ENUM
            i += 1
        else:
            raise JavaSyntaxError(
                f"expected type declaration, found '{kind_tok.text}'", kind_tok.line, kind_tok.col
            )
        if i >= hi or toks[i].kind != "ident":
            raise JavaSyntaxError("missing type name", kind_tok.line, kind_tok.col)
        simple = toks[i].text
        i += 1
        type_params: list[str] = []
        if i < hi and toks[i].text == "<":
            end = skip_angles(toks, i)
            depth = 0
            expect = False
            for k in range(i, end):
                txt = toks[k].text
                if txt == "<":
                    depth += 1
                    expect = depth == 1
                elif txt in (">", ">>", ">>>"):
                    depth -= len(txt)
                elif txt == "," and depth == 1:
                    expect = True
                elif expect and toks[k].kind == "ident":
                    type_params.append(txt)
                    expect = False
                else:
                    expect = False
            i = end
        extends_text: str | None = None
        interfaces: list[str] = []
        if i < hi and toks[i].kind == "kw" and toks[i].text == "extends":
            names, i = self._type_name_list(i + 1, hi)
            if kind == ClassKind.CLASS:
                extends_text = names[0] if names else None
                interfaces.extend(names[1:])
            else:
                interfaces.extend(names)
        if i < hi and toks[i].kind == "kw" and toks[i].text == "implements":
            names, i = self._type_name_list(i + 1, hi)
            interfaces.extend(names)
        if i >= hi or toks[i].text != "{":
            raise JavaSyntaxError("missing type body", kind_tok.line, kind_tok.col)
        body_open = i
        body_close = self.match[i]

        if outer is None:
            qualified = f"{self.package}.{simple}" if self.package else simple
        else:
            qualified = f"{outer.qualified_name}${simple}"
        span, source = self._member_text(toks[start], toks[body_close])
        cls = ClassEntity(
            qualified_name=qualified,
            simple_name=simple,
            package=self.package,
            file=self.path,
            span=span,
            kind=kind,
            superclass_ref=TypeRef(extends_text, False) if extends_text else None,
            interfaces=interfaces,
            fields=[],
            methods=[],
            source_text=source,
            modifiers=modifiers,
            type_params=type_params,
        )
        self.classes.append(cls)
        if outer is not None:
            outer.nested.append(qualified)
            self._nested_ranges.setdefault(outer.qualified_name, []).append((start, body_close + 1))

        body_lo = body_open + 1
        if kind == ClassKind.ENUM:
            body_lo = self._parse_enum_constants(cls, body_lo, body_close)
        self._parse_members(cls, body_lo, body_close)
        self._index_anonymous(cls, body_open + 1, body_close)
        return body_close + 1

    def _type_name_list(self, i: int, hi: int) -> tuple[list[str], int]:
        toks = self.tokens
        names: list[str] = []
        while i < hi and toks[i].text != "{" and not (
            toks[i].kind == "kw" and toks[i].text in ("implements", "extends")
        ):
            if toks[i].kind == "ident":
                parts = [toks[i].text]
                i += 1
                while i + 1 < hi and toks[i].text == "." and toks[i + 1].kind == "ident":
                    parts.append(toks[i + 1].text)
                    i += 2
                if i < hi and toks[i].text == "<":
                    i = skip_angles(toks, i)
                names.append(".".join(parts))
            else:
                i += 1
        return names, i

    def _parse_enum_constants(self, cls: ClassEntity, lo: int, hi: int) -> int:
        toks = self.tokens
        end = lo
        while end < hi:
            t = toks[end]
            if t.kind == "op" and t.text in ("(", "{", "["):
                end = self.match[end] + 1
                continue
            if t.text == ";":
                break
            end += 1
        i = lo
        while i < end:
            if toks[i].text == "@":
                i = self._skip_one_annotation(i, end)
                continue
            if toks[i].kind == "ident":
                name_tok = toks[i]
                j = i + 1
                if j < end and toks[j].text == "(":
                    j = self.match[j] + 1
                if j < end and toks[j].text == "{":
                    j = self.match[j] + 1
                span, text = self._member_text(name_tok, toks[j - 1])
                cls.fields.append(
                    FieldEntity(
                        name=name_tok.text,
                        declared_type=TypeRef(cls.simple_name, False),
                        type_text=cls.simple_name,
                        owner=cls.qualified_name,
                        span=span,
                        source_text=text,
                        modifiers=["public", "static", "final"],
                    )
                )
                i = j
                continue
            i += 1
        return min(end + 1, hi)

    # -- class members ------------------------------------------------------------

    def _parse_members(self, cls: ClassEntity, lo: int, hi: int) -> None:
        toks = self.tokens
        i = lo
        while i < hi:
            if toks[i].text == ";":
                i += 1
                continue
            start = i
            i, modifiers = self._mods_and_annotations(i, hi)
            if i >= hi:
                raise JavaSyntaxError("truncated member", toks[start].line, toks[start].col)
            t = toks[i]
            if (t.kind == "kw" and t.text in ("class", "interface", "enum")) or (
                t.text == "@" and i + 1 < hi and toks[i + 1].text == "interface"
            ):
                i = self.parse_type_decl(start, hi, outer=cls)
                continue
            if t.text == "{":  # instance or static initializer
                i = self.match[i] + 1
                continue
            type_params: list[str] = []
            if t.text == "<":
                end = skip_angles(toks, i)
                for k in range(i + 1, end - 1):
                    if toks[k].kind == "ident" and toks[k - 1].text in ("<", ","):
                        type_params.append(toks[k].text)
                i = end
            # classify the member by the first structural token at depth 0
            j = i
            angle = 0
            decide = None
            while j < hi:
                txt = toks[j].text
                if toks[j].kind == "op":
                    if txt == "<":
                        angle += 1
                    elif txt in (">", ">>", ">>>"):
                        angle -= len(txt)
                    elif angle == 0 and txt in ("(", "=", ";"):
                        decide = txt
                        break
                    elif angle == 0 and txt == "[":
                        j = self.match[j] + 1
                        continue
                    elif angle == 0 and txt == "{":
                        raise JavaSyntaxError("unexpected '{' in member", toks[j].line, toks[j].col)
                j += 1
            if decide is None:
                raise JavaSyntaxError("unclassifiable member", toks[start].line, toks[start].col)
            if decide == "(":
                i = self._parse_method(cls, start, i, j, hi, modifiers, type_params)
            else:
                i = self._parse_field(cls, start, i, hi, modifiers)

    def _parse_method(
        self,
        cls: ClassEntity,
        start: int,
        type_start: int,
        open_paren: int,
        hi: int,
        modifiers: list[str],
        type_params: list[str],
    ) -> int:
        toks = self.tokens
        name_idx = open_paren - 1
        if toks[name_idx].kind != "ident":
            raise JavaSyntaxError("missing method name", toks[open_paren].line, toks[open_paren].col)
        name = toks[name_idx].text
        is_ctor = name_idx == type_start and name == cls.simple_name
        if name_idx == type_start and not is_ctor:
            raise JavaSyntaxError(
                f"member '{name}' has no return type", toks[name_idx].line, toks[name_idx].col
            )
        if is_ctor:
            return_type = ""
        else:
            a, b = toks[type_start], toks[name_idx - 1]
            return_type = slice_text(self.lines, a.line, a.col, b.end_line, b.end_col).strip()
        close_paren = self.match[open_paren]
        params = self._parse_params(open_paren + 1, close_paren)
        j = close_paren + 1
        body_open = None
        while j < hi:
            txt = toks[j].text
            if txt == "{":
                body_open = j
                break
            if txt == ";":
                break
            if txt == "(":
                raise JavaSyntaxError("malformed method trailer", toks[j].line, toks[j].col)
            j += 1
        if j >= hi:
            raise JavaSyntaxError("unterminated method declaration", toks[start].line, toks[start].col)
        if body_open is None:
            span, text = self._member_text(toks[start], toks[j])
            cls.methods.append(
                MethodEntity(
                    name=name,
                    owner=cls.qualified_name,
                    parameters=params,
                    return_type=return_type,
                    span=span,
                    body_statements=[],
                    invocations=[],
                    field_accesses=[],
                    source_text=text,
                    modifiers=modifiers,
                    is_constructor=is_ctor,
                    is_abstract=True,
                    body_span=None,
                    type_params=type_params,
                )
            )
            return j + 1
        body_close = self.match[body_open]
        span, text = self._member_text(toks[start], toks[body_close])
        splitter = _Splitter(toks, self.match)
        stmts = splitter.split_block(body_open + 1, body_close)
        extractor = _SiteExtractor(toks, self.match, self.lines)
        for idx, st in enumerate(stmts):
            extractor.extract_statement(st, idx)
        local_names, local_types = collect_locals(toks, self.match, body_open + 1, body_close)
        cls.methods.append(
            MethodEntity(
                name=name,
                owner=cls.qualified_name,
                parameters=params,
                return_type=return_type,
                span=span,
                body_statements=[self._to_statement(st, depth=0) for st in stmts],
                invocations=extractor.invocations,
                field_accesses=extractor.accesses,
                source_text=text,
                modifiers=modifiers,
                is_constructor=is_ctor,
                is_abstract=False,
                body_span=(toks[body_open].line, toks[body_close].line),
                locals=local_names,
                local_types=local_types,
                type_params=type_params,
            )
        )
        return body_close + 1

    def _to_statement(self, st: _Stmt, depth: int) -> Statement:
        a = self.tokens[st.s]
        b = self.tokens[st.e - 1]
        return Statement(
            start_line=a.line,
            end_line=b.end_line,
            text=slice_text(self.lines, a.line, a.col, b.end_line, b.end_col),
            kind=st.kind,
            start_col=a.col,
            sub=[self._to_statement(s, depth + 1) for s in st.sub] if depth == 0 else [],
        )

    def _parse_params(self, lo: int, hi: int) -> list[Param]:
        toks = self.tokens
        if lo >= hi:
            return []
        segments: list[tuple[int, int]] = []
        seg_start = lo
        i = lo
        angle = 0
        while i < hi:
            t = toks[i]
            if t.kind == "op" and t.text in ("(", "[", "{"):
                i = self.match[i] + 1
                continue
            if t.text == "<":
                angle += 1
            elif t.text in (">", ">>", ">>>"):
                angle -= len(t.text)
            elif t.text == "," and angle == 0:
                segments.append((seg_start, i))
                seg_start = i + 1
            i += 1
        segments.append((seg_start, hi))
        params: list[Param] = []
        for s, e in segments:
            i = s
            while i < e and (
                toks[i].text == "@" or (toks[i].kind == "kw" and toks[i].text == "final")
            ):
                if toks[i].text == "@":
                    i = self._skip_one_annotation(i, e)
                else:
                    i += 1
            if i >= e:
                raise JavaSyntaxError("empty parameter", toks[s].line, toks[s].col)
            vararg = any(toks[k].text == "..." for k in range(i, e))
            name_idx = None
            for k in range(e - 1, i - 1, -1):
                if toks[k].kind == "ident":
                    name_idx = k
                    break
            if name_idx is None:
                raise JavaSyntaxError("unparseable parameter", toks[s].line, toks[s].col)
            if name_idx == i:
                raise JavaSyntaxError("parameter missing type", toks[s].line, toks[s].col)
            a, b = toks[i], toks[name_idx - 1]
            type_text = slice_text(self.lines, a.line, a.col, b.end_line, b.end_col).strip()
            _, base = _match_type(toks, i, name_idx)
            params.append(
                Param(
                    name=toks[name_idx].text,
                    type_text=type_text,
                    type_ref=TypeRef(base or type_text, False),
                    is_vararg=vararg,
                )
            )
        return params

    def _parse_field(
        self, cls: ClassEntity, start: int, type_start: int, hi: int, modifiers: list[str]
    ) -> int:
        toks = self.tokens
        j, base = _match_type(toks, type_start, hi)
        if j is None or j >= hi or toks[j].kind != "ident":
            raise JavaSyntaxError(
                "unparseable field declaration", toks[type_start].line, toks[type_start].col
            )
        a, b = toks[type_start], toks[j - 1]
        type_text = slice_text(self.lines, a.line, a.col, b.end_line, b.end_col).strip()
        names: list[str] = []
        while j < hi:
            if toks[j].kind != "ident":
                raise JavaSyntaxError("expected field name", toks[j].line, toks[j].col)
            names.append(toks[j].text)
            j += 1
            while j + 1 < hi and toks[j].text == "[" and toks[j + 1].text == "]":
                j += 2
            if j < hi and toks[j].text == "=":
                j += 1
                while j < hi and toks[j].text not in (",", ";"):
                    if toks[j].kind == "op" and toks[j].text in ("(", "[", "{"):
                        j = self.match[j] + 1
                    else:
                        j += 1
            if j < hi and toks[j].text == ",":
                j += 1
                continue
            if j < hi and toks[j].text == ";":
                break
            raise JavaSyntaxError(
                "unterminated field declaration", toks[type_start].line, toks[type_start].col
            )
        span, text = self._member_text(toks[start], toks[j])
        for nm in names:
            cls.fields.append(
                FieldEntity(
                    name=nm,
                    declared_type=TypeRef(base or type_text, False),
                    type_text=type_text,
                    owner=cls.qualified_name,
                    span=span,
                    source_text=text,
                    modifiers=list(modifiers),
                )
            )
        return j + 1

    # -- anonymous classes ----------------------------------------------------------

    def _index_anonymous(self, cls: ClassEntity, lo: int, hi: int) -> None:
        nested_ranges = self._nested_ranges.get(cls.qualified_name, [])
        counter = 0
        for body_open, body_end in _anon_body_ranges(self.tokens, self.match, lo, hi):
            if any(s <= body_open < e for s, e in nested_ranges):
                continue  # belongs to a nested named class; indexed there
            counter += 1
            qualified = f"{cls.qualified_name}${counter}"
            new_type = self._anon_super(body_open)
            span, text = self._member_text(self.tokens[body_open], self.tokens[body_end - 1])
            anon = ClassEntity(
                qualified_name=qualified,
                simple_name=f"{cls.simple_name}${counter}",
                package=self.package,
                file=self.path,
                span=span,
                kind=ClassKind.CLASS,
                superclass_ref=TypeRef(new_type, False) if new_type else None,
                interfaces=[],
                fields=[],
                methods=[],
                source_text=text,
                modifiers=[],
                is_anonymous=True,
            )
            self.classes.append(anon)
            cls.nested.append(qualified)
            try:
                self._parse_members(anon, body_open + 1, self.match[body_open])
            except JavaSyntaxError:
                anon.fields = []
                anon.methods = []

    def _anon_super(self, body_open: int) -> str | None:
        i = body_open - 1
        if i < 0 or self.tokens[i].text != ")":
            return None
        i = self.match[i] - 1
        # walk back over an optional generic group
        if i >= 0 and self.tokens[i].text in (">", ">>", ">>>"):
            depth = len(self.tokens[i].text)
            i -= 1
            while i >= 0 and depth > 0:
                if self.tokens[i].text == "<":
                    depth -= 1
                elif self.tokens[i].text in (">", ">>", ">>>"):
                    depth += len(self.tokens[i].text)
                i -= 1
        parts: list[str] = []
        while i >= 0 and self.tokens[i].kind == "ident":
            parts.append(self.tokens[i].text)
            i -= 1
            if i >= 0 and self.tokens[i].text == ".":
                i -= 1
            else:
                break
        return ".".join(reversed(parts)) if parts else None


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------


def parse_unit(text: str, path: str = "") -> ParsedUnit:
    """Parse a compilation unit into flat, unresolved class entities."""
    return _UnitParser(text, path).parse()


def parse_class_snippet(text: str, path: str = "") -> ClassEntity:
    """Parse source holding one top-level type declaration (no package)."""
    unit = parse_unit(text, path)
    top = [c for c in unit.classes if "$" not in c.qualified_name and not c.package]
    if not top:
        raise JavaSyntaxError("no type declaration found", 1, 0)
    return top[0]


def parse_method_snippet(text: str, class_name: str = "__Wrap__") -> MethodEntity:
    """Parse source holding exactly one method declaration. Pass the owning
    class's simple name when the method may be a constructor."""
    wrapped = f"class {class_name} {{\n" + text + "\n}\n"
    unit = parse_unit(wrapped)
    wrap = next(c for c in unit.classes if c.simple_name == class_name)
    if len(wrap.methods) != 1 or wrap.fields:
        raise JavaSyntaxError("expected exactly one method declaration", 1, 0)
    method = wrap.methods[0]
    _shift_method_lines(method, -1)
    return method


def _shift_method_lines(m: MethodEntity, delta: int) -> None:
    m.span = (m.span[0] + delta, m.span[1] + delta)
    if m.body_span:
        m.body_span = (m.body_span[0] + delta, m.body_span[1] + delta)
    for st in m.body_statements:
        _shift_statement(st, delta)
    for inv in m.invocations:
        inv.expr_start = (inv.expr_start[0] + delta, inv.expr_start[1])
        inv.expr_end = (inv.expr_end[0] + delta, inv.expr_end[1])


def _shift_statement(st: Statement, delta: int) -> None:
    st.start_line += delta
    st.end_line += delta
    for s in st.sub:
        _shift_statement(s, delta)
