"""In-memory program model for a parsed Java project.

Every other stage reads this model: metrics are computed over its entities,
the generators rewrite entity source text, and the dataset records carry its
provenance. The model is immutable after construction (single-writer build,
many concurrent readers).

Spans are 1-based inclusive line ranges in the owning file. ``source_text``
always holds the verbatim file lines covered by the span, so line counts and
column offsets computed against it stay valid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator


class ModelError(Exception):
    """Malformed model state (e.g. an inheritance cycle in the corpus)."""


class ClassKind(str, Enum):
    CLASS = "class"
    INTERFACE = "interface"
    ENUM = "enum"
    ANNOTATION = "annotation"


class CallPattern(str, Enum):
    """How a method invocation is embedded in its statement."""

    STATEMENT_CALL = "STATEMENT_CALL"  # the call is the entire statement
    ASSIGNED_RETURN = "ASSIGNED_RETURN"  # the call's value initializes/assigns a variable
    EXPRESSION_CALL = "EXPRESSION_CALL"  # the call sits inside a larger expression


class AccessKind(str, Enum):
    FIELD_READ = "FIELD_READ"
    FIELD_WRITE = "FIELD_WRITE"
    METHOD_CALL_ON_FOREIGN = "METHOD_CALL_ON_FOREIGN"


@dataclass
class TypeRef:
    """A type name with an internal/external tag.

    ``name`` is the qualified class name once resolved against the project,
    otherwise the raw base identifier as written in source.
    """

    name: str
    is_internal: bool = False

    def to_dict(self) -> dict:
        return {"name": self.name, "is_internal": self.is_internal}

    @staticmethod
    def from_dict(d: dict) -> "TypeRef":
        return TypeRef(name=d["name"], is_internal=d["is_internal"])


@dataclass
class Param:
    name: str
    type_text: str  # verbatim type as written, e.g. "Map<String, Book>"
    type_ref: TypeRef  # base type, resolved when project-internal
    is_vararg: bool = False

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "type_text": self.type_text,
            "type_ref": self.type_ref.to_dict(),
            "is_vararg": self.is_vararg,
        }

    @staticmethod
    def from_dict(d: dict) -> "Param":
        return Param(
            name=d["name"],
            type_text=d["type_text"],
            type_ref=TypeRef.from_dict(d["type_ref"]),
            is_vararg=d["is_vararg"],
        )


@dataclass
class Statement:
    """One statement at the top level of a method body.

    ``sub`` holds the direct statements of any block the statement opens
    (then/else branches, loop bodies, try/catch/finally blocks) — one nesting
    level only, which is all the transformations need.
    """

    start_line: int
    end_line: int
    text: str
    kind: str  # "simple", "if", "for", "while", "do", "switch", "try", "block", "sync", ...
    start_col: int = 0  # 0-based column of the first token
    sub: list["Statement"] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "start_line": self.start_line,
            "end_line": self.end_line,
            "text": self.text,
            "kind": self.kind,
            "start_col": self.start_col,
            "sub": [s.to_dict() for s in self.sub],
        }

    @staticmethod
    def from_dict(d: dict) -> "Statement":
        return Statement(
            start_line=d["start_line"],
            end_line=d["end_line"],
            text=d["text"],
            kind=d["kind"],
            start_col=d["start_col"],
            sub=[Statement.from_dict(s) for s in d["sub"]],
        )


@dataclass
class MethodRef:
    owner: str  # qualified class name
    name: str
    arity: int

    def to_dict(self) -> dict:
        return {"owner": self.owner, "name": self.name, "arity": self.arity}

    @staticmethod
    def from_dict(d: dict) -> "MethodRef":
        return MethodRef(owner=d["owner"], name=d["name"], arity=d["arity"])


@dataclass
class InvocationSite:
    """A method call found in a method body.

    ``expr_start``/``expr_end`` are (line, col) coordinates of the full call
    expression (receiver chain through closing paren) in file coordinates;
    lines 1-based, cols 0-based, end col exclusive.
    """

    statement_index: int
    name: str
    arity: int
    receiver: str | None  # raw receiver token text ("this", "super", identifier) or None
    callee: MethodRef | None  # resolved project-internal target, else None
    pattern: CallPattern
    argument_texts: list[str]
    expr_start: tuple[int, int]
    expr_end: tuple[int, int]

    def to_dict(self) -> dict:
        return {
            "statement_index": self.statement_index,
            "name": self.name,
            "arity": self.arity,
            "receiver": self.receiver,
            "callee": self.callee.to_dict() if self.callee else None,
            "pattern": self.pattern.value,
            "argument_texts": list(self.argument_texts),
            "expr_start": list(self.expr_start),
            "expr_end": list(self.expr_end),
        }

    @staticmethod
    def from_dict(d: dict) -> "InvocationSite":
        return InvocationSite(
            statement_index=d["statement_index"],
            name=d["name"],
            arity=d["arity"],
            receiver=d["receiver"],
            callee=MethodRef.from_dict(d["callee"]) if d["callee"] else None,
            pattern=CallPattern(d["pattern"]),
            argument_texts=list(d["argument_texts"]),
            expr_start=tuple(d["expr_start"]),
            expr_end=tuple(d["expr_end"]),
        )


@dataclass
class FieldAccessSite:
    """A member access on some receiver (field read/write, or a call on a
    non-self receiver).

    ``receiver`` is the raw receiver text as written ("this", "super", an
    identifier, a dotted name, or "" for a bare own-member reference).
    ``target`` is the receiver's declared class once resolution has run.
    """

    statement_index: int
    receiver: str
    target: TypeRef
    member_name: str
    kind: AccessKind

    def to_dict(self) -> dict:
        return {
            "statement_index": self.statement_index,
            "receiver": self.receiver,
            "target": self.target.to_dict(),
            "member_name": self.member_name,
            "kind": self.kind.value,
        }

    @staticmethod
    def from_dict(d: dict) -> "FieldAccessSite":
        return FieldAccessSite(
            statement_index=d["statement_index"],
            receiver=d["receiver"],
            target=TypeRef.from_dict(d["target"]),
            member_name=d["member_name"],
            kind=AccessKind(d["kind"]),
        )


@dataclass
class FieldEntity:
    name: str
    declared_type: TypeRef
    type_text: str
    owner: str  # qualified class name
    span: tuple[int, int]
    source_text: str
    modifiers: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "declared_type": self.declared_type.to_dict(),
            "type_text": self.type_text,
            "owner": self.owner,
            "span": list(self.span),
            "source_text": self.source_text,
            "modifiers": list(self.modifiers),
        }

    @staticmethod
    def from_dict(d: dict) -> "FieldEntity":
        return FieldEntity(
            name=d["name"],
            declared_type=TypeRef.from_dict(d["declared_type"]),
            type_text=d["type_text"],
            owner=d["owner"],
            span=tuple(d["span"]),
            source_text=d["source_text"],
            modifiers=list(d["modifiers"]),
        )


@dataclass
class MethodEntity:
    name: str
    owner: str  # qualified class name
    parameters: list[Param]
    return_type: str  # verbatim return type text; "" for constructors
    span: tuple[int, int]
    body_statements: list[Statement]
    invocations: list[InvocationSite]
    field_accesses: list[FieldAccessSite]
    source_text: str
    modifiers: list[str] = field(default_factory=list)
    is_constructor: bool = False
    is_abstract: bool = False  # declared without a body
    body_span: tuple[int, int] | None = None  # lines of the opening/closing body braces
    locals: list[str] = field(default_factory=list)  # declared local variable names
    local_types: dict[str, str] = field(default_factory=dict)  # local name -> base type text
    type_params: list[str] = field(default_factory=list)

    @property
    def arity(self) -> int:
        return len(self.parameters)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "owner": self.owner,
            "parameters": [p.to_dict() for p in self.parameters],
            "return_type": self.return_type,
            "span": list(self.span),
            "body_statements": [s.to_dict() for s in self.body_statements],
            "invocations": [s.to_dict() for s in self.invocations],
            "field_accesses": [s.to_dict() for s in self.field_accesses],
            "source_text": self.source_text,
            "modifiers": list(self.modifiers),
            "is_constructor": self.is_constructor,
            "is_abstract": self.is_abstract,
            "body_span": list(self.body_span) if self.body_span else None,
            "locals": list(self.locals),
            "local_types": dict(self.local_types),
            "type_params": list(self.type_params),
        }

    @staticmethod
    def from_dict(d: dict) -> "MethodEntity":
        return MethodEntity(
            name=d["name"],
            owner=d["owner"],
            parameters=[Param.from_dict(p) for p in d["parameters"]],
            return_type=d["return_type"],
            span=tuple(d["span"]),
            body_statements=[Statement.from_dict(s) for s in d["body_statements"]],
            invocations=[InvocationSite.from_dict(s) for s in d["invocations"]],
            field_accesses=[FieldAccessSite.from_dict(s) for s in d["field_accesses"]],
            source_text=d["source_text"],
            modifiers=list(d["modifiers"]),
            is_constructor=d["is_constructor"],
            is_abstract=d["is_abstract"],
            body_span=tuple(d["body_span"]) if d["body_span"] else None,
            locals=list(d["locals"]),
            local_types=dict(d["local_types"]),
            type_params=list(d["type_params"]),
        )


@dataclass
class ClassEntity:
    qualified_name: str  # package.Outer$Inner
    simple_name: str
    package: str
    file: str
    span: tuple[int, int]
    kind: ClassKind
    superclass_ref: TypeRef | None
    interfaces: list[str]
    fields: list[FieldEntity]
    methods: list[MethodEntity]
    source_text: str
    modifiers: list[str] = field(default_factory=list)
    is_anonymous: bool = False
    nested: list[str] = field(default_factory=list)  # qualified names of nested classes
    imports: list[str] = field(default_factory=list)  # imported simple names from the file
    has_wildcard_import: bool = False
    type_params: list[str] = field(default_factory=list)

    @property
    def nom(self) -> int:
        return len(self.methods)

    @property
    def noa(self) -> int:
        return len(self.fields)

    def to_dict(self) -> dict:
        return {
            "qualified_name": self.qualified_name,
            "simple_name": self.simple_name,
            "package": self.package,
            "file": self.file,
            "span": list(self.span),
            "kind": self.kind.value,
            "superclass_ref": self.superclass_ref.to_dict() if self.superclass_ref else None,
            "interfaces": list(self.interfaces),
            "fields": [f.to_dict() for f in self.fields],
            "methods": [m.to_dict() for m in self.methods],
            "source_text": self.source_text,
            "modifiers": list(self.modifiers),
            "is_anonymous": self.is_anonymous,
            "nested": list(self.nested),
            "imports": list(self.imports),
            "has_wildcard_import": self.has_wildcard_import,
            "type_params": list(self.type_params),
        }

    @staticmethod
    def from_dict(d: dict) -> "ClassEntity":
        return ClassEntity(
            qualified_name=d["qualified_name"],
            simple_name=d["simple_name"],
            package=d["package"],
            file=d["file"],
            span=tuple(d["span"]),
            kind=ClassKind(d["kind"]),
            superclass_ref=TypeRef.from_dict(d["superclass_ref"]) if d["superclass_ref"] else None,
            interfaces=list(d["interfaces"]),
            fields=[FieldEntity.from_dict(f) for f in d["fields"]],
            methods=[MethodEntity.from_dict(m) for m in d["methods"]],
            source_text=d["source_text"],
            modifiers=list(d["modifiers"]),
            is_anonymous=d["is_anonymous"],
            nested=list(d["nested"]),
            imports=list(d["imports"]),
            has_wildcard_import=d["has_wildcard_import"],
            type_params=list(d["type_params"]),
        )


@dataclass
class ProjectModel:
    project_id: str
    classes: list[ClassEntity]
    files: dict[str, str]
    role: str = "TRAIN"  # TRAIN or EVAL, inherited by every record from this project
    class_index: dict[str, ClassEntity] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not self.class_index:
            self.rebuild_index()

    def rebuild_index(self) -> None:
        index: dict[str, ClassEntity] = {}
        for cls in self.classes:
            if cls.qualified_name in index:
                raise ModelError(f"duplicate qualified class name: {cls.qualified_name}")
            index[cls.qualified_name] = cls
        self.class_index = index

    def simple_name_index(self) -> dict[str, list[str]]:
        """Map simple class name -> sorted qualified names bearing it."""
        out: dict[str, list[str]] = {}
        for cls in self.classes:
            out.setdefault(cls.simple_name, []).append(cls.qualified_name)
        for names in out.values():
            names.sort()
        return out

    def iter_methods(self) -> Iterator[tuple[ClassEntity, MethodEntity]]:
        for cls in self.classes:
            for m in cls.methods:
                yield cls, m

    def to_dict(self) -> dict:
        return {
            "project_id": self.project_id,
            "role": self.role,
            "classes": [c.to_dict() for c in self.classes],
            "files": dict(sorted(self.files.items())),
        }

    @staticmethod
    def from_dict(d: dict) -> "ProjectModel":
        return ProjectModel(
            project_id=d["project_id"],
            classes=[ClassEntity.from_dict(c) for c in d["classes"]],
            files=dict(d["files"]),
            role=d["role"],
        )


def lookup_class(model: ProjectModel, name: str) -> ClassEntity | None:
    """Exact-match lookup by qualified name; absence is a normal result."""
    return model.class_index.get(name)


def ancestors(model: ProjectModel, cls: ClassEntity) -> list[ClassEntity]:
    """Project-internal ancestor chain, nearest first.

    Raises ModelError on an inheritance cycle.
    """
    chain: list[ClassEntity] = []
    seen = {cls.qualified_name}
    current = cls
    while current.superclass_ref is not None and current.superclass_ref.is_internal:
        parent = model.class_index.get(current.superclass_ref.name)
        if parent is None:
            break
        if parent.qualified_name in seen:
            raise ModelError(
                f"inheritance cycle through {parent.qualified_name}"
            )
        seen.add(parent.qualified_name)
        chain.append(parent)
        current = parent
    return chain


def unique_fields_of(model: ProjectModel, cls: ClassEntity) -> set[str]:
    """Field names declared on ``cls`` that no project-internal ancestor declares."""
    inherited: set[str] = set()
    for parent in ancestors(model, cls):
        inherited.update(f.name for f in parent.fields)
    return {f.name for f in cls.fields if f.name not in inherited}
