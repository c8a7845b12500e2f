"""Best-effort intra-project reference resolution.

Connects the raw entities produced by :mod:`smellforge.javaparse` into a
navigable model: superclass links, parameter/field type tags, invocation
callees (matched by name + arity, varargs tolerated), and member-access
targets. A name resolves only when it maps to exactly one project class;
everything ambiguous or unknown stays tagged external, which downstream
stages treat as "not interesting" rather than as an error.

``resolve_class_refs``/``resolve_methods`` must run exactly once per parsed
entity: method access-site lists are rebuilt in place from the parser's raw
records.
"""

from __future__ import annotations

from .model import (
    AccessKind,
    ClassEntity,
    FieldAccessSite,
    FieldEntity,
    MethodEntity,
    MethodRef,
    ProjectModel,
    TypeRef,
)


class Resolver:
    def __init__(self, classes: list[ClassEntity]):
        self.by_qualified: dict[str, ClassEntity] = {}
        self.by_simple: dict[str, list[str]] = {}
        for cls in classes:
            self.by_qualified[cls.qualified_name] = cls
            self.by_simple.setdefault(cls.simple_name, []).append(cls.qualified_name)

    # -- class-level -----------------------------------------------------------

    def resolve_type(self, raw: str | None, context: ClassEntity) -> TypeRef:
        """Resolve a raw (possibly dotted) type name from within ``context``."""
        if not raw:
            return TypeRef("", False)
        candidates = [raw]
        # nested types referenced from the declaring class or its outers
        prefix = context.qualified_name
        while prefix:
            candidates.append(f"{prefix}${raw.replace('.', '$')}")
            prefix = prefix.rsplit("$", 1)[0] if "$" in prefix else ""
        if context.package:
            candidates.append(f"{context.package}.{raw}")
            if "." in raw:
                candidates.append(f"{context.package}.{raw.replace('.', '$')}")
        if "." in raw:
            candidates.append(raw.replace(".", "$"))
        for cand in candidates:
            if cand in self.by_qualified:
                return TypeRef(cand, True)
        if "." not in raw:
            hits = self.by_simple.get(raw, [])
            if len(hits) == 1:
                return TypeRef(hits[0], True)
        return TypeRef(raw, False)

    def internal(self, type_ref: TypeRef) -> ClassEntity | None:
        if type_ref.is_internal:
            return self.by_qualified.get(type_ref.name)
        return None

    def ancestors(self, cls: ClassEntity) -> list[ClassEntity]:
        """Internal ancestor chain, nearest first; cycle-tolerant."""
        chain: list[ClassEntity] = []
        seen = {cls.qualified_name}
        current = cls
        while current.superclass_ref is not None and current.superclass_ref.is_internal:
            parent = self.by_qualified.get(current.superclass_ref.name)
            if parent is None or parent.qualified_name in seen:
                break
            seen.add(parent.qualified_name)
            chain.append(parent)
            current = parent
        return chain

    def resolve_class_refs(self, cls: ClassEntity) -> None:
        if cls.superclass_ref is not None:
            cls.superclass_ref = self.resolve_type(cls.superclass_ref.name, cls)
        for f in cls.fields:
            f.declared_type = self.resolve_type(f.declared_type.name, cls)

    # -- member lookup -----------------------------------------------------------

    def find_field(self, cls: ClassEntity, name: str) -> tuple[ClassEntity, FieldEntity] | None:
        for holder in [cls, *self.ancestors(cls)]:
            for f in holder.fields:
                if f.name == name:
                    return holder, f
        return None

    @staticmethod
    def _arity_ok(m: MethodEntity, arity: int) -> bool:
        if m.arity == arity:
            return True
        return bool(m.parameters) and m.parameters[-1].is_vararg and arity >= m.arity - 1

    def find_method(
        self, cls: ClassEntity, name: str, arity: int
    ) -> tuple[ClassEntity, MethodEntity] | None:
        """Nearest unique name+arity match up the internal ancestor chain.
        Same-class overloads sharing an arity are ambiguous -> no match."""
        for holder in [cls, *self.ancestors(cls)]:
            matches = [
                m for m in holder.methods if m.name == name and self._arity_ok(m, arity)
            ]
            if len(matches) == 1:
                return holder, matches[0]
            if len(matches) > 1:
                return None
        return None

    # -- method-level ------------------------------------------------------------

    def receiver_class(
        self, receiver: str | None, m: MethodEntity, cls: ClassEntity
    ) -> tuple[ClassEntity | None, TypeRef | None]:
        """Resolve a raw receiver to (internal class, type tag). Returns
        (None, TypeRef) when the declared type is known but external, and
        (None, None) when nothing is known."""
        if receiver is None or receiver == "this":
            return cls, TypeRef(cls.qualified_name, True)
        if receiver == "super":
            chain = self.ancestors(cls)
            if chain:
                return chain[0], TypeRef(chain[0].qualified_name, True)
            return None, None
        if receiver.startswith("this."):
            field_name = receiver[5:]
            hit = self.find_field(cls, field_name)
            if hit is None:
                return None, None
            ref = hit[1].declared_type
            return self.internal(ref), ref
        if "." not in receiver:
            if receiver in m.local_types:
                ref = self.resolve_type(m.local_types[receiver], cls)
                return self.internal(ref), ref
            if receiver in m.locals:
                return None, None  # untyped local (lambda/catch binding)
            for p in m.parameters:
                if p.name == receiver:
                    return self.internal(p.type_ref), p.type_ref
            hit = self.find_field(cls, receiver)
            if hit is not None:
                ref = hit[1].declared_type
                return self.internal(ref), ref
        ref = self.resolve_type(receiver, cls)
        if ref.is_internal:
            return self.internal(ref), ref
        return None, None

    def resolve_methods(self, cls: ClassEntity) -> None:
        for m in cls.methods:
            self._resolve_method(cls, m)

    def _resolve_method(self, cls: ClassEntity, m: MethodEntity) -> None:
        for p in m.parameters:
            p.type_ref = self.resolve_type(p.type_ref.name, cls)
        shadowed = set(m.locals) | {p.name for p in m.parameters}
        resolved_accesses: list[FieldAccessSite] = []
        for acc in m.field_accesses:
            if acc.receiver == "":
                if acc.member_name in shadowed:
                    continue
                hit = self.find_field(cls, acc.member_name)
                if hit is None:
                    continue
                acc.target = TypeRef(hit[0].qualified_name, True)
                resolved_accesses.append(acc)
                continue
            if acc.receiver == "this":
                hit = self.find_field(cls, acc.member_name)
                if hit is None:
                    continue
                acc.target = TypeRef(hit[0].qualified_name, True)
                resolved_accesses.append(acc)
                continue
            internal_cls, ref = self.receiver_class(acc.receiver, m, cls)
            if internal_cls is not None:
                acc.target = TypeRef(internal_cls.qualified_name, True)
                resolved_accesses.append(acc)
            elif ref is not None and ref.name:
                acc.target = TypeRef(ref.name, False)
                resolved_accesses.append(acc)
            # unknown receivers are dropped
        ancestor_names = {a.qualified_name for a in self.ancestors(cls)}
        for inv in m.invocations:
            target_cls, _ = self.receiver_class(inv.receiver, m, cls)
            if target_cls is not None:
                hit = self.find_method(target_cls, inv.name, inv.arity)
                if hit is not None:
                    inv.callee = MethodRef(hit[0].qualified_name, hit[1].name, hit[1].arity)
                # a call on a foreign internal receiver counts as foreign data
                # use regardless of whether the exact overload resolved
                if (
                    inv.receiver is not None
                    and target_cls.qualified_name != cls.qualified_name
                    and target_cls.qualified_name not in ancestor_names
                ):
                    resolved_accesses.append(
                        FieldAccessSite(
                            statement_index=inv.statement_index,
                            receiver=inv.receiver,
                            target=TypeRef(target_cls.qualified_name, True),
                            member_name=inv.name,
                            kind=AccessKind.METHOD_CALL_ON_FOREIGN,
                        )
                    )
        m.field_accesses = resolved_accesses


def resolve_model(model: ProjectModel) -> None:
    """Run full resolution over a freshly parsed model (exactly once)."""
    resolver = Resolver(model.classes)
    for cls in model.classes:
        resolver.resolve_class_refs(cls)
    for cls in model.classes:
        resolver.resolve_methods(cls)


def reresolve_class(cls: ClassEntity, classes: list[ClassEntity]) -> None:
    """Resolve one freshly parsed class against an overlay class list (used
    to recompute metrics for transformed entities in project context)."""
    resolver = Resolver(classes)
    resolver.resolve_class_refs(cls)
    resolver.resolve_methods(cls)


def fields_used_by(m: MethodEntity, cls: ClassEntity, resolver: Resolver) -> set[str]:
    """Names of ``cls``-chain fields the method touches, whether bare,
    via ``this.``, or as an access/call receiver."""
    own_chain = {cls.qualified_name} | {a.qualified_name for a in resolver.ancestors(cls)}
    field_names = {f.name for f in cls.fields}
    for a in resolver.ancestors(cls):
        field_names.update(f.name for f in a.fields)
    shadowed = set(m.locals) | {p.name for p in m.parameters}
    used: set[str] = set()
    for acc in m.field_accesses:
        if acc.receiver in ("", "this") and acc.target.is_internal and acc.target.name in own_chain:
            used.add(acc.member_name)
        receiver = acc.receiver[5:] if acc.receiver.startswith("this.") else acc.receiver
        if receiver in field_names and (receiver not in shadowed or acc.receiver.startswith("this.")):
            used.add(receiver)
    for inv in m.invocations:
        if inv.receiver is None:
            continue
        receiver = inv.receiver[5:] if inv.receiver.startswith("this.") else inv.receiver
        if receiver in field_names and (receiver not in shadowed or inv.receiver.startswith("this.")):
            used.add(receiver)
    return used
