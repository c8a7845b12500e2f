"""Generated-sample type, the post-generation symbol sweep, and orchestration.

Every transformation must hand back entities that (a) re-parse cleanly and
(b) pass the symbol sweep: no bare identifier in the rewritten code may
resolve nowhere among the entity's own scope, its ancestors, the project's
classes, or the source files' imports. Candidates failing either gate are
discarded with a reason instead of being repaired, so everything emitted is
verifiably well-formed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..common import RefactoringAction, SmellKind
from ..javaparse import _anon_body_ranges, build_match_map, tokenize
from ..metrics import MetricVector
from ..model import ClassEntity, MethodEntity, ProjectModel

log = logging.getLogger(__name__)


class TransformDiscard(Exception):
    """A candidate that cannot be transformed into a well-formed sample."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass
class GeneratedSample:
    smell: SmellKind
    new_source: str
    context_sources: dict[str, str]
    ground_truth: RefactoringAction
    provenance: dict
    metrics: MetricVector


# Types usable without an import; enough for the sweep not to flag ordinary
# JDK-facing code. Anything else must come from the file's imports.
COMMON_TYPES = frozenset(
    """String Object System Math Integer Long Double Float Boolean Character
    Byte Short Void Number StringBuilder StringBuffer CharSequence Comparable
    Runnable Thread Exception RuntimeException IllegalArgumentException
    IllegalStateException NullPointerException IndexOutOfBoundsException
    ArithmeticException ArrayIndexOutOfBoundsException ClassCastException
    NumberFormatException UnsupportedOperationException CloneNotSupportedException
    InterruptedException Throwable Error AssertionError StackOverflowError
    OutOfMemoryError Override Deprecated SuppressWarnings FunctionalInterface
    SafeVarargs Iterable Class Enum Cloneable AutoCloseable Appendable
    List ArrayList LinkedList Map HashMap TreeMap LinkedHashMap Set HashSet
    TreeSet LinkedHashSet Collection Collections Arrays Objects Optional
    Iterator ListIterator Comparator Queue Deque ArrayDeque Stack Vector
    Random Scanner Date Calendar UUID StringJoiner StringTokenizer
    IOException UncheckedIOException FileNotFoundException File Files Paths
    Path InputStream OutputStream Reader Writer BufferedReader BufferedWriter
    PrintStream PrintWriter Stream IntStream LongStream DoubleStream
    Function Supplier Consumer Predicate BiFunction BiConsumer BinaryOperator
    UnaryOperator Locale TimeZone Pattern Matcher Thread ThreadLocal
    BigDecimal BigInteger Duration Instant LocalDate LocalDateTime LocalTime""".split()
)

PACKAGE_ROOTS = frozenset({"java", "javax", "jakarta"})


@dataclass
class SweepScope:
    names: set[str] = field(default_factory=set)
    package_roots: set[str] = field(default_factory=set)
    wildcard_imports: bool = False


def build_scope(
    model: ProjectModel,
    own: ClassEntity,
    ancestor_classes: list[ClassEntity],
    *,
    import_sources: list[ClassEntity] | None = None,
    extra_names: set[str] | None = None,
) -> SweepScope:
    names: set[str] = set()
    names.update(f.name for f in own.fields)
    names.update(m.name for m in own.methods)
    names.update(own.type_params)
    for anc in ancestor_classes:
        names.update(f.name for f in anc.fields)
        names.update(m.name for m in anc.methods)
    for cls in model.classes:
        names.add(cls.simple_name)
    names.update(COMMON_TYPES)
    wildcard = False
    for src in import_sources or [own]:
        names.update(src.imports)
        wildcard = wildcard or src.has_wildcard_import
    if extra_names:
        names.update(extra_names)
    roots = {cls.package.split(".", 1)[0] for cls in model.classes if cls.package}
    roots |= PACKAGE_ROOTS
    return SweepScope(names=names, package_roots=roots, wildcard_imports=wildcard)


def _sweep_tokens(text: str, allowed_for_index, scope: SweepScope) -> list[str]:
    tokens = tokenize(text)
    match = build_match_map(tokens)
    skip_ranges = _anon_body_ranges(tokens, match, 0, len(tokens))
    unresolved: set[str] = set()
    boundary = {";", "{", "}"}
    for idx, tok in enumerate(tokens):
        if tok.kind != "ident":
            continue
        if any(lo <= idx < hi for lo, hi in skip_ranges):
            continue
        prev = tokens[idx - 1] if idx > 0 else None
        if prev is not None and prev.text in (".", "::", "@"):
            continue
        if prev is not None and prev.kind == "kw" and prev.text in ("break", "continue"):
            continue
        nxt = tokens[idx + 1] if idx + 1 < len(tokens) else None
        if nxt is not None and nxt.text == ":" and (prev is None or prev.text in boundary):
            continue  # statement label
        if tok.text in allowed_for_index(idx):
            continue
        if nxt is not None and nxt.text == "." and (
            tok.text in scope.package_roots or tok.text in PACKAGE_ROOTS
        ):
            continue
        if scope.wildcard_imports and tok.text[:1].isupper():
            continue
        unresolved.add(tok.text)
    return sorted(unresolved)


def sweep_method(m: MethodEntity, scope: SweepScope) -> list[str]:
    """Unresolved bare identifiers in a method's source."""
    allowed = (
        scope.names
        | set(m.locals)
        | {p.name for p in m.parameters}
        | set(m.type_params)
    )
    return _sweep_tokens(m.source_text, lambda idx: allowed, scope)


def sweep_class(cls: ClassEntity, scope: SweepScope) -> list[str]:
    """Unresolved bare identifiers anywhere in a class's source. Method
    regions additionally admit that method's locals and parameters."""
    base = set(scope.names)
    base.update(f.name for f in cls.fields)
    base.update(m.name for m in cls.methods)
    base.update(cls.type_params)
    per_method: list[tuple[int, int, set[str]]] = []
    offset = cls.span[0] - 1
    for m in cls.methods:
        extra = set(m.locals) | {p.name for p in m.parameters} | set(m.type_params)
        per_method.append((m.span[0] - offset, m.span[1] - offset, extra))

    tokens = tokenize(cls.source_text)

    def allowed_for_index(idx: int) -> set[str]:
        line = tokens[idx].line
        for lo, hi, extra in per_method:
            if lo <= line <= hi:
                return base | extra
        return base

    return _sweep_tokens(cls.source_text, allowed_for_index, scope)


def generate_all(model: ProjectModel) -> tuple[list[GeneratedSample], list[dict]]:
    """Run all three generators over a model; returns (samples, discard log)."""
    from .feature_envy import find_move_candidates_feature_envy, move_method
    from .large_class import find_merge_candidates_large_class, merge_classes
    from .long_method import find_merge_candidates_long_method, merge_methods

    samples: list[GeneratedSample] = []
    discards: list[dict] = []

    def run(finder, transform, label: str) -> None:
        for cand in finder(model):
            try:
                samples.append(transform(cand, model))
            except TransformDiscard as exc:
                discards.append({"smell": label, "candidate": cand.describe(), "reason": exc.reason})
                log.debug("discarded %s candidate %s: %s", label, cand.describe(), exc.reason)

    run(find_merge_candidates_long_method, merge_methods, SmellKind.LONG_METHOD.value)
    run(find_merge_candidates_large_class, merge_classes, SmellKind.LARGE_CLASS.value)
    run(find_move_candidates_feature_envy, move_method, SmellKind.FEATURE_ENVY.value)
    return samples, discards
