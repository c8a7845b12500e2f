"""Generative checks: classes assembled from a constrained grammar carry
their member/statement counts by construction, so the parser can be checked
against ground truth on arbitrary shapes."""

from hypothesis import given, settings, strategies as st

from smellforge.javaparse import effective_loc, parse_class_snippet, parse_method_snippet

FIELD_NAMES = ["alpha", "beta", "gamma", "delta", "epsilon", "zeta"]
METHOD_NAMES = ["mill", "grind", "polish", "buff", "rinse", "dry"]


@st.composite
def statements(draw):
    kind = draw(st.integers(min_value=0, max_value=3))
    a = draw(st.integers(min_value=0, max_value=99))
    if kind == 0:
        return f"        acc = acc + {a};"
    if kind == 1:
        return f"        int v{a} = acc * {a + 1};"
    if kind == 2:
        return f"        if (acc > {a}) {{\n            acc = acc - 1;\n        }}"
    return f"        for (int i{a} = 0; i{a} < {a + 1}; i{a}++) {{\n            acc = acc + i{a};\n        }}"


@st.composite
def java_classes(draw):
    n_fields = draw(st.integers(min_value=0, max_value=len(FIELD_NAMES)))
    n_methods = draw(st.integers(min_value=0, max_value=len(METHOD_NAMES)))
    lines = ["class Probe {"]
    for f in FIELD_NAMES[:n_fields]:
        lines.append(f"    private int {f};")
    stmt_counts = []
    for m in METHOD_NAMES[:n_methods]:
        body = draw(st.lists(statements(), min_size=0, max_size=5))
        stmt_counts.append(len(body) + 1)  # + trailing return
        lines.append(f"    int {m}(int acc) {{")
        lines.extend(body)
        lines.append("        return acc;")
        lines.append("    }")
    lines.append("}")
    return "\n".join(lines), n_fields, n_methods, stmt_counts


@given(java_classes())
@settings(max_examples=150, deadline=None)
def test_member_and_statement_counts_by_construction(case):
    source, n_fields, n_methods, stmt_counts = case
    cls = parse_class_snippet(source)
    assert cls.noa == n_fields
    assert cls.nom == n_methods
    assert [len(m.body_statements) for m in cls.methods] == stmt_counts
    # parse/print fixpoint on every member
    for m in cls.methods:
        again = parse_method_snippet(m.source_text, cls.simple_name)
        assert len(again.body_statements) == len(m.body_statements)
        assert again.span[1] - again.span[0] == m.span[1] - m.span[0]
    assert effective_loc(source) <= source.count("\n") + 1


@st.composite
def annotated_texts(draw):
    """(text, effective line count) built line-by-line with known tags."""
    rows = draw(
        st.lists(
            st.sampled_from(["code", "blank", "comment", "mixed"]),
            min_size=1,
            max_size=20,
        )
    )
    lines = []
    effective = 0
    for i, tag in enumerate(rows):
        if tag == "code":
            lines.append(f"int v{i} = {i};")
            effective += 1
        elif tag == "blank":
            lines.append("")
        elif tag == "comment":
            lines.append(f"// line {i}")
        else:
            lines.append(f"int w{i} = {i}; // trailing note")
            effective += 1
    return "\n".join(lines), effective


@given(annotated_texts())
@settings(max_examples=150, deadline=None)
def test_effective_loc_by_construction(case):
    text, expected = case
    assert effective_loc(text) == expected


@given(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=8))
def test_block_comment_spans_excluded(before, inside):
    text = "\n".join(
        [f"int a{i} = {i};" for i in range(before)]
        + ["/*"]
        + [f"   commented {i}" for i in range(inside)]
        + ["*/"]
        + ["int tail = 0;"]
    )
    assert effective_loc(text) == before + 1
