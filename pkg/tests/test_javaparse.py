import pytest

from smellforge.javaparse import (
    JavaSyntaxError,
    effective_loc,
    parse_class_snippet,
    parse_method_snippet,
    parse_unit,
    tokenize,
)
from smellforge.model import CallPattern, ClassKind


def test_tokenize_basics():
    toks = tokenize('int x = 12; // note\nString s = "a;b";')
    texts = [t.text for t in toks]
    assert texts == ["int", "x", "=", "12", ";", "String", "s", "=", "<str>", ";"]
    assert toks[0].kind == "kw"
    assert toks[1].kind == "ident"
    assert toks[3].kind == "num"


def test_tokenize_multichar_operators():
    toks = tokenize("a >>= 2; b >>> 1; c -> d; E::f")
    ops = [t.text for t in toks if t.kind == "op" and t.text not in ";"]
    assert ">>=" in ops and ">>>" in ops and "->" in ops and "::" in ops


def test_tokenize_unterminated_string_raises():
    with pytest.raises(JavaSyntaxError):
        tokenize('String s = "oops;')


def test_tokenize_unterminated_comment_raises():
    with pytest.raises(JavaSyntaxError):
        tokenize("int a; /* never closed")


def test_effective_loc_one_liner():
    assert effective_loc("int id() { return 1; }") == 1


def test_effective_loc_skips_blank_and_comment_lines():
    text = "int f() {\n    int a = 1;\n\n    // only a comment\n    return a;\n}"
    assert effective_loc(text) == 4


def test_effective_loc_two_line_empty_body():
    assert effective_loc("void f() {\n}") == 2


def test_effective_loc_block_comment_spanning_lines():
    text = "int f() {\n/* one\n   two\n   three */\nreturn 1;\n}"
    assert effective_loc(text) == 3


def test_effective_loc_string_contents_count():
    text = 'String s =\n    "line; // not a comment";'
    assert effective_loc(text) == 2


def test_parse_unit_unbalanced_brace_raises():
    with pytest.raises(JavaSyntaxError):
        parse_unit("class A { void f() { }")


def test_parse_unit_garbage_member_raises():
    with pytest.raises(JavaSyntaxError):
        parse_unit("class A { this is not java }")


def test_nested_class_qualified_names():
    unit = parse_unit("package p;\nclass Outer {\n  class Inner { int x; }\n}")
    names = [c.qualified_name for c in unit.classes]
    assert names == ["p.Outer", "p.Outer$Inner"]
    assert unit.classes[0].nested == ["p.Outer$Inner"]


def test_interface_and_enum_kinds():
    unit = parse_unit(
        "interface I { int f(); }\n"
        "enum E { A, B; int g() { return 0; } }\n"
        "@interface Ann { int value(); }"
    )
    kinds = {c.simple_name: c.kind for c in unit.classes}
    assert kinds == {
        "I": ClassKind.INTERFACE,
        "E": ClassKind.ENUM,
        "Ann": ClassKind.ANNOTATION,
    }
    enum = next(c for c in unit.classes if c.simple_name == "E")
    assert [f.name for f in enum.fields] == ["A", "B"]
    assert [m.name for m in enum.methods] == ["g"]


def test_anonymous_class_indexed_separately():
    unit = parse_unit(
        "class A {\n"
        "  void f() {\n"
        "    Runnable r = new Runnable() {\n"
        "      public void run() { int y = 1; }\n"
        "    };\n"
        "  }\n"
        "}"
    )
    names = [c.qualified_name for c in unit.classes]
    assert names == ["A", "A$1"]
    anon = unit.classes[1]
    assert anon.is_anonymous
    assert [m.name for m in anon.methods] == ["run"]
    # the anonymous body's code is not attributed to the enclosing method
    f = unit.classes[0].methods[0]
    assert all(acc.member_name != "y" for acc in f.field_accesses)


def test_multi_declarator_fields():
    cls = parse_class_snippet("class A { int a, b = 2, c[]; }")
    assert [f.name for f in cls.fields] == ["a", "b", "c"]
    assert all(f.type_text == "int" for f in cls.fields)


def test_constructor_detection():
    cls = parse_class_snippet("class A { A(int x) { } void A2() { } }")
    assert cls.methods[0].is_constructor
    assert not cls.methods[1].is_constructor
    assert cls.methods[0].return_type == ""


def test_generic_method_and_params():
    cls = parse_class_snippet(
        "class A { <T> java.util.List<T> wrap(java.util.Map<String, T> m, int n) { return null; } }"
    )
    m = cls.methods[0]
    assert m.type_params == ["T"]
    assert m.parameters[0].type_text == "java.util.Map<String, T>"
    assert m.parameters[0].name == "m"
    assert m.parameters[1].name == "n"


def test_varargs_param():
    cls = parse_class_snippet("class A { void f(String... parts) { } }")
    assert cls.methods[0].parameters[0].is_vararg


def test_method_snippet_roundtrip_spans():
    text = "void f() {\n    int a = 1;\n    g(a);\n}"
    m = parse_method_snippet(text)
    assert m.span == (1, 4)
    assert m.source_text == text
    assert [s.kind for s in m.body_statements] == ["simple", "simple"]
    assert m.invocations[0].expr_start == (3, 4)


def test_statement_splitting_covers_control_flow():
    cls = parse_class_snippet(
                "class A {\n"
        "  void f(int n) {\n"
        "    if (n > 0) { g(); } else if (n < -5) { h(); } else { g(); }\n"
        "    while (n-- > 0) g();\n"
        "    do { h(); } while (n < 10);\n"
        "    switch (n) { case 1: g(); break; default: h(); }\n"
        "    try { g(); } catch (RuntimeException e) { h(); } finally { g(); }\n"
        "    synchronized (this) { h(); }\n"
        "    label: g();\n"
        "    ;\n"
        "  }\n"
        "  void g() { }\n"
        "  void h() { }\n"
        "}"
    )
    kinds = [s.kind for s in cls.methods[0].body_statements]
    assert kinds == ["if", "while", "do", "switch", "try", "sync", "simple", "empty"]


def test_statement_call_classification_inside_blocks():
    cls = parse_class_snippet(
        "class A {\n"
        "  void f(int n) {\n"
        "    if (n > 0) {\n"
        "      g();\n"
        "    }\n"
        "    switch (n) { case 1: g(); }\n"
        "  }\n"
        "  void g() { }\n"
        "}"
    )
    patterns = [inv.pattern for inv in cls.methods[0].invocations]
    assert patterns == [CallPattern.STATEMENT_CALL, CallPattern.STATEMENT_CALL]


def test_local_collection_variants():
    cls = parse_class_snippet(
        "class A {\n"
        "  void f(java.util.List<String> input) {\n"
        "    int a = 1, b;\n"
        "    String s = \"x\";\n"
        "    for (int i = 0; i < a; i++) { b = i; }\n"
        "    for (String item : input) { s = item; }\n"
        "    try (java.io.StringWriter w = new java.io.StringWriter()) { }\n"
        "    catchless();\n"
        "    input.forEach(x -> helper(x));\n"
        "  }\n"
        "  void catchless() { }\n"
        "  void helper(Object o) { }\n"
        "}"
    )
    m = cls.methods[0]
    assert set(m.locals) >= {"a", "b", "s", "i", "item", "w", "x"}
    assert m.local_types["s"] == "String"
    assert m.local_types["i"] == "int"


def test_lambda_and_array_initializers_are_one_statement():
    cls = parse_class_snippet(
        "class A {\n"
        "  void f() {\n"
        "    int[] xs = {1, 2, 3};\n"
        "    Runnable r = () -> { g(); h(); };\n"
        "  }\n"
        "  void g() { }\n"
        "  void h() { }\n"
        "}"
    )
    assert [s.kind for s in cls.methods[0].body_statements] == ["simple", "simple"]


def test_reparse_fixpoint_on_entities(mini_model):
    # re-serializing an entity's text and re-parsing preserves structure
    for cls in mini_model.classes:
        for m in cls.methods:
            again = parse_method_snippet(m.source_text, cls.simple_name)
            assert again.span[1] - again.span[0] == m.span[1] - m.span[0]
            assert len(again.body_statements) == len(m.body_statements)
            assert again.arity == m.arity
        if "$" in cls.qualified_name:
            continue
        cls_again = parse_class_snippet(cls.source_text)
        assert cls_again.nom == cls.nom
        assert cls_again.noa == cls.noa
        assert cls_again.span[1] - cls_again.span[0] == cls.span[1] - cls.span[0]


def test_source_text_line_count_matches_span(mini_model):
    for cls in mini_model.classes:
        for m in cls.methods:
            assert m.source_text.count("\n") + 1 == m.span[1] - m.span[0] + 1
        assert cls.source_text.count("\n") + 1 == cls.span[1] - cls.span[0] + 1
