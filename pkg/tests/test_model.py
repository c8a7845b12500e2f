import pytest

from smellforge.model import (
    ModelError,
    ProjectModel,
    lookup_class,
    unique_fields_of,
)


def test_lookup_exact_match(mini_model):
    cls = lookup_class(mini_model, "shop.Book")
    assert cls is not None and cls.simple_name == "Book"


def test_lookup_external_absent(mini_model):
    assert lookup_class(mini_model, "java.util.List") is None


def test_lookup_is_case_sensitive(mini_model):
    assert lookup_class(mini_model, "shop.Casing") is not None
    assert lookup_class(mini_model, "shop.casing") is not None
    assert lookup_class(mini_model, "shop.CASING") is None
    assert (
        lookup_class(mini_model, "shop.Casing")
        is not lookup_class(mini_model, "shop.casing")
    )


def test_unique_fields_excludes_redeclared(mini_model):
    child = lookup_class(mini_model, "shop.Child")
    assert unique_fields_of(mini_model, child) == {"extra"}


def test_unique_fields_no_parent(mini_model):
    cart = lookup_class(mini_model, "shop.Cart")
    assert unique_fields_of(mini_model, cart) == {"total"}


def test_unique_fields_disjoint_parent(mini_model):
    book = lookup_class(mini_model, "shop.Book")
    assert unique_fields_of(mini_model, book) == {"price", "stock"}


def test_class_index_is_bijection(mini_model):
    assert len(mini_model.class_index) == len(mini_model.classes)
    for cls in mini_model.classes:
        assert mini_model.class_index[cls.qualified_name] is cls


def test_site_statement_indices_in_bounds(mini_model):
    for cls in mini_model.classes:
        for m in cls.methods:
            n = len(m.body_statements)
            for site in m.invocations:
                assert 0 <= site.statement_index < n
            for acc in m.field_accesses:
                assert 0 <= acc.statement_index < n


def test_resolved_callees_exist(mini_model):
    for cls in mini_model.classes:
        for m in cls.methods:
            for inv in m.invocations:
                if inv.callee is None:
                    continue
                owner = mini_model.class_index[inv.callee.owner]
                assert any(
                    x.name == inv.callee.name and x.arity == inv.callee.arity
                    for x in owner.methods
                )


def test_inheritance_cycle_raises():
    from smellforge.javaparse import parse_unit
    from smellforge.analysis import resolve_model

    unit = parse_unit("package p;\nclass A extends B { int x; }\nclass B extends A { }")
    model = ProjectModel(project_id="p", classes=unit.classes, files={})
    resolve_model(model)
    a = model.class_index["p.A"]
    with pytest.raises(ModelError):
        unique_fields_of(model, a)


def test_model_roundtrip_through_json(mini_model):
    again = ProjectModel.from_dict(mini_model.to_dict())
    assert [c.qualified_name for c in again.classes] == [
        c.qualified_name for c in mini_model.classes
    ]
    for a, b in zip(again.classes, mini_model.classes):
        assert a.to_dict() == b.to_dict()
    assert again.to_dict() == mini_model.to_dict()
