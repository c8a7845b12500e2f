"""Large Class generation: candidates, merges, and the members-inverse property."""

import pytest

from smellforge.generators import find_merge_candidates_large_class, merge_classes
from smellforge.generators.base import TransformDiscard
from smellforge.generators.large_class import MergePatternLC
from smellforge.javaparse import parse_class_snippet
from conftest import model_from_sources


def check_members_inverse(model, sample):
    """Removing the extract-members ground truth restores the absorber's
    member set (P2 modulo the deleted absorbed-type fields)."""
    merged = parse_class_snippet(sample.new_source)
    merged_names = {f.name for f in merged.fields} | {m.name for m in merged.methods}
    absorber = model.class_index[sample.provenance["absorber"]["class"]]
    original = {f.name for f in absorber.fields} | {m.name for m in absorber.methods}
    removed = merged_names - set(sample.ground_truth.extract_members)
    assert removed == original - set(sample.provenance["deleted_fields"])


def test_mini_corpus_candidates(mini_model):
    cands = find_merge_candidates_large_class(mini_model)
    got = {
        (c.absorber.simple_name, c.absorbed.simple_name, c.pattern) for c in cands
    }
    assert ("Book", "Product", MergePatternLC.P1_INHERITANCE) in got
    assert ("User", "Cart", MergePatternLC.P2_USAGE) in got
    assert ("Book", "Price", MergePatternLC.P2_USAGE) in got
    # toString/id collisions exclude the Child <- Parent pair
    assert all(c.absorber.simple_name != "Child" for c in cands)


def test_p1_merge_absorbs_parent(mini_model):
    cands = find_merge_candidates_large_class(mini_model)
    cand = next(
        c
        for c in cands
        if c.absorber.simple_name == "Book" and c.pattern == MergePatternLC.P1_INHERITANCE
    )
    sample = merge_classes(cand, mini_model)
    merged = parse_class_snippet(sample.new_source)
    assert merged.superclass_ref is None  # extends Product removed
    names = {f.name for f in merged.fields} | {m.name for m in merged.methods}
    assert {"title", "basePrice", "getTitle", "describe"} <= names
    assert sorted(sample.ground_truth.extract_members) == [
        "basePrice", "describe", "getTitle", "title",
    ]
    check_members_inverse(mini_model, sample)


def test_p2_merge_rewrites_field_accesses(mini_model):
    cands = find_merge_candidates_large_class(mini_model)
    cand = next(
        c
        for c in cands
        if c.absorber.simple_name == "User" and c.pattern == MergePatternLC.P2_USAGE
    )
    sample = merge_classes(cand, mini_model)
    assert "private Cart cart;" not in sample.new_source
    assert "cart.total()" not in sample.new_source
    assert "total()" in sample.new_source
    assert "new Cart()" not in sample.new_source  # initializer statement deleted
    check_members_inverse(mini_model, sample)


def test_merged_class_metrics(mini_model):
    for cand in find_merge_candidates_large_class(mini_model):
        sample = merge_classes(cand, mini_model)
        merged = parse_class_snippet(sample.new_source)
        assert sample.metrics.nom == merged.nom
        assert sample.metrics.noa == merged.noa
        assert sample.metrics.loc is not None and sample.metrics.loc > 0
        check_members_inverse(mini_model, sample)


def test_collision_pairs_excluded():
    model = model_from_sources(
        {
            "p/P.java": "package p;\n\npublic class P {\n    int shared;\n    void go() { }\n}\n",
            "p/C.java": "package p;\n\npublic class C extends P {\n    int shared;\n    void other() { }\n}\n",
        }
    )
    assert find_merge_candidates_large_class(model) == []


def test_empty_absorbed_excluded():
    model = model_from_sources(
        {
            "p/P.java": "package p;\n\npublic class P {\n}\n",
            "p/C.java": "package p;\n\npublic class C extends P {\n    int x;\n}\n",
        }
    )
    assert find_merge_candidates_large_class(model) == []


def test_p1_retargets_grandparent_and_super_refs():
    model = model_from_sources(
        {
            "p/Top.java": "package p;\n\npublic class Top {\n    protected int base;\n}\n",
            "p/Mid.java": (
                "package p;\n\npublic class Mid extends Top {\n"
                "    protected int mid;\n\n"
                "    public int midValue() {\n        return mid + base;\n    }\n}\n"
            ),
            "p/Leaf.java": (
                "package p;\n\npublic class Leaf extends Mid {\n"
                "    public int leafValue() {\n        return super.midValue() + 1;\n    }\n}\n"
            ),
        }
    )
    cands = find_merge_candidates_large_class(model)
    cand = next(c for c in cands if c.absorber.simple_name == "Leaf")
    sample = merge_classes(cand, model)
    merged = parse_class_snippet(sample.new_source)
    assert merged.superclass_ref is not None
    assert merged.superclass_ref.name == "Top"  # re-targeted at the grandparent
    assert "super.midValue" not in sample.new_source
    assert "this.midValue" in sample.new_source


def test_p2_bare_field_use_discards():
    model = model_from_sources(
        {
            "p/Part.java": "package p;\n\npublic class Part {\n    int weight;\n}\n",
            "p/Whole.java": (
                "package p;\n\npublic class Whole {\n"
                "    private Part part;\n\n"
                "    public boolean ready() {\n        return part != null;\n    }\n}\n"
            ),
        }
    )
    cands = find_merge_candidates_large_class(model)
    assert len(cands) == 1
    with pytest.raises(TransformDiscard, match="outside member access"):
        merge_classes(cands[0], model)


def test_constructors_not_copied(mini_model):
    # User's constructor stays behind when Cart absorbs nothing from it; and
    # when a class with a constructor is absorbed, the constructor is dropped
    model = model_from_sources(
        {
            "p/Engine.java": (
                "package p;\n\npublic class Engine {\n"
                "    private int power;\n\n"
                "    public Engine(int power) {\n        this.power = power;\n    }\n\n"
                "    public int thrust() {\n        return power * 2;\n    }\n}\n"
            ),
            "p/Car.java": (
                "package p;\n\npublic class Car {\n"
                "    private Engine engine;\n\n"
                "    public int topSpeed() {\n        return engine.thrust() + 100;\n    }\n}\n"
            ),
        }
    )
    cands = find_merge_candidates_large_class(model)
    assert len(cands) == 1
    sample = merge_classes(cands[0], model)
    merged = parse_class_snippet(sample.new_source)
    assert not any(m.is_constructor for m in merged.methods)
    assert {"power", "thrust"} <= set(sample.ground_truth.extract_members)
    check_members_inverse(model, sample)
