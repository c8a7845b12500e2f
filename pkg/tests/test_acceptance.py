"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to get one line per
criterion. Tolerances are exact (0) unless a runtime bound is stated.
"""

import json
import time
from pathlib import Path

import pytest
from click.testing import CliRunner

from smellforge import metrics as M
from smellforge.cli import main as cli_main
from smellforge.common import Group, Label, SmellKind
from smellforge.config import load_config
from smellforge.generators import generate_all
from smellforge.generators.base import build_scope, sweep_class, sweep_method
from smellforge.analysis import Resolver
from smellforge.ingest import build_project_model
from smellforge.javaparse import parse_class_snippet, parse_method_snippet
from smellforge.store import read_records
from smellforge.validate import validate_dataset

from conftest import method_by_key
from test_generators_lm import check_extract_inverse
from test_generators_lc import check_members_inverse
from test_grouping import all_cells, brute_force, make_candidate, test_randomized_oracle_10k

REPO = Path(__file__).parent.parent
CORPUS = REPO / "corpus"


def report(name):
    print(f"\nACCEPT {name}: PASS")


@pytest.fixture(scope="module")
def scaled_models():
    cfg = load_config(CORPUS / "pipeline.yaml")
    return [build_project_model(p) for p in cfg.projects]


@pytest.fixture(scope="module")
def scaled_run(tmp_path_factory):
    """Full pipeline run over the bundled corpus, timed."""
    out_root = tmp_path_factory.mktemp("scaled")
    config = out_root / "pipeline.yaml"
    config.write_text(
        "projects:\n"
        f"  - id: webshop\n    roots: [{CORPUS / 'webshop' / 'src'}]\n    role: TRAIN\n"
        f"  - id: analytics\n    roots: [{CORPUS / 'analytics' / 'src'}]\n    role: EVAL\n"
        "seed: 7\n"
        "balance: true\n"
        "output_dir: out\n"
    )
    runner = CliRunner()
    started = time.time()
    for stage in ("ingest", "generate", "group", "export"):
        result = runner.invoke(cli_main, [stage, "-c", str(config)], catch_exceptions=False)
        assert result.exit_code == 0, f"{stage}: {result.output}"
    elapsed = time.time() - started
    return {"config": config, "out": out_root / "out", "elapsed": elapsed, "runner": runner}


def test_metric_oracle_exact(mini_model, metrics_expected):
    """LOC/NOM/NOA/NFDI match the hand-computed answer file exactly, < 5 s."""
    started = time.time()
    for name, want in metrics_expected["classes"].items():
        cls = mini_model.class_index[name]
        assert M.loc(cls) == want["loc"]
        assert M.nom(cls) == want["nom"]
        assert M.noa(cls) == want["noa"]
    for key, want in metrics_expected["methods"].items():
        _, m = method_by_key(mini_model, key)
        assert M.loc(m) == want["loc"]
        assert M.nfdi(m, mini_model) == want["nfdi"]
    assert time.time() - started < 5.0
    report("metric oracle (exact, <5s)")


def test_pattern_classification_100pct(mini_model, patterns_expected):
    """Every fixture invocation carries its hand-assigned pattern."""
    checked = 0
    for key, expected in patterns_expected.items():
        _, m = method_by_key(mini_model, key)
        got = [[inv.name, inv.pattern.value] for inv in m.invocations]
        assert got == expected, key
        checked += len(expected)
    assert checked > 0
    report(f"pattern classification ({checked} invocations, 100%)")


def _sweep_sample(sample, model):
    resolver = Resolver(model.classes)
    if sample.smell == SmellKind.LONG_METHOD:
        info = sample.provenance["caller"]
        owner = model.class_index[info["class"]]
        merged = parse_method_snippet(sample.new_source, owner.simple_name)
        callee_cls = model.class_index[sample.provenance["callee"]["class"]]
        scope = build_scope(
            model, owner, resolver.ancestors(owner),
            import_sources=[owner, callee_cls],
            extra_names=set(owner.type_params) | set(callee_cls.type_params),
        )
        return sweep_method(merged, scope)
    if sample.smell == SmellKind.LARGE_CLASS:
        merged = parse_class_snippet(sample.new_source)
        absorber = model.class_index[sample.provenance["absorber"]["class"]]
        absorbed = model.class_index[sample.provenance["absorbed"]["class"]]
        if sample.provenance["pattern"] == "P1_INHERITANCE":
            ancestors = resolver.ancestors(absorbed)
        else:
            ancestors = resolver.ancestors(absorber)
        scope = build_scope(model, merged, ancestors, import_sources=[absorber, absorbed])
        return sweep_class(merged, scope)
    source = model.class_index[sample.provenance["original_owner"]]
    target = model.class_index[sample.provenance["generation_target"]]
    new_target = parse_class_snippet(sample.context_sources["target_class"])
    moved = next(
        x
        for x in new_target.methods
        if x.name == sample.provenance["method"]["name"]
        and x.arity == sample.provenance["method"]["arity"]
    )
    extra = {sample.provenance["instance_ref"]} if sample.provenance.get("instance_ref") else set()
    scope = build_scope(
        model, new_target, resolver.ancestors(target),
        import_sources=[source, target], extra_names=extra,
    )
    return sweep_method(moved, scope)


def test_generation_well_formedness(mini_model, scaled_models):
    """100% of emitted samples re-parse; the symbol sweep reports zero
    unresolved identifiers."""
    total = 0
    for model in [mini_model, *scaled_models]:
        samples, _ = generate_all(model)
        for s in samples:
            if s.smell == SmellKind.LARGE_CLASS:
                parse_class_snippet(s.new_source)
            elif s.smell == SmellKind.LONG_METHOD:
                owner = model.class_index[s.provenance["caller"]["class"]]
                parse_method_snippet(s.new_source, owner.simple_name)
            else:
                parse_method_snippet(s.new_source)
                parse_class_snippet(s.context_sources["target_class"])
            unresolved = _sweep_sample(s, model)
            assert unresolved == [], f"{s.smell}: {unresolved}"
            total += 1
    assert total > 0
    report(f"generation well-formedness ({total} samples re-parsed, 0 unresolved)")


def test_inverse_refactoring_property(mini_model, scaled_models):
    """Extract-lines recovers each merged callee; removing extract-members
    restores each absorber. 100% of samples."""
    lm = lc = 0
    for model in [mini_model, *scaled_models]:
        samples, _ = generate_all(model)
        for s in samples:
            if s.smell == SmellKind.LONG_METHOD:
                check_extract_inverse(model, s)
                lm += 1
            elif s.smell == SmellKind.LARGE_CLASS:
                check_members_inverse(model, s)
                lc += 1
    assert lm > 0 and lc > 0
    report(f"inverse refactoring ({lm} long-method, {lc} large-class samples)")


def test_grouping_oracle_agreement():
    """10,000 randomized candidates agree with the brute-force table; the
    exhaustive enumeration fires exactly one rule per cell."""
    from smellforge.grouping import assign_group

    for smell, origin, level, advisor in all_cells():
        rule, group, label = brute_force(smell, origin, level, advisor)
        got = assign_group(make_candidate(smell, origin, level, advisor))
        assert (got.rule_id, got.group, got.auto_label) == (rule, group, label)
    test_randomized_oracle_10k()
    report("grouping oracle (exhaustive + 10,000 randomized, 100%)")


def test_threshold_conformance(scaled_run):
    """A_Group positives exceed the max thresholds and negatives stay under
    the min thresholds, everywhere."""
    t = load_config(scaled_run["config"]).thresholds
    records = read_records(scaled_run["out"] / "dataset.jsonl")
    assert records
    violations = 0
    for r in records:
        if r.group != Group.A_GROUP:
            continue
        m = r.metrics
        if r.smell == SmellKind.LONG_METHOD:
            ok = m.loc > t.lm_max if r.label == Label.POSITIVE else m.loc < t.lm_min
        elif r.smell == SmellKind.FEATURE_ENVY:
            ok = (
                m.nfdi is not None and m.nfdi > t.fe_max
                if r.label == Label.POSITIVE
                else m.nfdi is not None and m.nfdi < t.fe_min
            )
        else:
            if r.label == Label.POSITIVE:
                ok = m.loc > t.lc_max_loc and m.nom > t.lc_max_nom and m.noa > t.lc_max_noa
            else:
                ok = m.loc < t.lc_min_loc and m.nom < t.lc_min_nom and m.noa < t.lc_min_noa
        violations += 0 if ok else 1
    assert violations == 0
    report(f"threshold conformance ({len(records)} records, 0 violations)")


def test_balance_property(scaled_run, tmp_path):
    """With the balance flag, TRAIN positives equal TRAIN negatives per smell;
    the evaluation split keeps its natural ratio."""
    balanced = read_records(scaled_run["out"] / "dataset.jsonl")
    for smell in SmellKind:
        pos = sum(1 for r in balanced if r.split == "TRAIN" and r.smell == smell and r.label == Label.POSITIVE)
        neg = sum(1 for r in balanced if r.split == "TRAIN" and r.smell == smell and r.label == Label.NEGATIVE)
        assert pos == neg, f"{smell}: {pos} != {neg}"
        assert pos > 0

    runner = scaled_run["runner"]
    result = runner.invoke(
        cli_main, ["export", "-c", str(scaled_run["config"]), "--no-balance"], catch_exceptions=False
    )
    assert result.exit_code == 0
    natural = read_records(scaled_run["out"] / "dataset.jsonl")
    bal_eval = [r.to_dict() for r in balanced if r.split == "EVAL"]
    nat_eval = [r.to_dict() for r in natural if r.split == "EVAL"]
    assert bal_eval == nat_eval
    # restore the balanced export for later criteria
    result = runner.invoke(cli_main, ["export", "-c", str(scaled_run["config"])], catch_exceptions=False)
    assert result.exit_code == 0
    report("balance property (TRAIN equalized, EVAL untouched)")


def test_scaled_end_to_end(scaled_run):
    """The bundled corpus (<= 15 kLOC) runs in under 5 minutes, yields
    auto positives and review samples for every smell, and validates."""
    kloc = sum(
        p.read_text().count("\n") for p in (CORPUS / "webshop").rglob("*.java")
    )
    assert kloc <= 15_000
    assert scaled_run["elapsed"] < 300, f"pipeline took {scaled_run['elapsed']:.0f}s"

    working = read_records(scaled_run["out"] / "records.jsonl")
    dataset = read_records(scaled_run["out"] / "dataset.jsonl")
    for smell in SmellKind:
        a_pos = sum(
            1
            for r in dataset
            if r.smell == smell and r.group == Group.A_GROUP and r.label == Label.POSITIVE
        )
        m_group = sum(1 for r in working if r.smell == smell and r.group == Group.M_GROUP)
        assert a_pos > 0, f"{smell}: no auto positives"
        assert m_group > 0, f"{smell}: no review samples"

    result = scaled_run["runner"].invoke(
        cli_main, ["validate", "-c", str(scaled_run["config"])], catch_exceptions=False
    )
    assert result.exit_code == 0, result.output
    report(
        f"scaled end-to-end ({kloc} corpus lines, {scaled_run['elapsed']:.1f}s, validate ok)"
    )


def test_determinism_byte_identical(tmp_path):
    """Two runs with identical corpus, config, and seed produce byte-identical
    dataset files."""
    outputs = []
    runner = CliRunner()
    for run_dir in (tmp_path / "run1", tmp_path / "run2"):
        run_dir.mkdir()
        config = run_dir / "pipeline.yaml"
        config.write_text(
            "projects:\n"
            f"  - id: webshop\n    roots: [{CORPUS / 'webshop' / 'src'}]\n    role: TRAIN\n"
            f"  - id: analytics\n    roots: [{CORPUS / 'analytics' / 'src'}]\n    role: EVAL\n"
            "seed: 7\n"
            "balance: true\n"
            "output_dir: out\n"
        )
        for stage in ("ingest", "generate", "group", "export"):
            result = runner.invoke(cli_main, [stage, "-c", str(config)], catch_exceptions=False)
            assert result.exit_code == 0
        outputs.append((run_dir / "out" / "dataset.jsonl").read_bytes())
    assert outputs[0] == outputs[1]
    report(f"determinism (dataset files byte-identical, {len(outputs[0])} bytes)")


def test_dataset_invariants_recheck(scaled_run):
    """validate_dataset re-checks label presence, id stability, split purity,
    and A_Group bounds over the export."""
    t = load_config(scaled_run["config"]).thresholds
    records = read_records(scaled_run["out"] / "dataset.jsonl")
    problems = validate_dataset(records, t)
    assert problems == []
    report(f"dataset invariants ({len(records)} records, 0 problems)")
