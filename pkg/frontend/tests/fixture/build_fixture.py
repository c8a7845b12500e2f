#!/usr/bin/env python3
"""Build a fixture review-service workspace for the UI integration tests.

Writes <workdir>/out/records.jsonl (several M_Group samples of all three
smells) plus <workdir>/fixture.yaml so `smellforge serve -c fixture.yaml`
can run against it.

Usage: python3 build_fixture.py <workdir>
"""

import sys
from pathlib import Path

from smellforge.common import Group, Origin, SmellKind
from smellforge.metrics import Likelihood, MetricVector, Verdict
from smellforge.store import SampleRecord, record_id, write_records


def lm_code(tag: str, body_lines: int = 28) -> str:
    lines = [f"    public int grind{tag}(int seed) {{", "        int acc = seed;"]
    for i in range(body_lines - 4):
        lines.append(f"        acc = acc + {i} * seed;")
    lines.append("        return acc;")
    lines.append("    }")
    return "\n".join(lines)


def lc_code(tag: str) -> str:
    return (
        f"public class Holder{tag} {{\n"
        "    private int first;\n"
        "    private int second;\n"
        "\n"
        "    public int firstValue() {\n"
        "        return first;\n"
        "    }\n"
        "\n"
        "    public int secondValue() {\n"
        "        return second;\n"
        "    }\n"
        "}"
    )


def fe_code(tag: str) -> str:
    return (
        f"    public int blend{tag}(int seed) {{\n"
        "        int a = other.getX();\n"
        "        int b = other.getY();\n"
        "        return seed + a + b;\n"
        "    }"
    )


def record(smell: SmellKind, code: str, entity: str, **extra_prov) -> SampleRecord:
    prov = {
        "project": "fixture",
        "file": f"{entity}.java",
        "span": [1, code.count("\n") + 1],
        "entity": entity,
        "role": "TRAIN",
        "rule_id": "fixture",
        **extra_prov,
    }
    metrics = MetricVector(loc=code.count("\n") + 1)
    if smell == SmellKind.FEATURE_ENVY:
        metrics.nfdi = 3
    if smell == SmellKind.LARGE_CLASS:
        metrics.nom, metrics.noa = 2, 2
    return SampleRecord(
        id=record_id("fixture", smell, Origin.ORIGINAL, prov),
        smell=smell,
        origin=Origin.ORIGINAL,
        group=Group.M_GROUP,
        label=None,
        code=code,
        context={},
        metrics=metrics,
        likelihood=Likelihood.MODERATE,
        advisor=Verdict.NEGATIVE if smell == SmellKind.LONG_METHOD else None,
        ground_truth=None,
        split="TRAIN",
        provenance=prov,
    )


def main() -> None:
    workdir = Path(sys.argv[1])
    out = workdir / "out"
    out.mkdir(parents=True, exist_ok=True)
    records = [
        record(SmellKind.LONG_METHOD, lm_code("A"), "fx.Mill.grindA"),
        record(SmellKind.LONG_METHOD, lm_code("B"), "fx.Mill.grindB"),
        record(SmellKind.LONG_METHOD, lm_code("C"), "fx.Mill.grindC"),
        record(SmellKind.LONG_METHOD, lm_code("D"), "fx.Mill.grindD"),
        record(SmellKind.LARGE_CLASS, lc_code("A"), "fx.HolderA"),
        record(SmellKind.LARGE_CLASS, lc_code("B"), "fx.HolderB"),
        record(
            SmellKind.FEATURE_ENVY,
            fe_code("A"),
            "fx.Desk.blendA",
            candidate_targets=["fx.Desk", "fx.Other"],
        ),
        record(
            SmellKind.FEATURE_ENVY,
            fe_code("B"),
            "fx.Desk.blendB",
            candidate_targets=["fx.Desk", "fx.Other"],
        ),
    ]
    write_records(records, out / "records.jsonl")
    (workdir / "fixture.yaml").write_text(
        "projects:\n"
        "  - id: fixture\n"
        "    roots: [.]\n"
        "output_dir: out\n"
    )
    print(f"fixture ready: {len(records)} M_Group records under {out}")


if __name__ == "__main__":
    main()
