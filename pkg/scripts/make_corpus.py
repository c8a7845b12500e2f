#!/usr/bin/env python3
"""Regenerate the bundled demo corpora (corpus/webshop and corpus/analytics).

The corpus is deterministic (fixed seed) and committed to the repository; this
script exists so the corpus can be audited and regenerated. Class archetypes
are sized so that every grouping bucket is populated: small entities become
auto negatives, oversized services land in manual review, and the designed
caller/callee, inheritance, usage, and envy relations give the generators
material for auto positives in all three smell categories.

Usage: python scripts/make_corpus.py [repo_root]
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

FIELD_TYPES = ["int", "long", "double", "String", "boolean"]
DEFAULTS = {"int": "0", "long": "0L", "double": "0.0", "String": "\"\"", "boolean": "false"}

NOUNS = """total count amount balance rate limit quota index weight size
    volume price cost margin score rank level depth width height span
    offset budget bonus fee tax cap floor gain delta factor""".split()

VERBS = """compute refresh apply merge collect resolve adjust settle
    validate prepare archive publish survey rebuild audit""".split()


class Names:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.used: set[str] = set()

    def field(self) -> str:
        while True:
            base = self.rng.choice(NOUNS)
            if base not in self.used:
                self.used.add(base)
                return base
            cand = base + self.rng.choice(["Value", "Cache", "Mark", "Hint", "Limit"])
            if cand not in self.used:
                self.used.add(cand)
                return cand

    def method(self) -> str:
        while True:
            cand = self.rng.choice(VERBS) + self.rng.choice(NOUNS).capitalize()
            if cand not in self.used:
                self.used.add(cand)
                return cand


def cap(s: str) -> str:
    return s[0].upper() + s[1:]


def entity_class(pkg: str, name: str, rng: random.Random, n_fields: int) -> str:
    names = Names(rng)
    fields = [(rng.choice(FIELD_TYPES[:3]), names.field()) for _ in range(n_fields)]
    lines = [f"package {pkg};", "", f"public class {name} {{"]
    for t, f in fields:
        lines.append(f"    private {t} {f};")
    lines.append("")
    for t, f in fields:
        lines.append(f"    public {t} get{cap(f)}() {{")
        lines.append(f"        return {f};")
        lines.append("    }")
        lines.append("")
        if rng.random() < 0.5:
            lines.append(f"    public void set{cap(f)}({t} value) {{")
            lines.append(f"        this.{f} = value;")
            lines.append("    }")
            lines.append("")
    while lines[-1] == "":
        lines.pop()
    lines.append("}")
    return "\n".join(lines) + "\n"


def filler_statements(rng: random.Random, names: list[str], n: int, indent: str) -> list[str]:
    out = []
    for i in range(n):
        a, b = rng.choice(names), rng.choice(names)
        kind = rng.randrange(4)
        if kind == 0:
            out.append(f"{indent}{a} = {a} + {b} * {rng.randint(2, 9)};")
        elif kind == 1:
            out.append(f"{indent}if ({a} > {rng.randint(10, 99)}) {{")
            out.append(f"{indent}    {b} = {b} - {a} / {rng.randint(2, 5)};")
            out.append(f"{indent}}}")
        elif kind == 2:
            out.append(f"{indent}for (int pass{i} = 0; pass{i} < {rng.randint(2, 6)}; pass{i}++) {{")
            out.append(f"{indent}    {a} = {a} + pass{i};")
            out.append(f"{indent}}}")
        else:
            out.append(f"{indent}{b} = {a} % {rng.randint(3, 17)} + {b};")
    return out


def service_class(
    pkg: str,
    name: str,
    rng: random.Random,
    *,
    big_callee_lines: int,
    small_callee_lines: int,
    long_original_lines: int = 0,
) -> str:
    """A class with designed caller/callee pairs: one merge lands above the
    long-method high threshold, one in the moderate band."""
    state = [f"state{i}" for i in range(3)]
    lines = [f"package {pkg};", "", f"public class {name} {{"]
    for s in state:
        lines.append(f"    private int {s};")
    lines.append("")
    # caller: assigned-return call on the big callee, statement call on the small one
    lines.append("    public int orchestrate(int seed) {")
    lines.append("        int work = seed + state0;")
    lines.append("        int heavy = heavyLifting(work);")
    lines.append("        touchUp(heavy);")
    lines.append("        return heavy + state1;")
    lines.append("    }")
    lines.append("")
    lines.append("    public int heavyLifting(int input) {")
    lines.append("        int acc = input;")
    lines.append("        int aux = state2;")
    lines.extend(filler_statements(rng, ["acc", "aux", "input"], big_callee_lines, "        "))
    lines.append("        return acc + aux;")
    lines.append("    }")
    lines.append("")
    lines.append("    public void touchUp(int value) {")
    lines.append("        int scratch = value;")
    lines.extend(filler_statements(rng, ["scratch", "value"], small_callee_lines, "        "))
    lines.append("        state0 = scratch;")
    lines.append("    }")
    if long_original_lines:
        lines.append("")
        lines.append("    public int sprawl(int seed) {")
        lines.append("        int acc = seed;")
        lines.append("        int aux = 1;")
        lines.extend(filler_statements(rng, ["acc", "aux", "seed"], long_original_lines, "        "))
        lines.append("        return acc - aux;")
        lines.append("    }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def sized_member_class(
    pkg: str,
    name: str,
    rng: random.Random,
    *,
    n_fields: int,
    n_methods: int,
    body_lines: int,
    extends: str | None = None,
    field_of: tuple[str, str] | None = None,
    imports: list[str] | None = None,
    prefix: str = "",
) -> str:
    """A class with an exact member count; used to engineer merge sizes."""
    names = Names(rng)
    header = f"public class {name}" + (f" extends {extends}" if extends else "") + " {"
    lines = [f"package {pkg};", ""]
    for imp in imports or []:
        lines.append(f"import {imp};")
    if imports:
        lines.append("")
    lines.append(header)
    fields = [f"{prefix}{names.field()}" for _ in range(n_fields)]
    if field_of:
        ftype, fname = field_of
        lines.append(f"    private {ftype} {fname};")
    for f in fields:
        lines.append(f"    private int {f};")
    lines.append("")
    for i in range(n_methods):
        m = f"{prefix}{names.method()}"
        lines.append(f"    public int {m}(int input) {{")
        lines.append(f"        int acc = input + {fields[i % len(fields)] if fields else '1'};")
        lines.extend(filler_statements(rng, ["acc", "input"], body_lines, "        "))
        lines.append("        return acc;")
        lines.append("    }")
        lines.append("")
    while lines[-1] == "":
        lines.pop()
    lines.append("}")
    return "\n".join(lines) + "\n"


def envy_class(
    pkg: str,
    name: str,
    rng: random.Random,
    *,
    entity: str,
    entity_getters: list[str],
    own_uses: int,
    foreign_uses: int,
    imports: list[str] | None = None,
) -> str:
    """A holder whose method mixes own-state uses (these become foreign after
    a move) with reads of an owned entity (these become local)."""
    names = Names(rng)
    own = [names.field() for _ in range(max(3, own_uses))]
    ref = entity[0].lower() + entity[1:]
    lines = [f"package {pkg};", ""]
    for imp in imports or []:
        lines.append(f"import {imp};")
    if imports:
        lines.append("")
    lines.append(f"public class {name} {{")
    lines.append(f"    private {entity} {ref};")
    for f in own:
        lines.append(f"    private int {f};")
    lines.append("")
    lines.append("    public int blend(int seed) {")
    lines.append("        int acc = seed;")
    for i in range(own_uses):
        lines.append(f"        acc = acc + {own[i % len(own)]};")
    for i in range(foreign_uses):
        getter = entity_getters[i % len(entity_getters)]
        lines.append(f"        acc = acc + (int) {ref}.{getter}();")
    lines.append("        return acc;")
    lines.append("    }")
    lines.append("")
    lines.append("    public int quiet(int seed) {")
    lines.append(f"        return seed + {own[0]};")
    lines.append("    }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def giant_class(pkg: str, name: str, rng: random.Random) -> str:
    return sized_member_class(
        pkg, name, rng, n_fields=12, n_methods=12, body_lines=4
    )


def write(root: Path, rel: str, text: str) -> None:
    path = root / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def build_webshop(root: Path) -> None:
    rng = random.Random(2026)
    base = root / "webshop" / "src"

    # small entities: auto negatives in all three categories
    entities = [
        ("catalog", ["Sku", "Brand", "Shelf", "Variant", "Badge", "Photo", "Review", "Rating"]),
        ("orders", ["Invoice", "Receipt", "Coupon", "Refund", "Payment", "Basket", "Voucher"]),
        ("billing", ["Money", "TaxBand", "Surcharge", "Discount", "Tariff", "Period"]),
        ("shipping", ["Parcel", "Addr", "Depot", "Carrier", "Leg", "Customs"]),
        ("accounts", ["Profile", "Session", "Consent", "Device", "Prefs"]),
        ("reports", ["Figure", "Column", "Caption", "Export"]),
    ]
    for pkg, names in entities:
        for name in names:
            write(base, f"shop/{pkg}/{name}.java",
                  entity_class(f"shop.{pkg}", name, rng, rng.randint(2, 4)))

    # long-method material: merges above 30 lines and in the 15..30 band,
    # plus oversized originals for manual review
    flows = [
        ("orders", "OrderFlow", 24, 7, 34),
        ("orders", "RefundFlow", 27, 8, 0),
        ("billing", "LedgerFlow", 28, 9, 0),
        ("billing", "InvoiceFlow", 23, 6, 41),
        ("shipping", "DispatchFlow", 22, 6, 38),
        ("shipping", "ReturnsFlow", 25, 7, 0),
        ("accounts", "SignupFlow", 26, 8, 0),
        ("accounts", "RecoveryFlow", 24, 9, 36),
        ("catalog", "ImportFlow", 29, 7, 0),
        ("catalog", "IndexFlow", 21, 8, 33),
        ("reports", "DigestFlow", 27, 6, 0),
        ("reports", "ArchiveFlow", 23, 9, 39),
    ]
    for pkg, name, big, small, sprawl in flows:
        write(
            base,
            f"shop/{pkg}/{name}.java",
            service_class(
                f"shop.{pkg}", name, rng,
                big_callee_lines=big, small_callee_lines=small,
                long_original_lines=sprawl,
            ),
        )

    # large-class material: inheritance and usage pairs big enough that the
    # merge clears every max threshold, plus moderate-band pairs and two
    # oversized originals for manual review
    big_pairs = [
        ("catalog", "Listing", "AuctionListing", "base", "bid", True),
        ("reports", "Canvas", "PrintCanvas", "cv", "pr", True),
        ("billing", "Statement", "Account", "line", "acct", False),
        ("orders", "Batch", "Fulfillment", "bt", "ff", False),
    ]
    for pkg, a, b, pa, pb, inherit in big_pairs:
        write(base, f"shop/{pkg}/{a}.java",
              sized_member_class(f"shop.{pkg}", a, rng, n_fields=6, n_methods=6, body_lines=8, prefix=pa))
        if inherit:
            write(base, f"shop/{pkg}/{b}.java",
                  sized_member_class(f"shop.{pkg}", b, rng, n_fields=6, n_methods=6,
                                     body_lines=8, extends=a, prefix=pb))
        else:
            write(base, f"shop/{pkg}/{b}.java",
                  sized_member_class(f"shop.{pkg}", b, rng, n_fields=6, n_methods=6, body_lines=8,
                                     field_of=(a, a[0].lower() + a[1:]), prefix=pb))
    mid_pairs = [
        ("shipping", "Manifest", "Freight", "mani", "frt"),
        ("accounts", "Roster", "Team", "ros", "tm"),
    ]
    for pkg, a, b, pa, pb in mid_pairs:
        write(base, f"shop/{pkg}/{a}.java",
              sized_member_class(f"shop.{pkg}", a, rng, n_fields=2, n_methods=2, body_lines=4, prefix=pa))
        write(base, f"shop/{pkg}/{b}.java",
              sized_member_class(f"shop.{pkg}", b, rng, n_fields=2, n_methods=3, body_lines=5,
                                 field_of=(a, a[0].lower() + a[1:]), prefix=pb))
    write(base, "shop/accounts/Directory.java", giant_class("shop.accounts", "Directory", rng))
    write(base, "shop/reports/Warehouse.java", giant_class("shop.reports", "Warehouse", rng))

    # feature-envy material: strong envy (auto positive after the move),
    # moderate envy, and frequent-caller originals for manual review
    envies = [
        ("orders", "PricingDesk", "Invoice", ["getTotal", "getCount"], 8, 1),
        ("catalog", "CurationDesk", "Review", ["getScore", "getRank"], 9, 1),
        ("reports", "LayoutDesk", "Figure", ["getWidth", "getHeight"], 7, 2),
        ("shipping", "LabelDesk", "Parcel", ["getWeight", "getSize"], 3, 1),
        ("billing", "RoundingDesk", "Money", ["getAmount", "getScale"], 4, 1),
        ("accounts", "GreetingDesk", "Profile", ["getRank", "getLevel"], 1, 7),
        ("orders", "AuditDesk", "Receipt", ["getStamp", "getSerial"], 1, 6),
    ]
    for pkg, name, entity, getters, own, foreign in envies:
        write(base, f"shop/{pkg}/{name}.java",
              envy_class(f"shop.{pkg}", name, rng,
                         entity=entity, entity_getters=getters,
                         own_uses=own, foreign_uses=foreign))


def build_analytics(root: Path) -> None:
    rng = random.Random(9090)
    base = root / "analytics" / "src"
    for name, n in [
        ("Metric", 3), ("Gauge", 2), ("Series", 4), ("Window", 3),
        ("Bucket", 2), ("Sample", 3), ("Label", 2),
    ]:
        write(base, f"analytics/core/{name}.java", entity_class("analytics.core", name, rng, n))
    write(base, "analytics/core/RollupFlow.java",
          service_class("analytics.core", "RollupFlow", rng,
                        big_callee_lines=20, small_callee_lines=6, long_original_lines=33))
    write(base, "analytics/core/CompactFlow.java",
          service_class("analytics.core", "CompactFlow", rng,
                        big_callee_lines=25, small_callee_lines=8, long_original_lines=0))
    write(base, "analytics/core/Store.java",
          sized_member_class("analytics.core", "Store", rng, n_fields=6, n_methods=7, body_lines=7, prefix="st"))
    write(base, "analytics/core/ChartDesk.java",
          envy_class("analytics.core", "ChartDesk", rng,
                     entity="Series", entity_getters=["getSpan", "getDepth"],
                     own_uses=4, foreign_uses=2))


def fixup_entity_getters(root: Path) -> None:
    """The envy/holder classes name specific getters on their entities; make
    sure those getters exist by construction."""
    required = {
        "webshop/src/shop/orders/Invoice.java": [("long", "total"), ("int", "count")],
        "webshop/src/shop/orders/Receipt.java": [("long", "stamp"), ("int", "serial")],
        "webshop/src/shop/catalog/Review.java": [("int", "score"), ("int", "rank")],
        "webshop/src/shop/reports/Figure.java": [("int", "width"), ("int", "height")],
        "webshop/src/shop/billing/Money.java": [("long", "amount"), ("int", "scale")],
        "webshop/src/shop/shipping/Parcel.java": [("double", "weight"), ("int", "size")],
        "webshop/src/shop/accounts/Profile.java": [("int", "rank"), ("int", "level")],
        "analytics/src/analytics/core/Series.java": [("int", "span"), ("int", "depth")],
    }
    for rel, fields in required.items():
        path = root / rel
        text = path.read_text(encoding="utf-8")
        additions = []
        for t, f in fields:
            if f"get{cap(f)}" in text:
                continue
            additions.append(f"    private {t} {f}X;\n")
            additions.append(f"    public {t} get{cap(f)}() {{\n        return {f}X;\n    }}\n")
        if additions:
            closing = text.rstrip().rfind("}")
            text = text[:closing] + "\n" + "".join(additions) + "}\n"
            path.write_text(text, encoding="utf-8")


def main() -> None:
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent
    corpus = root / "corpus"
    build_webshop(corpus)
    build_analytics(corpus)
    fixup_entity_getters(corpus)
    total = 0
    for p in sorted(corpus.rglob("*.java")):
        total += p.read_text().count("\n")
    print(f"corpus written under {corpus} ({total} lines of Java)")


if __name__ == "__main__":
    main()
