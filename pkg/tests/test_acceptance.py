"""One test per acceptance criterion; all rational comparisons are exact.

The terminal summary prints a pass/fail line for each criterion.
"""

from collections import Counter
from fractions import Fraction

from commprob import catalog
from commprob.commdeg import THRESHOLD, pr_formula_main, pr_formula_rusin
from commprob.group import abelian, cp_semidirect, cyclic, direct_product, extraspecial
from commprob.verify import (
    FAIL,
    PASS,
    REMARK_TYPES,
    analyze,
    table_groups,
    verify_char_table,
)

TABLE_WITNESSES = [r for r, s in catalog.WITNESSES.items() if not s.is_remark]


def _rows(report, check_id):
    return [c for c in report.checks if c.check_id == check_id]


def _summary(report, check_id):
    (row,) = _rows(report, f"summary:{check_id}")
    return row


def test_criterion_1_table_reproduction(table_report):
    assert len(TABLE_WITNESSES) == 12
    witness_rows = _rows(table_report, "witness")
    by_group = {c.group_id: c for c in witness_rows}
    for row_id in TABLE_WITNESSES:
        c = by_group[f"witness:{row_id}"]
        assert c.status == PASS, (row_id, c.expected, c.computed)
    assert all(c.status == PASS for c in _rows(table_report, "witness-row"))

    a = analyze(catalog.witness("11/75"))
    assert (a.pr, a.derived, a.derived_center, a.central_quotient) == (
        Fraction(11, 75), "A[5,5]", "A[]", "N:SDC(5^2,3)")
    a = analyze(catalog.witness("121/729"))
    assert (a.pr, a.derived, a.derived_center, a.central_quotient) == (
        Fraction(121, 729), "A[3,3]", "A[3,3]", "A[3,3,3,3]")


def test_criterion_2_threshold_exactness(table_report):
    for row_id in TABLE_WITNESSES:
        assert analyze(catalog.witness(row_id)).pr >= THRESHOLD, row_id
    assert all(c.status == PASS for c in _rows(table_report, "threshold"))
    assert len(_rows(table_report, "threshold")) == 12
    assert pr_formula_rusin(19, 9) == Fraction(11, 171) < THRESHOLD
    assert pr_formula_main(5, None, True) == Fraction(49, 625) < THRESHOLD
    assert [c.status for c in _rows(table_report, "threshold-excluded")] == [PASS, PASS]


def test_criterion_3_formula_oracle_agreement(property_report):
    for check in ("class2-formula", "rusin-formula", "indexp-recursion", "main-formula"):
        rows = _rows(property_report, check)
        assert len(rows) >= 3, check
        assert all(c.status == PASS for c in rows), check
        assert _summary(property_report, check).status == PASS


def test_criterion_4_central_quotient_types(table_report):
    rows = _rows(table_report, "semidirect-remark")
    assert rows and all(c.status == PASS for c in rows)
    seen = {c.expected.split(":", 1)[0] for c in rows}
    assert seen == {f"|G/Z|={n}" for n in REMARK_TYPES}
    for c in rows:
        n = int(c.expected.split("=")[1].split(":")[0])
        assert c.computed == REMARK_TYPES[n]


def test_criterion_5_corrections(remarks_report):
    rows = remarks_report.checks
    assert [c.check_id for c in rows] == ["remark-missed-5/14", "remark-t-equals-1",
                                         "remark-25/64", "remark-T-not-central-quotient"]
    assert all(c.status == PASS for c in rows)
    assert rows[0].computed.startswith("5/14 |")
    assert rows[1].computed.endswith("index 4")
    assert remarks_report.exit_code == 0


def test_criterion_6_property_suites(property_report):
    corpus = len(catalog.family_recipes("corpus", 100))
    assert corpus >= 300
    # unconditional identities run on every corpus group
    for check in ("class-equation", "class-size-range", "commutator-identities",
                  "centralizer-inclusions", "star-laws"):
        rows = _rows(property_report, check)
        assert not [c for c in rows if c.status == FAIL], check
        assert len(rows) >= corpus, check
        assert _summary(property_report, check).status == PASS
    # the strict lower bound only concerns groups with G' not central
    rows = _rows(property_report, "class-size-off-centralizer")
    assert len(rows) >= 100 and all(c.status == PASS for c in rows)
    for check in ("nilpotent-class-3", "c21-classes", "c25-classes"):
        summary = _summary(property_report, check)
        assert summary.status == PASS, (check, summary.computed)
    counts = Counter(c.status for c in property_report.checks)
    assert counts[FAIL] == 0 and counts["vacuous"] == 0
    assert property_report.exit_code == 0


def test_criterion_7_ingested_groups_must_match(tmp_path, monkeypatch):
    extra = {
        "es3xc5": direct_product(extraspecial(3), cyclic(5)),
        "c3xsdc": direct_product(cyclic(3), cp_semidirect(7, 3, 2)),
        "es5xc3": direct_product(extraspecial(5), cyclic(3)),
        "c9": abelian([9]),
        "sdc13": cp_semidirect(13, 3),
        "class2": catalog.auxiliary("class2-17/81"),
        "wreath": catalog.witness("17/81"),
    }
    for name, g in extra.items():
        catalog.export(g.renamed(f"ingested:{name}"), tmp_path / f"{name}.grp")
    ingested = catalog.ingest_dir(tmp_path, strict=True)
    assert len(ingested) == len(extra)

    report = verify_char_table(table_groups(30, ingested))
    complete = _rows(report, "completeness")
    ingested_ids = {g.name for g in ingested}
    mine = [c for c in complete if c.group_id in ingested_ids]
    assert len(mine) == len(extra) and all(c.status == PASS for c in mine)
    assert report.exit_code == 0

    # the same run fails once a needed table row is missing
    monkeypatch.setattr(catalog, "TABLE_ROWS",
                        tuple(r for r in catalog.TABLE_ROWS if r.row_id != "17/81b"))
    failing = verify_char_table(ingested)
    assert failing.exit_code == 1
    assert [c.status for c in _rows(failing, "completeness") if c.status == FAIL] == [FAIL]
