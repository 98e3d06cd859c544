"""Registered verification suites: pass/fail/ledger behavior per claim."""
import pytest

from baxter import CLAIM_IDS, claim_check, claim_default_fields, field
from baxter.errors import UnknownClaim


def test_registry_lists_all_claims():
    assert CLAIM_IDS == (
        "Lemma0.2",
        "Thm0.3-CYBE",
        "Thm0.3-QYBE",
        "Cor0.4",
        "Prop1.3",
        "Prop1.4",
        "Example1.5",
        "Prop1.6",
        "Lemma2.1.1",
        "Thm2.1",
        "Example2.2",
        "Thm2.3-I",
        "Thm2.3-II",
        "Thm2.4",
    )


def test_unknown_claim():
    with pytest.raises(UnknownClaim) as exc:
        claim_check("Prop9.9")
    assert "Prop9.9" in str(exc.value)


def test_default_fields():
    assert claim_default_fields("Thm0.3-QYBE") == ("gf(2)",)
    assert claim_default_fields("Prop1.4") == ("gf(2)", "gf(2^2;0b111)")


def test_lemma02_passes(f2):
    res = claim_check("Lemma0.2", fields=[f2])
    assert res.passed and res.exit_code == 0
    assert res.ledger.is_empty()


def test_thm03_cybe_passes(f2):
    res = claim_check("Thm0.3-CYBE", fields=[f2])
    assert res.passed and res.exit_code == 0


def test_thm03_qybe_passes():
    res = claim_check("Thm0.3-QYBE")
    assert res.passed and res.exit_code == 0
    assert "16" in " ".join(res.notes)


def test_cor04_strong_subset_of_solutions(f2):
    res = claim_check("Cor0.4", fields=[f2])
    assert res.passed and res.exit_code == 0
    for rep in res.reports:
        assert rep.class_only_count == 0


def test_prop13_abelian_defect_is_pinned(f2):
    res = claim_check("Prop1.3", fields=[f2])
    assert not res.passed
    assert res.exit_code == 3
    assert not res.ledger.is_empty()
    by_algebra = {rep.algebra: rep for rep in res.reports}
    assert by_algebra["dim2-abelian"].predicate_count == 16
    assert by_algebra["dim2-abelian"].classifier_count == 8
    assert by_algebra["dim2-nonabelian"].predicate_count == 8
    assert by_algebra["dim2-nonabelian"].pred_only_count == 0
    # ledger rows all come from the abelian algebra, predicate-only side
    for row in res.ledger.to_list():
        assert row["predicate"] is True and row["classifier"] is False


def test_prop14_degenerate_pairs_pinned(f2):
    res = claim_check("Prop1.4", fields=[f2])
    assert res.exit_code == 3
    counts = {
        rep.algebra: rep.predicate_count
        for rep in res.reports if rep.claim == "Prop1.4"
    }
    assert counts == {
        "ab(alpha=0x0,beta=0x0)": 56,
        "ab(alpha=0x0,beta=0x1)": 40,
        "ab(alpha=0x1,beta=0x0)": 40,
        "ab(alpha=0x1,beta=0x1)": 32,
    }
    for rep in res.reports:
        if rep.claim == "Prop1.4":
            assert rep.classifier_count == 32
        assert rep.class_only_count == 0  # classifier set always solves


def test_example15_inherits_00_defect(f2):
    res = claim_check("Example1.5", fields=[f2])
    assert res.exit_code == 3
    assert res.reports[0].predicate_count == 56
    assert res.reports[0].classifier_count == 32


def test_prop16_clean_both_fields():
    res = claim_check("Prop1.6")
    assert res.passed and res.exit_code == 0
    assert res.ledger.is_empty()
    cases = {rep.claim for rep in res.reports if rep.claim}
    assert {"Prop1.6-II", "Prop1.6-III", "Prop1.6-IV"} <= cases
    for rep in res.reports:
        if rep.classifier is not None:
            assert rep.pred_only_count == rep.class_only_count == 0


def test_lemma211_diagonal_reading(f2):
    res = claim_check("Lemma2.1.1")
    assert res.passed and res.exit_code == 0
    joined = " ".join(res.notes)
    assert "192/192" in joined
    assert "cube" in joined  # comparison-mode verdict is recorded


def test_thm21_passes(f2):
    res = claim_check("Thm2.1", fields=[f2])
    assert res.passed and res.exit_code == 0
    for rep in res.reports:
        assert rep.pred_only_count == rep.class_only_count == 0


def test_example22_middle_pinned(f2):
    res = claim_check("Example2.2")
    assert res.passed  # the two outer equivalences hold
    assert res.exit_code == 3  # but the middle one is pinned in the ledger
    by_claim = {rep.claim: rep for rep in res.reports}
    assert by_claim["Example2.2-i"].pred_only_count == 0
    assert by_claim["Example2.2-i"].class_only_count == 0
    assert by_claim["Example2.2-ii"].predicate_count == 4
    assert by_claim["Example2.2-ii"].classifier_count == 4
    mid = by_claim["Example2.2-middle"]
    assert mid.predicate_count == 4
    assert mid.classifier_count == 32
    assert mid.class_only_count == 28
    assert len(res.ledger) == 16  # capped snapshot of the 28


def test_thm23_both_parts_clean():
    for cid in ("Thm2.3-I", "Thm2.3-II"):
        res = claim_check(cid, fields=[field(2)])
        assert res.passed and res.exit_code == 0
        assert res.ledger.is_empty()


def test_thm24_passes():
    res = claim_check("Thm2.4")
    assert res.passed and res.exit_code == 0


def test_claim_result_to_dict_shape(f2):
    res = claim_check("Thm2.4", fields=[f2])
    d = res.to_dict()
    assert d["claim"] == "Thm2.4"
    assert d["passed"] is True
    assert d["exit_code"] == 0
    assert isinstance(d["reports"], list)
    assert isinstance(d["ledger"], list)
    assert isinstance(d["notes"], list)


def test_claims_accept_field_objects_and_literals(f4):
    res = claim_check("Thm2.4", fields=["gf(2^2;0b111)"])
    assert res.passed
    res2 = claim_check("Thm2.4", fields=[f4])
    assert res2.passed
