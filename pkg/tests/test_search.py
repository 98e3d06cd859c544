"""Sweeps: determinism, reports, ledger, selectors, worker resolution."""
import json

import pytest

from baxter import (
    DiscrepancyLedger,
    SELECTOR_NAMES,
    SweepSpec,
    Tensor2,
    enumerate_tensors,
    is_cybe_solution,
    is_strongly_symmetric,
    make_dim2,
    make_family_ab,
    make_family_bd,
    make_matrix_algebra,
    resolve_workers,
    selector_predicate,
    strong_symmetric_enumerate,
    sweep,
    tensor_count,
)
from baxter.errors import InputError, SweepTooLarge


def test_tensor_count(f2, f4, f8):
    assert tensor_count(f2, 3) == 512
    assert tensor_count(f4, 3) == 4 ** 9
    assert tensor_count(f8, 2) == 8 ** 4


def test_enumerate_tensors_order_and_count(f2):
    seen = [r.encode() for r in enumerate_tensors(f2, 2)]
    assert seen == list(range(16))


def test_enumerate_tensors_guards_size(f8):
    with pytest.raises(SweepTooLarge):
        list(enumerate_tensors(f8, 5))


def test_strong_enumerate_equals_filter(f2, f4):
    for f, dim in ((f2, 2), (f2, 3), (f4, 2)):
        direct = sorted(
            r.encode() for r in enumerate_tensors(f, dim)
            if is_strongly_symmetric(r)
        )
        fast = [r.encode() for r in strong_symmetric_enumerate(f, dim)]
        assert fast == direct


def test_selector_names_frozen():
    assert SELECTOR_NAMES == (
        "cybe",
        "qybe",
        "strongly-symmetric",
        "alpha-beta-symmetric",
        "prop16-case",
        "coboundary",
        "triangular",
        "symmetric",
        "im-one-minus-tau",
    )


def test_selector_rejects_unknown(f2):
    L = make_dim2(f2, "abelian")
    with pytest.raises(InputError) as exc:
        selector_predicate(L, "does-not-exist")
    assert "cybe" in str(exc.value)


def test_selector_kind_checks(f2):
    L = make_dim2(f2, "abelian")
    A = make_matrix_algebra(f2, 2)
    with pytest.raises(InputError):
        selector_predicate(L, "qybe")  # qybe needs an associative algebra
    with pytest.raises(InputError):
        selector_predicate(A, "cybe")  # cybe needs a Lie algebra
    with pytest.raises(InputError):
        selector_predicate(L, "alpha-beta-symmetric")  # needs ab params


def test_resolve_workers(monkeypatch):
    monkeypatch.delenv("YBE_WORKERS", raising=False)
    assert resolve_workers(None) == 1
    assert resolve_workers(4) == 4
    monkeypatch.setenv("YBE_WORKERS", "6")
    assert resolve_workers(None) == 6
    assert resolve_workers(2) == 2  # explicit beats environment
    monkeypatch.setenv("YBE_WORKERS", "zero")
    with pytest.raises(InputError):
        resolve_workers(None)
    with pytest.raises(InputError):
        resolve_workers(0)


def test_sweep_report_contract_keys(f2):
    L = make_family_ab(f2, f2.zero(), f2.zero())
    rep = sweep(SweepSpec(algebra=L, predicate="cybe",
                          classifier="alpha-beta-symmetric"))
    d = rep.to_dict()
    for key in (
        "claim", "field", "algebra", "params", "total", "predicate_count",
        "classifier_count", "diff_pred_only", "diff_class_only",
        "counterexamples", "duration_ms",
    ):
        assert key in d
    assert d["total"] == 512
    assert d["predicate_count"] == 56
    assert d["classifier_count"] == 32
    assert d["diff_pred_only"] == 24
    assert d["diff_class_only"] == 0
    assert len(d["counterexamples"]) == 16  # capped
    ce = d["counterexamples"][0]
    assert set(ce) == {"encoding", "tensor", "predicate", "classifier"}
    # counterexamples are ascending by encoding
    encs = [c["encoding"] for c in d["counterexamples"]]
    assert encs == sorted(encs)


def test_sweep_canonical_json_drops_duration(f2):
    L = make_dim2(f2, "nonabelian")
    rep = sweep(SweepSpec(algebra=L, predicate="cybe"))
    canon = json.loads(rep.canonical_json())
    assert "duration_ms" not in canon
    assert "duration_ms" in rep.to_dict()


def test_sweep_deterministic_across_workers_and_chunks(f4):
    L = make_family_bd(f4, f4.zero(), f4.element(2))
    reports = [
        sweep(SweepSpec(algebra=L, predicate="cybe",
                        classifier="prop16-case",
                        workers=w, chunk=c))
        for w, c in ((1, 1 << 20), (1, 777), (8, 1 << 12), (3, 4099))
    ]
    canon = {r.canonical_json() for r in reports}
    assert len(canon) == 1
    assert reports[0].predicate_count == 1408


def test_sweep_keep_solutions(f2):
    L = make_dim2(f2, "nonabelian")
    rep = sweep(SweepSpec(algebra=L, predicate="cybe", keep_solutions=True))
    assert rep.solutions is not None
    assert len(rep.solutions) == rep.predicate_count == 8
    pred = selector_predicate(L, "cybe")
    for code in rep.solutions:
        assert pred(Tensor2.decode(f2, 2, code))


def test_sweep_guards_size(f8):
    with pytest.raises(SweepTooLarge):
        sweep(SweepSpec(algebra=_big_algebra(f8), predicate="qybe"))


def _big_algebra(f8):
    from baxter import make_matrix_algebra

    return make_matrix_algebra(f8, 3)  # 8^81 candidates


def test_sweep_agreement_flag(f2):
    L = make_family_bd(f2, f2.one(), f2.one())
    rep = sweep(SweepSpec(algebra=L, predicate="cybe",
                          classifier="prop16-case"))
    assert rep.agreement is True
    assert rep.pred_only_count == rep.class_only_count == 0
    rep2 = sweep(SweepSpec(algebra=make_family_ab(f2, f2.zero(), f2.zero()),
                           predicate="cybe",
                           classifier="alpha-beta-symmetric"))
    assert rep2.agreement is False


def test_ledger_records_and_caps(f2):
    L = make_family_ab(f2, f2.zero(), f2.zero())
    rep = sweep(SweepSpec(algebra=L, predicate="cybe",
                          classifier="alpha-beta-symmetric", claim="T"))
    ledger = DiscrepancyLedger()
    ledger.record_report(rep)
    assert not ledger.is_empty()
    assert len(ledger) == 16  # capped per claim/params
    rows = ledger.to_list()
    assert rows[0]["claim"] == "T"
    assert {"claim", "field", "params", "encoding", "tensor",
            "predicate", "classifier"} <= set(rows[0])
    lines = ledger.to_json_lines().splitlines()
    assert len(lines) == 16
    assert json.loads(lines[0])["encoding"] == rows[0]["encoding"]


def test_ledger_empty(f2):
    ledger = DiscrepancyLedger()
    assert ledger.is_empty()
    assert ledger.to_json_lines() == ""
    assert ledger.to_list() == []


def test_sweep_qybe_matrix_algebra(f2):
    A = make_matrix_algebra(f2, 2)
    rep = sweep(SweepSpec(algebra=A, predicate="qybe",
                          classifier="strongly-symmetric"))
    assert rep.total == 65536
    assert rep.classifier_count == 16
    assert rep.class_only_count == 0  # strong implies QYBE
    assert rep.predicate_count > 16


def test_sweep_symmetric_selector_counts(f2):
    L = make_dim2(f2, "nonabelian")
    rep = sweep(SweepSpec(algebra=L, predicate="symmetric"))
    assert rep.predicate_count == 8  # q^(n(n+1)/2)
    rep = sweep(SweepSpec(algebra=L, predicate="im-one-minus-tau"))
    assert rep.predicate_count == 2  # q^(n(n-1)/2)
