import io
import json

import pytest

from groupnum.crosscheck import (
    _positive_battery,
    run_suite,
    verify_negative,
    verify_positive,
    write_report,
)


def test_verify_negative_examples():
    rec = verify_negative(12, "supersolvable")
    assert rec.status == "confirmed_negative"
    assert rec.witness_built.line() == "kind=redei_f1 p=3 q=2 u=1 cofactor=1"
    rec = verify_negative(6, "nilpotent")
    assert rec.status == "confirmed_negative"
    assert rec.witness_built.kind == "semidirect_elem_abelian"
    rec = verify_negative(4, "cyclic")
    assert rec.status == "confirmed_negative"
    assert rec.witness_built.kind == "cyclic_square"


def test_verify_negative_rejects_true_predicate():
    with pytest.raises(ValueError):
        verify_negative(15, "cyclic")


def test_verify_negative_cap():
    rec = verify_negative(4, "cyclic", cap=3)
    assert rec.status == "skipped_cap"
    assert rec.witness_built is None


def test_verify_positive_examples():
    assert verify_positive(15, "cyclic").status == "sampled_positive"
    assert verify_positive(45, "abelian").status == "sampled_positive"
    assert verify_positive(30, "ordered_sylow").status == "sampled_positive"


def test_verify_positive_rejects_false_predicate():
    with pytest.raises(ValueError):
        verify_positive(12, "cyclic")


def test_positive_battery_contents():
    names = [G.name for G in _positive_battery(15, 4)]
    assert names[0] == "C15"
    assert any("C3" in n and "C5" in n for n in names)
    # 30 is an ordered-Sylow number with buildable nontrivial semidirects
    battery = _positive_battery(30, 4)
    assert battery[0].name == "C30"
    assert any("E(" in G.name for G in battery)
    assert all(G.order == 30 for G in battery)


def test_run_suite_vacuous():
    result = run_suite(max_n=1)
    assert result.counts == {"sampled_positive": 5}


def test_run_suite_default_range_is_clean():
    # the full default suite: zero tolerated failures up to order 300
    result = run_suite(max_n=300)
    assert set(result.counts) == {"confirmed_negative", "sampled_positive"}
    assert result.counts["confirmed_negative"] > 600
    by_key = {(r.n, r.property): r for r in result.records}
    for n, kind in ((294, "case_f2"), (200, "case_f4"), (36, "redei_f1"), (12, "redei_f1")):
        rec = by_key[(n, "supersolvable")]
        assert rec.status == "confirmed_negative"
        assert rec.witness_built.kind == kind


def test_run_suite_to_80():
    result = run_suite(max_n=80)
    assert result.counts["confirmed_negative"] > 0
    assert "skipped_cap" not in result.counts
    # each record is one of the allowed statuses
    for rec in result.records:
        assert rec.status in ("confirmed_negative", "sampled_positive")
        if rec.status == "confirmed_negative":
            assert rec.witness_built is not None and rec.group_verdict is False
        else:
            assert rec.predicate_verdict is True


def test_run_suite_cap_records_skips():
    result = run_suite(max_n=40, witness_cap=20)
    skipped = [r for r in result.records if r.status == "skipped_cap"]
    assert skipped and all(r.n > 20 for r in skipped)


def test_run_suite_property_subset():
    result = run_suite(max_n=30, properties=("supersolvable",))
    assert all(r.property == "supersolvable" for r in result.records)
    with pytest.raises(ValueError):
        run_suite(max_n=10, properties=("solvable",))


def test_report_format():
    result = run_suite(max_n=24)
    buf = io.StringIO()
    write_report(result.records, buf)
    lines = buf.getvalue().strip().split("\n")
    assert len(lines) == len(result.records)
    for line in lines:
        rec = json.loads(line)
        assert set(rec) == {"n", "property", "status", "recipe"}


def test_witness_with_property_is_a_hard_error(monkeypatch):
    # a witness that unexpectedly has the property falsifies either the
    # predicate or the constructor, and must abort loudly
    import groupnum.crosscheck as cc

    monkeypatch.setitem(cc.GROUP_TESTS, "cyclic", lambda G: True)
    with pytest.raises(AssertionError):
        verify_negative(4, "cyclic")


def test_on_witness_callback_sees_all_diagnosed_witnesses():
    seen = []
    verify_negative(36, "supersolvable", on_witness=lambda *args: seen.append(args))
    kinds = [recipe.kind for (_, _, recipe, _) in seen]
    # 36 violates both the psi condition (f1) and condition 2b (f3)
    assert kinds == ["redei_f1", "case_f3"]
    orders = [w.order for (_, _, _, w) in seen]
    assert orders == [36, 36]
