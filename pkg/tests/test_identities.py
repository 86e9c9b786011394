import csv
import io
import json
from fractions import Fraction

import pytest

from heunforms.exact import binomial
from heunforms.identities import (
    IDENTITIES,
    PARTICULAR_CASES,
    IdentityCase,
    IdentityReport,
    InadmissibleParameters,
    admissible_tuples,
    check_reductions,
    emit_report,
    normalize_identity_id,
    sweep,
    transport_2_4,
    transport_2_5,
    transport_5_2,
    transport_5_3,
    verify_identity,
)

F = Fraction


@pytest.mark.parametrize(
    "ident, params, value",
    [
        ("I2.7", {"n": 1}, F(4)),
        ("I2.6", {"n": 1}, F(1, 2)),
        ("I2.25", {"n": 1, "h": 1}, F(3, 4)),
        ("I2.18", {"n": 1}, F(1, 4)),
        ("I5.3", {"n": 1, "r": 1, "m": 1}, F(16)),
    ],
)
def test_catalog_examples(ident, params, value):
    case = verify_identity(ident, params)
    assert case.lhs == case.rhs == value
    assert case.passed


def test_i52_single_term_at_n0():
    for r in range(6):
        for m in range(r + 1):
            case = verify_identity("I5.2", {"n": 0, "r": r, "m": m})
            assert case.lhs == case.rhs == binomial(2 * r, r)


def test_small_sweeps():
    (r26,) = sweep(["2.26"], 1, threads=1)
    assert [(c.params["n"], c.lhs) for c in r26.cases] == [(0, 1), (1, 8)]
    (r19,) = sweep(["I2.19"], 1, threads=1)
    assert r19.cases[-1].lhs == r19.cases[-1].rhs == 16
    reports = sweep(None, 5, threads=1)
    assert [r.id for r in reports] == list(IDENTITIES)
    assert all(r.passed for r in reports)
    assert all(r.case_count > 0 for r in reports)
    for r in reports:
        assert r.case_count == len(list(admissible_tuples(r.id, 5)))


def test_ids_and_validation():
    assert normalize_identity_id("2.7") == "I2.7"
    assert normalize_identity_id("I5.2-rm") == "I5.2-rm"
    with pytest.raises(KeyError):
        normalize_identity_id("2.8")
    with pytest.raises(InadmissibleParameters):
        verify_identity("I2.4", {"n": 1, "m": 2, "i": 0})
    with pytest.raises(InadmissibleParameters):
        verify_identity("I2.4", (1, 0))
    with pytest.raises(InadmissibleParameters):
        verify_identity("I2.4", {"n": 1, "x": 0, "i": 0})


def test_reductions():
    results = check_reductions(12)
    assert results and all(ok for _, _, ok in results)


def test_particular_cases_match_parent():
    for case_id, to_parent in PARTICULAR_CASES.items():
        parent = IDENTITIES[case_id].parent
        for tup in admissible_tuples(case_id, 6):
            child = verify_identity(case_id, tup)
            par = verify_identity(parent, to_parent(*tup))
            assert child.lhs == par.lhs and child.rhs == par.rhs, (case_id, tup)


def test_transports():
    for n in range(5):
        for r in range(5):
            for m in range(r + 1):
                t24, f = transport_5_2(n, r, m)
                assert transport_2_4(*t24) == (n, r, m)
                assert verify_identity("I2.4", t24).lhs == f * verify_identity("I5.2", (n, r, m)).lhs
                t25, g = transport_5_3(n, r, m)
                assert transport_2_5(*t25) == (n, r, m)
                assert verify_identity("I2.5", t25).lhs == g * verify_identity("I5.3", (n, r, m)).lhs


def test_emit_json_and_csv():
    (rep,) = sweep(["2.7"], 2, threads=1)
    records = json.loads(emit_report([rep], "json"))
    assert records[0] == {"identity": "I2.7", "params": {"n": 0}, "lhs": "1/1", "rhs": "1/1", "pass": True}
    rows = list(csv.DictReader(io.StringIO(emit_report([rep], "csv").decode())))
    assert [r["pass"] for r in rows] == ["true"] * 3
    assert json.loads(rows[2]["params"]) == {"n": 2}
    assert rows[2]["lhs"] == rows[2]["rhs"] == "16/1"


def test_emit_empty():
    assert json.loads(emit_report([], "json")) == []
    assert emit_report([], "csv").decode().strip() == "identity,params,lhs,rhs,pass"
    with pytest.raises(ValueError):
        emit_report([], "xml")


def test_harness_flags_perturbed_rhs():
    good = verify_identity("I2.7", (3,))
    bad = IdentityCase(good.id, good.params, good.lhs, good.rhs + F(1, 7))
    report = IdentityReport("I2.7", {"max_n": 3}, [good, bad])
    assert not report.passed and report.failures == [bad]
    rec = json.loads(emit_report([report]))[1]
    assert rec["pass"] is False
    assert rec["lhs"] == "64/1" and rec["rhs"] == "449/7"


def test_sweep_is_deterministic_across_workers():
    ids = ["2.4", "2.16", "5.2", "2.26"]
    a = emit_report(sweep(ids, 6, threads=1), "json")
    b = emit_report(sweep(ids, 6, threads=3), "json")
    c = emit_report(sweep(list(reversed(ids)), 6, threads=2), "csv")
    assert a == b
    assert c == emit_report(sweep(ids, 6, threads=1), "csv")
