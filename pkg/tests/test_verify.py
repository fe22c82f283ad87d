import pytest

from qgalois import verify
from qgalois.cmod import ActionTable


def test_s4_counts():
    assert verify.run_suite("S4", 0).cases_run == 1
    rep = verify.run_suite("S4", 2)
    assert rep.passed and rep.cases_run == 14


def test_s2_degree_zero_includes_star_relation():
    rep = verify.run_suite("S2", 0)
    assert rep.passed
    assert rep.cases_run == len(verify.sphere_relations())


def test_s6_relations():
    rels = verify.sigma4_relations()
    assert len(rels) == 11
    assert all(x.is_zero() for _n, x in rels)


def test_reports_are_reproducible():
    for suite, deg in (("S1", 0), ("S2", 1), ("S6", 1), ("S8", 1)):
        a = verify.run_suite(suite, deg, seed=3).canonical()
        b = verify.run_suite(suite, deg, seed=3).canonical()
        assert a == b


def test_seed_changes_sample():
    a = verify.run_suite("S1", 0, seed=1, samples=20)
    b = verify.run_suite("S1", 0, seed=2, samples=20)
    assert a.passed and b.passed
    assert a.params["seed"] != b.params["seed"]


def test_mutation_produces_counterexample():
    rep = verify.run_suite("S2", 2, table=ActionTable(flips=["33"]))
    assert not rep.passed
    assert rep.counterexample is not None
    text = rep.serialize()
    assert "status: FAIL" in text
    assert "counterexample.case:" in text
    assert "mutation: 33" in text


def test_unknown_suite():
    with pytest.raises(verify.UnknownSuite):
        verify.run_suite("S9", 1)
    with pytest.raises(ValueError):
        verify.run_suite("S4", -1)


def test_exact_rank():
    assert verify.exact_rank([{0: 1, 1: 2}, {0: 2, 1: 4}]) == 1
    assert verify.exact_rank([{0: 1}, {1: 1}, {0: 1, 1: 1}]) == 2
    assert verify.exact_rank([]) == 0


def test_report_format():
    rep = verify.run_suite("S8", 1)
    h = rep.header()
    assert h["status"] == "PASS"
    assert h["q0"] == "3/2"
    assert int(h["rank"]) == int(h["columns"])
    assert rep.serialize().startswith("suite: S8\n")
