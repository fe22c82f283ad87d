"""Acceptance criteria, exact comparisons only.

Each test prints one ``PASS``/``FAIL`` line; the lines are also collected
into the pytest terminal summary.  Criteria 2 and 4 take a few minutes.
"""

import os
import time

import pytest

from qgalois import cmod, galois, identities, verify
from qgalois.cmod import CElement, CIndex, t

from conftest import ACCEPTANCE_LINES


def emit(num, title, ok, detail):
    line = f"criterion {num:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def triples(bound):
    return [(k, m, n) for k, m, n in cmod.basis_upto(bound)]


def test_c1_sphere4_presentation():
    rep = verify.run_suite("S6", 2)
    rels = [f for f in rep.failures if f.startswith("relation")]
    detail = f"{rep.cases_passed}/{rep.cases_run} (11 relations, 5 coinvariants, B-balance deg<=2)"
    assert emit(1, "S6 presentation, coinvariance, balance", rep.passed and not rels, detail), rep.serialize()
    assert len(verify.sigma4_relations()) == 11


def test_c2_chi_tau_identity():
    t0 = time.perf_counter()
    rep = verify.run_suite("S4", 4)
    elapsed = time.perf_counter() - t0
    ok = rep.passed and rep.cases_run == len(triples(4)) == 55 and elapsed <= 600
    detail = f"{rep.cases_passed}/{rep.cases_run} triples |k|+m+n<=4 in {elapsed:.1f}s"
    assert emit(2, "S4 chi(tau) = 1 ⊗ r", ok, detail), rep.serialize()


def test_c3_action_well_defined():
    rep = verify.run_suite("S2", 3)
    n_rel = len(verify.sphere_relations())
    ok = rep.passed and rep.cases_run == n_rel * len(triples(3))
    assert emit(3, "S2 ◁ kills every sphere relation", ok,
                f"{rep.cases_passed}/{rep.cases_run} ({n_rel} relations x {len(triples(3))} indices)"), rep.serialize()


def test_c4_identity_families():
    reports = [verify.run_suite("S3", 4), verify.run_suite("S5", 4)]
    expected = {}
    for fam in identities.FAMILIES:
        per_index = len(identities.FAMILIES[fam][0](0, 0, 0))
        expected[f"cases.{fam}"] = per_index * len(list(identities.indices(fam, 4)))
    got = {}
    for r in reports:
        got.update({k: v for k, v in r.extra.items() if k.startswith("cases.")})
    ok = all(r.passed for r in reports) and got == expected
    total = sum(r.cases_run for r in reports)
    passed = sum(r.cases_passed for r in reports)
    detail = f"{passed}/{total} identities over 7 families, bound 4"
    assert emit(4, "S3+S5 identities under chi", ok, detail), "\n".join(r.serialize() for r in reports)


def test_c5_coaction_axioms():
    rep = verify.run_suite("S7", 4)
    n_counit = sum(1 for _ in verify.s7.basis_upto(4))
    n_coass = sum(1 for _ in verify.s7.basis_upto(3))
    ok = rep.passed and rep.cases_run == n_counit + n_coass
    assert emit(5, "S7 counit (deg<=4) and coassociativity (deg<=3)", ok,
                f"{rep.cases_passed}/{rep.cases_run}"), rep.serialize()


def test_c6_confluence():
    rep = verify.run_suite("S1", 8, seed=0)
    ok = rep.passed and rep.cases_run == 2000
    assert emit(6, "S1 confluence, 1000 words per engine", ok, f"{rep.cases_passed}/{rep.cases_run}"), rep.serialize()


def test_c7_entwining_rank():
    rep = verify.run_suite("S8", 2)
    cols = rep.extra["columns"]
    ok = rep.passed and cols == 14 * 44 and rep.extra["rank"] == cols and rep.params["q0"] == "3/2"
    assert emit(7, "S8 psi full column rank at q0=3/2", ok, f"rank {rep.extra['rank']} of {cols}"), rep.serialize()


def test_c8_block_oracle():
    cases = 0
    bad = []
    for k in range(-3, 4):
        for m in range(3):
            for n in range(3):
                for g in (t(1, 1), t(1, 2), t(2, 1), t(2, 2)):
                    cases += 1
                    x = CIndex(k, m, n)
                    if cmod.act_gen(CElement.basis(x), g) != cmod.block_action_oracle(x, g):
                        bad.append((x, g))
    assert emit(8, "block action vs left-edge oracle", not bad, f"{cases - len(bad)}/{cases}"), bad[:3]


def test_c9_mutation_guard():
    results = verify.mutation_guard()
    caught = []
    for entry, (r2, r4) in results.items():
        hit = [r for r in (r2, r4) if not r.passed and r.counterexample is not None]
        if hit:
            caught.append(entry)
    ok = len(caught) == len(cmod.ACTION_ENTRIES) == 16
    missed = sorted(set(cmod.ACTION_ENTRIES) - set(caught))
    assert emit(9, "every single sign flip caught by S2 or S4", ok,
                f"{len(caught)}/{len(cmod.ACTION_ENTRIES)} caught"), missed


@pytest.mark.skipif(not os.environ.get("QGALOIS_STRETCH"), reason="set QGALOIS_STRETCH=1 for |k|+m+n <= 6")
def test_c2_stretch_degree_six():
    rep = verify.run_suite("S4", 6)
    assert emit(2, "S4 stretch |k|+m+n<=6", rep.passed, f"{rep.cases_passed}/{rep.cases_run}"), rep.serialize()
