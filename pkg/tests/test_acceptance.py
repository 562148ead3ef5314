"""Acceptance gate: ten criteria, one pass/fail line each.

Run with ``pytest -v -s tests/test_acceptance.py`` to see the lines as they
are produced.  Criteria 4 (extended members) and 7 (the large superposition
snark) carry the ``slow`` mark; deselect them with ``-m "not slow"``.
"""

import time

import pytest

from snarklab import verify as V


def _check(criterion, fn, budget):
    t0 = time.perf_counter()
    try:
        detail = fn() or ""
        ok = True
    except AssertionError as exc:
        detail = str(exc)
        ok = False
    dt = time.perf_counter() - t0
    print(f"[{'PASS' if ok else 'FAIL'}] {criterion} ({dt:.1f}s): {detail}")
    assert ok, f"{criterion}: {detail}"
    assert dt < budget, f"{criterion}: took {dt:.1f}s, budget {budget}s"


def _suite(criterion, results, budget):
    total = sum(r.seconds for r in results)
    bad = [f"{r.name}: {r.detail}" for r in results if not r.ok]
    status = "FAIL" if bad else "PASS"
    detail = "; ".join(bad) if bad else ", ".join(r.name for r in results)
    print(f"[{status}] {criterion} ({total:.1f}s): {detail}")
    assert not bad, f"{criterion}: {detail}"
    assert total < budget, f"{criterion}: took {total:.1f}s, budget {budget}s"


def test_criterion_01_baseline_graph():
    _check("criterion-01 baseline graph", V.claim_petersen_baseline, 1)


def test_criterion_02_network_library():
    _check("criterion-02 network library", V.claim_p_networks, 5)


def test_criterion_03_order28_search():
    _check("criterion-03 order-28 search", V.claim_order28_search, 300)


def test_criterion_04_extension_family():
    _check(
        "criterion-04 extension family",
        lambda: V.claim_R_family(slow=False),
        300,
    )


@pytest.mark.slow
def test_criterion_04_extension_family_extended():
    _check(
        "criterion-04 extension family (extended)",
        lambda: V.claim_R_family(slow=True),
        1800,
    )


def test_criterion_05_ring_family():
    _check("criterion-05 ring family", V.claim_ring_family, 600)


def test_criterion_06_chain_family():
    _check("criterion-06 chain family", V.claim_Z_family, 300)


@pytest.mark.slow
def test_criterion_07_superposition_family():
    _check("criterion-07 superposition family", V.claim_M_family, 1800)


def test_criterion_08_property_suite():
    _suite(
        "criterion-08 property suite",
        V.properties(seed=0, size_cap=12),
        900,
    )


def test_criterion_09_oracle_agreement():
    _suite(
        "criterion-09 oracle agreement",
        V.oracles(size_cap=16),
        900,
    )


def test_criterion_10_reductions():
    _check("criterion-10 reductions", V.claim_reductions, 300)
