"""Thin wrapper over the built-in property suite on a reduced size cap.

The full-size run is part of the acceptance suite; here we check that the
suite machinery works and the laws hold on the smaller orders quickly.
"""

from snarklab import verify


def test_property_suite_small():
    results = verify.properties(seed=0, size_cap=10)
    assert [r.name for r in results] == [
        "measures-rho-omega",
        "parity-on-small-cuts",
        "five-circuit-selection",
        "edge-selection",
        "snark-bounds",
    ]
    bad = [f"{r.name}: {r.detail}" for r in results if not r.ok]
    assert not bad, "; ".join(bad)


def test_property_suite_deterministic():
    a = verify.properties(seed=7, size_cap=8)
    b = verify.properties(seed=7, size_cap=8)
    assert [(r.name, r.ok, r.detail) for r in a] == [
        (r.name, r.ok, r.detail) for r in b
    ]
