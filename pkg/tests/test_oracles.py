"""Agreement between the production solvers and the independent slow oracles
frozen in this package (exhaustive cut enumeration, no-pruning oddness)."""

from snarklab import verify


def test_oracle_suite():
    results = verify.oracles(size_cap=16)
    assert [r.name for r in results] == [
        "zeta-vs-bruteforce",
        "oddness-vs-exhaustive",
    ]
    bad = [f"{r.name}: {r.detail}" for r in results if not r.ok]
    assert not bad, "; ".join(bad)
