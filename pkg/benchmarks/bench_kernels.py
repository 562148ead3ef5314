#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

The hot kernels (edge-colouring search, oddness branch-and-bound) are
compiled with numba by default; setting SNARKLAB_NUMBA=0 runs the same
code uncompiled.  This script times both modes on representative inputs
by re-executing itself with the environment flag flipped.

Run from the repository root:  python3 benchmarks/bench_kernels.py
"""

import json
import os
import subprocess
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))


def run_cases():
    from snarklab._kernels import USE_NUMBA
    from snarklab.colouring import is_colourable, resistance
    from snarklab.constructions import build_H, build_R, flower_snark, petersen, snark44
    from snarklab.factors import oddness

    cases = [
        ("colour petersen", lambda: is_colourable(petersen())),
        ("colour flower J7", lambda: is_colourable(flower_snark(7))),
        ("colour 44-snark", lambda: is_colourable(snark44())),
        ("rho petersen", lambda: resistance(petersen())[0]),
        ("omega petersen", lambda: oddness(petersen()).omega),
        ("omega H1 (28)", lambda: oddness(build_H(1)).omega),
        ("omega R2 (40)", lambda: oddness(build_R(2, verify=False)).omega),
    ]
    out = {"numba": USE_NUMBA, "times": {}}
    for name, fn in cases:
        fn()  # warm-up (includes JIT compilation in numba mode)
        t0 = time.perf_counter()
        fn()
        out["times"][name] = time.perf_counter() - t0
    return out


def main():
    if os.environ.get("SNARKLAB_BENCH_CHILD"):
        print(json.dumps(run_cases()))
        return
    results = []
    for numba_flag in ("1", "0"):
        env = dict(os.environ, SNARKLAB_NUMBA=numba_flag, SNARKLAB_BENCH_CHILD="1")
        proc = subprocess.run(
            [sys.executable, __file__], env=env, capture_output=True, text=True
        )
        if proc.returncode != 0:
            sys.stderr.write(proc.stderr)
            raise SystemExit(1)
        results.append(json.loads(proc.stdout.strip().splitlines()[-1]))
    compiled, fallback = results
    assert compiled["numba"] and not fallback["numba"], "env flag did not take effect"
    print(f"{'case':24} {'numba':>10} {'fallback':>10} {'speedup':>8}")
    for name in compiled["times"]:
        a = compiled["times"][name]
        b = fallback["times"][name]
        print(f"{name:24} {a:9.4f}s {b:9.4f}s {b / a:7.1f}x")


if __name__ == "__main__":
    main()
