#!/usr/bin/env python3
"""Timing comparison of the JIT-compiled and pure numpy/Python kernel paths.

Runs the hot paths (dense relative-variance scans and the multi-start
searches) under the current backend, then re-executes itself in a subprocess
with CONTRACTIVE_DISABLE_JIT=1 and prints both timings side by side.

Usage:  python benchmarks/bench_backends.py [--inner]
"""
import json
import os
import subprocess
import sys
import time

import numpy as np


def _bench() -> dict:
    from contractive import kernels
    from contractive.optimize import OptimizerConfig, optimize_cat2, optimize_cat3

    results = {"jit": kernels.JIT_ENABLED}

    # warm-up triggers compilation so steady-state cost is measured
    kernels.scan_lambda_cat2(1.0, 2.0, 120.0, 0.5)
    etas = np.linspace(0.1, 3.0, 700)
    kappas = np.linspace(0.1, 6.0, 700)
    t0 = time.perf_counter()
    grid = kernels.scan_lambda_cat2(etas[:, None], kappas[None, :], 127.0, 0.49)
    results["scan_cat2_700x700_s"] = time.perf_counter() - t0
    results["scan_checksum"] = float(np.nanmin(grid))

    cfg = OptimizerConfig(n_starts=64, seed=0)
    optimize_cat2(OptimizerConfig(n_starts=2, seed=0))  # warm-up
    t0 = time.perf_counter()
    r2 = optimize_cat2(cfg)
    results["optimize_cat2_64starts_s"] = time.perf_counter() - t0
    results["cat2_lambda"] = r2.lambda_min

    optimize_cat3(OptimizerConfig(n_starts=2, seed=0))  # warm-up
    t0 = time.perf_counter()
    r3 = optimize_cat3(cfg)
    results["optimize_cat3_64starts_s"] = time.perf_counter() - t0
    results["cat3_lambda"] = r3.lambda_min
    return results


def main() -> int:
    if "--inner" in sys.argv:
        print(json.dumps(_bench()))
        return 0

    here = _bench()
    env = dict(os.environ, CONTRACTIVE_DISABLE_JIT="0" if not here["jit"] else "1")
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--inner"],
        env=env, capture_output=True, text=True,
    )
    if proc.returncode != 0:
        print(proc.stderr, file=sys.stderr)
        return proc.returncode
    other = json.loads(proc.stdout.strip().splitlines()[-1])
    fast, slow = (here, other) if here["jit"] else (other, here)

    print(f"{'benchmark':34s} {'numba':>12s} {'numpy/py':>12s} {'speedup':>9s}")
    for key in ("scan_cat2_700x700_s", "optimize_cat2_64starts_s", "optimize_cat3_64starts_s"):
        a, b = fast[key], slow[key]
        print(f"{key:34s} {a:10.4f} s {b:10.4f} s {b / a:8.1f}x")
    for key in ("scan_checksum", "cat2_lambda", "cat3_lambda"):
        agree = "ok" if abs(fast[key] - slow[key]) < 1e-9 else "MISMATCH"
        print(f"{key:34s} {fast[key]:.12f} vs {slow[key]:.12f}  {agree}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
