"""A/B timing of the hot loops: numba backend versus the numpy fallback.

Each backend is timed in a fresh interpreter (the backend flag is read at
import time), with one warm-up call so JIT compilation does not pollute
the numbers.  Usage:

    python3 benchmarks/bench_kernels.py
"""
import json
import os
import subprocess
import sys
import time

WORKLOADS = ("schur_norm 24x24", "heis3_convolution 18^3")


def _timings():
    import numpy as np

    from cbmult._accel import backend_name
    from cbmult.grid import GridFunction
    from cbmult.groups import heis3_convolution
    from cbmult.schur import schur_norm

    rng = np.random.default_rng(0)
    a = rng.normal(size=(24, 24)) + 1j * rng.normal(size=(24, 24))

    def window(shift):
        return GridFunction.centered(
            lambda x, y, z: np.exp(-((x - shift) ** 2 + y ** 2 + z ** 2)),
            3.5, 18, dim=3)

    f, g = window(0.2), window(-0.3)

    out = {"backend": backend_name()}
    # warm-up triggers compilation on the numba path
    schur_norm(a[:8, :8])
    out[WORKLOADS[0]] = min(_t(lambda: schur_norm(a)) for _ in range(2))

    heis3_convolution(window(0.0), window(0.0))
    out[WORKLOADS[1]] = min(_t(lambda: heis3_convolution(f, g))
                            for _ in range(3))
    return out


def _t(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def _child(disable):
    env = dict(os.environ)
    env["CBMULT_DISABLE_NUMBA"] = "1" if disable else ""
    proc = subprocess.run(
        [sys.executable, __file__, "--child"],
        capture_output=True, text=True, env=env, check=True)
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main():
    if "--child" in sys.argv:
        print(json.dumps(_timings()))
        return
    fast = _child(disable=False)
    slow = _child(disable=True)
    width = max(len(w) for w in WORKLOADS)
    print(f"{'workload':<{width}}  {fast['backend']:>10}  "
          f"{slow['backend']:>10}  speedup")
    for w in WORKLOADS:
        ratio = slow[w] / fast[w]
        print(f"{w:<{width}}  {fast[w] * 1e3:>8.1f}ms  "
              f"{slow[w] * 1e3:>8.1f}ms  {ratio:>6.1f}x")


if __name__ == "__main__":
    main()
