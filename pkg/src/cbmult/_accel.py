"""Backend selection for the hot loops.

Two interchangeable implementations exist for each hot kernel: a numba
@njit version and a plain numpy one.  Set CBMULT_DISABLE_NUMBA=1 to force
the numpy path (useful on platforms where numba is unavailable or for
A/B timing; see benchmarks/bench_kernels.py).  The flag is read once at
import time.
"""
import os

DISABLE = os.environ.get("CBMULT_DISABLE_NUMBA", "").strip() in ("1", "true", "yes")

NUMBA_OK = False
if not DISABLE:
    try:
        import numba  # noqa: F401
        NUMBA_OK = True
    except Exception:
        NUMBA_OK = False


def backend_name():
    return "numba" if NUMBA_OK else "numpy"


if NUMBA_OK:
    from . import _hot_numba as hot
else:
    from . import _hot_numpy as hot
