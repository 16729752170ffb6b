"""Plain-numpy implementations of the hot loops (fallback backend)."""
import numpy as np

from .grid import trilinear


def pocs_loop(m, a, t, max_iter, res_tol, stall_window, stall_floor):
    """Alternating projections between the PSD cone and the pinned
    affine/box set.  Returns (code, m, res, ubest): code 1 feasible, 0
    stalled with residual above the floor, 2 iteration cap reached.

    ubest is a certified upper bound on the true threshold, harvested
    for free: from the second iteration on the hermitized iterate has
    exact blocks and diagonal <= t, so shifting by |lambda_min| makes it
    a valid completion at t + |lambda_min|."""
    n = a.shape[0]
    scale = max(np.abs(a).max(), 1e-30)
    best = np.inf
    since = 0
    res = np.inf
    code = 2
    ubest = np.inf
    for it in range(max_iter):
        h = 0.5 * (m + m.conj().T)
        w, vec = np.linalg.eigh(h)
        if it > 0:
            ubest = min(ubest, t - min(w[0], 0.0))
        w = np.maximum(w, 0.0)
        p = (vec * w) @ vec.conj().T
        p = 0.5 * (p + p.conj().T)
        m = p.copy()
        m[n:, :n] = a
        m[:n, n:] = a.conj().T
        diag = np.real(np.diag(m))
        np.fill_diagonal(m, np.minimum(diag, t))
        res = float(np.linalg.norm(m - p)) / scale
        if res < res_tol:
            code = 1
            break
        if res < best * (1.0 - 1e-3):
            best = res
            since = 0
        else:
            since += 1
            if since > stall_window and res > stall_floor:
                code = 0
                break
    return code, m, res, ubest


def heis3_conv_loop(fv, gv, fo0, fo1, fo2, fh0, fh1, fh2,
                    go0, go1, go2, gh0, gh1, gh2):
    """(f * g~)(n) = sum_m f(m) conj(g(n^-1 m)); cell volume applied by
    the caller.  Vectorized over the m-grid for each output cell."""
    n0, n1, n2 = fv.shape
    mx = fo0 + fh0 * np.arange(n0)
    my = fo1 + fh1 * np.arange(n1)
    mz = fo2 + fh2 * np.arange(n2)
    big_x, big_y, big_z = np.meshgrid(mx, my, mz, indexing="ij")
    gorigin = (go0, go1, go2)
    gspacing = (gh0, gh1, gh2)
    out = np.zeros((n0, n1, n2), dtype=np.complex128)
    for i in range(n0):
        nx = mx[i]
        ax = big_x - nx
        for j in range(n1):
            ny = my[j]
            ay = big_y - ny
            # z-slot of n^-1 m, up to the -nz shift applied per k
            z0 = big_z + 0.5 * (big_x * ny - nx * big_y)
            for k in range(n2):
                gvals = trilinear(gv, gorigin, gspacing, ax, ay, z0 - mz[k])
                out[i, j, k] = np.sum(fv * np.conj(gvals))
    return out
