"""Numba implementations of the hot loops.

Same signatures and semantics as _hot_numpy; see _accel for selection.
Only imported when numba is available and not disabled.
"""
import numpy as np
from numba import njit, prange


@njit(cache=True)
def pocs_loop(m, a, t, max_iter, res_tol, stall_window, stall_floor):
    """Alternating projections between the PSD cone and the pinned
    affine/box set.  Returns (code, m, res, ubest): code 1 feasible, 0
    stalled with residual above the floor, 2 iteration cap reached.

    ubest is a certified upper bound on the true threshold, harvested
    for free: from the second iteration on the hermitized iterate has
    exact blocks and diagonal <= t, so shifting by |lambda_min| makes it
    a valid completion at t + |lambda_min|."""
    n = a.shape[0]
    scale = 1e-30
    for i in range(n):
        for j in range(n):
            v = abs(a[i, j])
            if v > scale:
                scale = v
    best = 1e300
    since = 0
    res = 1e300
    code = 2
    ubest = 1e300
    it = 0
    for _ in range(max_iter):
        h = np.ascontiguousarray(0.5 * (m + m.conj().T))
        w, vec = np.linalg.eigh(h)
        if it > 0:
            u = t
            if w[0] < 0.0:
                u = t - w[0]
            if u < ubest:
                ubest = u
        it += 1
        for k in range(2 * n):
            if w[k] < 0.0:
                w[k] = 0.0
        p = np.ascontiguousarray(vec * w) @ np.ascontiguousarray(vec.conj().T)
        p = 0.5 * (p + p.conj().T)
        m = p.copy()
        for i in range(n):
            for j in range(n):
                m[n + i, j] = a[i, j]
                m[i, n + j] = np.conj(a[j, i])
        for i in range(2 * n):
            d = m[i, i].real
            if d > t:
                d = t
            m[i, i] = complex(d, 0.0)
        s = 0.0
        for i in range(2 * n):
            for j in range(2 * n):
                dd = m[i, j] - p[i, j]
                s += dd.real * dd.real + dd.imag * dd.imag
        res = np.sqrt(s) / scale
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


@njit(cache=True, parallel=True)
def heis3_conv_loop(fv, gv, fo0, fo1, fo2, fh0, fh1, fh2,
                    go0, go1, go2, gh0, gh1, gh2):
    """(f * g~)(n) = sum_m f(m) conj(g(n^-1 m)); cell volume applied by
    the caller.  Output cells are independent, each with a serial inner
    sum, so the parallel schedule cannot change the result."""
    n0, n1, n2 = fv.shape
    g0, g1, g2 = gv.shape
    out = np.zeros((n0, n1, n2), dtype=np.complex128)
    for idx in prange(n0 * n1 * n2):
        i = idx // (n1 * n2)
        j = (idx // n2) % n1
        k = idx % n2
        nx = fo0 + fh0 * i
        ny = fo1 + fh1 * j
        nz = fo2 + fh2 * k
        acc = 0.0 + 0.0j
        for p in range(n0):
            mx = fo0 + fh0 * p
            u = (mx - nx - go0) / gh0
            ii = int(np.floor(u))
            if ii < 0 or ii >= g0 - 1:
                continue
            fu = u - ii
            for q in range(n1):
                my = fo1 + fh1 * q
                v = (my - ny - go1) / gh1
                jj = int(np.floor(v))
                if jj < 0 or jj >= g1 - 1:
                    continue
                fw1 = v - jj
                # z-slot of n^-1 m in polarized coordinates
                zoff = 0.5 * (mx * ny - nx * my) - nz - go2
                for r in range(n2):
                    f1 = fv[p, q, r]
                    if f1.real == 0.0 and f1.imag == 0.0:
                        continue
                    w = (fo2 + fh2 * r + zoff) / gh2
                    kk = int(np.floor(w))
                    if kk < 0 or kk >= g2 - 1:
                        continue
                    fw2 = w - kk
                    gval = ((1 - fu) * ((1 - fw1) * ((1 - fw2) * gv[ii, jj, kk]
                                                    + fw2 * gv[ii, jj, kk + 1])
                                        + fw1 * ((1 - fw2) * gv[ii, jj + 1, kk]
                                                 + fw2 * gv[ii, jj + 1, kk + 1]))
                            + fu * ((1 - fw1) * ((1 - fw2) * gv[ii + 1, jj, kk]
                                                + fw2 * gv[ii + 1, jj, kk + 1])
                                    + fw1 * ((1 - fw2) * gv[ii + 1, jj + 1, kk]
                                             + fw2 * gv[ii + 1, jj + 1, kk + 1])))
                    acc += f1 * np.conj(gval)
        out[i, j, k] = acc
    return out
