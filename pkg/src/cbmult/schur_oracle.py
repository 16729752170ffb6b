"""Brute-force bracketing oracle for the Schur multiplier norm.

Kept deliberately independent of the production engine: the upper bound
searches completions [[b, a^T], [a, c]] directly (coordinate ternary
search on the minimum eigenvalue, then exact diagonal shrinks through
the inverse), the lower bound runs projected gradient ascent of
sigma_max(a o b) over the operator-norm ball.  Real matrices only; for
real a the optimal completion can be taken real, since the real part of
any complex completion is again feasible.

The bracket for [[1, 1], [0, 1]] was recorded from this module before
the engine existed: [1.1547005, 1.1547006], matching 2/sqrt(3).
"""
import numpy as np

from .errors import DomainError


def _lam_min(m):
    return np.linalg.eigvalsh(m)[0]


def ascent_lower(a, iters=400, restarts=6, seed=0):
    """max sigma_max(a o b) over contractions found by projected ascent."""
    a = np.asarray(a, dtype=float)
    rng = np.random.default_rng(seed)
    n, m = a.shape
    best = 0.0
    for _ in range(restarts):
        u, _, vt = np.linalg.svd(rng.standard_normal((n, m)))
        b = u[:, :min(n, m)] @ vt[:min(n, m)]
        step = 0.5
        for _ in range(iters):
            c = a * b
            U, S, Vt = np.linalg.svd(c)
            g = a * np.outer(U[:, 0], Vt[0])
            b2 = b + step * g
            U2, S2, Vt2 = np.linalg.svd(b2)
            b2 = (U2[:, :S2.size] * np.minimum(S2, 1.0)) @ Vt2
            if np.linalg.svd(a * b2, compute_uv=False)[0] >= S[0]:
                b = b2
            else:
                step *= 0.7
        best = max(best, float(np.linalg.svd(a * b, compute_uv=False)[0]))
    return best


def seesaw_upper(a, rounds=60):
    """min over found completions of the largest diagonal entry."""
    a = np.asarray(a, dtype=float)
    if a.shape[0] != a.shape[1]:
        raise DomainError("seesaw oracle needs a square matrix")
    n = a.shape[0]
    t0 = float(np.linalg.norm(a, 2))
    N = 2 * n
    M = np.block([[t0 * np.eye(n), a.T], [a, t0 * np.eye(n)]])
    free = [(i, j) for i in range(n) for j in range(i + 1, n)]
    free += [(n + i, n + j) for i in range(n) for j in range(i + 1, n)]

    for _ in range(rounds):
        for (i, j) in free:
            lo, hi = M[i, j] - 2 * t0, M[i, j] + 2 * t0
            for _ in range(40):
                m1 = lo + (hi - lo) / 3
                m2 = hi - (hi - lo) / 3
                M[i, j] = M[j, i] = m1
                f1 = _lam_min(M)
                M[i, j] = M[j, i] = m2
                f2 = _lam_min(M)
                if f1 < f2:
                    lo = m1
                else:
                    hi = m2
            M[i, j] = M[j, i] = 0.5 * (lo + hi)
        s = _lam_min(M)
        if s > 0:
            M -= s * np.eye(N)  # the whole diagonal carries lam_min
        for i in range(N):
            lam = _lam_min(M)
            Mreg = M + max(1e-12 - lam, 1e-12) * np.eye(N)
            dinv = np.linalg.inv(Mreg)[i, i]
            if dinv > 0:
                # PSD boundary for a single diagonal decrease is 1/(M^-1)_ii;
                # keep a sliver so later line searches stay interior
                M[i, i] -= 0.9 / dinv
        lam = _lam_min(M)
        if lam < -1e-10 * t0:
            M += (1e-10 * t0 - lam) * np.eye(N)
    return float(np.diag(M).max())


def oracle_bracket(a, seed=0):
    """Self-validating bracket [lower, upper] for the Schur norm of real a."""
    return ascent_lower(a, seed=seed), seesaw_upper(a)
