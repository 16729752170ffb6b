"""Induction of finitely supported lattice functions to the ambient group.

A function phi on Z^d is extended to R^d by placing a tent (product of
one-dimensional triangle windows) at each lattice point.  The extension
agrees with phi on the lattice, is linear and positivity-preserving in phi,
and satisfies an exact averaging identity: integrating
phi(gamma(y + w) - gamma(x + w)) over the unit cell w in [0,1)^d, where
gamma(.) is the integer part, reproduces the extension evaluated at y - x.
Because the integer part is piecewise constant, that integral is a finite
sum over the cells of a breakpoint partition and can be evaluated exactly;
no quadrature error enters.

Functions phi are plain dicts mapping lattice points to values.  For d = 1
keys may be ints; for d >= 2 keys are coordinate tuples.  Values may be
real or complex.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .report import Report

_EXACT_TOL = 1e-9


def _as_phi(phi):
    """Normalize a user dict to tuple keys; returns (dict, dimension)."""
    if not isinstance(phi, dict) or not phi:
        raise DomainError("phi must be a non-empty dict of lattice values")
    out = {}
    dim = None
    for key, val in phi.items():
        if isinstance(key, (int, np.integer)):
            tkey = (int(key),)
        else:
            tkey = tuple(int(c) for c in key)
            if any(c != key[i] for i, c in enumerate(tkey)):
                raise DomainError("lattice points must have integer "
                                  "coordinates, got %r" % (key,))
        if dim is None:
            dim = len(tkey)
        elif len(tkey) != dim:
            raise DomainError("mixed key dimensions in phi")
        out[tkey] = complex(val)
    if dim not in (1, 2):
        raise DomainError("only dimensions 1 and 2 are supported")
    return out, dim


def _is_real(phi):
    return all(abs(v.imag) == 0.0 for v in phi.values())


def tent(t):
    """Triangle window max(0, 1 - |t|); the d = 1 interpolation kernel."""
    t = np.asarray(t, dtype=float)
    out = np.maximum(0.0, 1.0 - np.abs(t))
    return float(out) if out.ndim == 0 else out


def decompose(x, dim=None):
    """Split x in R^d into (cell part, integer part), componentwise exact.

    Returns (omega, gamma) with x = gamma + omega, gamma integer and
    omega in [0,1)^d.  Scalar input gives scalar output.
    """
    if np.isscalar(x) or isinstance(x, (float, int, np.floating, np.integer)):
        if dim not in (None, 1):
            raise DomainError("scalar input is one-dimensional")
        xf = float(x)
        if not math.isfinite(xf):
            raise DomainError("decompose needs finite input")
        g = math.floor(xf)
        return xf - g, g
    coords = tuple(float(c) for c in x)
    if dim is not None and len(coords) != dim:
        raise DomainError("expected dimension %d, got %d"
                          % (dim, len(coords)))
    if any(not math.isfinite(c) for c in coords):
        raise DomainError("decompose needs finite input")
    gamma = tuple(math.floor(c) for c in coords)
    omega = tuple(c - g for c, g in zip(coords, gamma))
    return omega, gamma


def induce(phi):
    """Tent extension of phi; returns a callable on R^d.

    The extension interpolates phi exactly at lattice points and is affine
    on each cell edge, so it is the piecewise-multilinear interpolant of
    phi.  For d = 1 the callable accepts arrays.
    """
    table, dim = _as_phi(phi)
    real = _is_real(table)
    if dim == 1:
        points = np.array([k[0] for k in table], dtype=float)
        values = np.array([table[k] for k in table])

        def extension(t):
            t = np.asarray(t, dtype=float)
            acc = np.zeros(t.shape, dtype=complex)
            for p, v in zip(points, values):
                acc += v * np.maximum(0.0, 1.0 - np.abs(t - p))
            out = acc.real if real else acc
            if out.ndim == 0:
                return float(out) if real else complex(out)
            return out

        return extension

    def extension2(t):
        t0, t1 = float(t[0]), float(t[1])
        acc = 0.0 + 0.0j
        for (n0, n1), v in table.items():
            w0 = 1.0 - abs(t0 - n0)
            if w0 <= 0.0:
                continue
            w1 = 1.0 - abs(t1 - n1)
            if w1 <= 0.0:
                continue
            acc += v * w0 * w1
        return acc.real if real else acc

    return extension2


def _axis_breaks(x_i, y_i):
    """Cell subdivision of [0,1] on which both integer parts are constant."""
    breaks = {0.0, 1.0}
    for c in (x_i, y_i):
        frac = c - math.floor(c)
        if 0.0 < frac < 1.0:
            breaks.add(1.0 - frac)
    return sorted(breaks)


def _cells(x, y, subdivisions):
    """Yield (midpoint, measure) cells of the breakpoint partition of the
    unit cell, optionally subdividing each piece further (the integrand is
    constant per piece, so subdivision changes nothing; it exists to let
    callers demonstrate that)."""
    per_axis = []
    for x_i, y_i in zip(x, y):
        edges = _axis_breaks(x_i, y_i)
        pieces = []
        for a, b in zip(edges[:-1], edges[1:]):
            step = (b - a) / subdivisions
            for j in range(subdivisions):
                lo = a + j * step
                pieces.append((lo + 0.5 * step, step))
        per_axis.append(pieces)
    if len(per_axis) == 1:
        for mid, wid in per_axis[0]:
            yield (mid,), wid
    else:
        for mid0, wid0 in per_axis[0]:
            for mid1, wid1 in per_axis[1]:
                yield (mid0, mid1), wid0 * wid1


def _as_point(v, dim):
    if np.isscalar(v) or isinstance(v, (float, int, np.floating, np.integer)):
        coords = (float(v),)
    else:
        coords = tuple(float(c) for c in v)
    if len(coords) != dim:
        raise DomainError("point has dimension %d, expected %d"
                          % (len(coords), dim))
    if any(not math.isfinite(c) for c in coords):
        raise DomainError("points must be finite")
    return coords


def cell_average(phi, x, y, subdivisions=1):
    """Exact value of int over [0,1)^d of phi(gamma(y+w) - gamma(x+w)) dw.

    The integer parts are constant on each cell of the breakpoint
    partition, so the integral is the weighted sum of finitely many phi
    values and carries no discretization error.
    """
    table, dim = _as_phi(phi)
    x = _as_point(x, dim)
    y = _as_point(y, dim)
    if subdivisions < 1:
        raise DomainError("subdivisions must be >= 1")
    acc = 0.0 + 0.0j
    for mid, measure in _cells(x, y, subdivisions):
        delta = tuple(math.floor(y_i + m) - math.floor(x_i + m)
                      for x_i, y_i, m in zip(x, y, mid))
        val = table.get(delta)
        if val is not None:
            acc += measure * val
    return acc.real if _is_real(table) else acc


def check_formula_p20(phi, x, y, subdivisions=1):
    """Compare the tent extension at y - x with the unit-cell average.

    Both sides are computed exactly (the average via the breakpoint
    partition), so agreement is at rounding level, not quadrature level.
    """
    table, dim = _as_phi(phi)
    xp = _as_point(x, dim)
    yp = _as_point(y, dim)
    diff = tuple(yc - xc for xc, yc in zip(xp, yp))
    direct = induce(table)(diff if dim > 1 else diff[0])
    average = cell_average(table, xp, yp, subdivisions=subdivisions)
    scale = max(1.0, max(abs(v) for v in table.values()))
    gap = abs(complex(direct) - complex(average))
    return Report(
        claim_id="formula-p20",
        inputs={"x": list(xp), "y": list(yp), "dim": dim,
                "support_size": len(table)},
        computed={"induced": _jsonable(direct),
                  "cell_average": _jsonable(average),
                  "gap": gap},
        reference={"identity": "unit-cell average equals tent extension"},
        tolerance=_EXACT_TOL,
        tolerance_kind="abs",
        passed=bool(gap <= _EXACT_TOL * scale),
    )


def _jsonable(v):
    v = complex(v)
    if v.imag == 0.0:
        return v.real
    return {"re": v.real, "im": v.imag}


def norm_a_z(phi, nodes=4096):
    """A(Z) norm: mean of |sum phi(n) e^{-i n theta}| over the circle.

    The symbol is a trigonometric polynomial, so midpoint quadrature with
    a few thousand nodes is far below the 1e-3 slack used by the callers.
    """
    table, dim = _as_phi(phi)
    if dim != 1:
        raise DomainError("A(Z) norm is implemented for d = 1 only")
    theta = (np.arange(nodes) + 0.5) * (2.0 * np.pi / nodes)
    return float(np.mean(np.abs(_symbol(table, theta))))


def _symbol(table, xi):
    acc = np.zeros(xi.shape, dtype=complex)
    for (n,), v in table.items():
        acc += v * np.exp(-1j * n * xi)
    return acc


def check_lemma21_norm(phi, resolution=256, slack=1e-3, max_periods=40000):
    """Check that inducing does not increase the Fourier-algebra norm.

    The extension's transform is the lattice symbol times the tent
    transform sinc^2(xi/2), so its L^1 norm over |xi| <= Xi is integrated
    by midpoint rule with ``resolution`` nodes per 2 pi period.  The
    truncated tail is bounded rigorously by max|symbol| * 8 / Xi (using
    sinc^2 <= (2/xi)^2); the period count is chosen so that this bound
    stays an order below ``slack``.  If the ``max_periods`` cap prevents
    that, the report carries conclusive=False and the inequality is judged
    against slack plus the tail bound, the weakest budget the computation
    can still guarantee.
    """
    table, dim = _as_phi(phi)
    if dim != 1:
        raise DomainError("lemma21 norm check is implemented for d = 1 only")
    if resolution < 16:
        raise DomainError("need resolution >= 16 nodes per period")
    mass = sum(abs(v) for v in table.values())
    if mass == 0.0:
        raise DomainError("phi must not be identically zero")
    # Tail bound (1/2pi) * max|m| * 8/Xi <= slack/10 with Xi = 2 pi periods.
    want = int(math.ceil(10.0 * 8.0 * mass / (slack * (2.0 * np.pi) ** 2)))
    periods = max(64, want)
    conclusive = periods <= max_periods
    periods = min(periods, max_periods)
    xi_max = 2.0 * np.pi * periods
    tail_bound = 8.0 * mass / (2.0 * np.pi * xi_max)

    n = 2 * periods * resolution
    xi = -xi_max + (np.arange(n) + 0.5) * (2.0 * xi_max / n)
    half = np.abs(xi) * 0.5
    window = np.ones_like(xi)
    nz = half > 0
    window[nz] = (np.sin(half[nz]) / half[nz]) ** 2
    integrand = np.abs(_symbol(table, xi)) * window
    a_real = float(np.sum(integrand) * (2.0 * xi_max / n) / (2.0 * np.pi))
    a_disc = norm_a_z(table)

    budget = slack if conclusive else slack + tail_bound
    passed = bool(a_real <= a_disc + budget)
    detail = "" if conclusive else (
        "inconclusive: truncation bound %.3g exceeds requested slack"
        % tail_bound)
    return Report(
        claim_id="lemma-2-1",
        inputs={"support_size": len(table), "resolution": resolution,
                "periods": periods},
        computed={"norm_induced": a_real, "norm_lattice": a_disc,
                  "tail_bound": tail_bound, "conclusive": conclusive},
        reference={"inequality": "A(R) norm of extension <= A(Z) norm"},
        tolerance=slack,
        tolerance_kind="abs",
        passed=passed,
        detail=detail,
    )


def _vector_table(vecs, name):
    if not isinstance(vecs, dict) or not vecs:
        raise DomainError("%s must be a non-empty dict of vectors" % name)
    out = {}
    dim = None
    width = None
    for key, val in vecs.items():
        if isinstance(key, (int, np.integer)):
            tkey = (int(key),)
        else:
            tkey = tuple(int(c) for c in key)
        if dim is None:
            dim = len(tkey)
        elif len(tkey) != dim:
            raise DomainError("mixed key dimensions in %s" % name)
        arr = np.asarray(val, dtype=complex).ravel()
        if width is None:
            width = arr.size
        elif arr.size != width:
            raise DomainError("vectors in %s must share one length" % name)
        out[tkey] = arr
    return out, dim, width


def gram_lift(xi, eta, x, y, subdivisions=1):
    """Lift a lattice Gram pairing to the ambient group.

    ``xi`` and ``eta`` map lattice points to vectors.  The precondition is
    that <xi(g1), eta(g2)> depends on g2 - g1 only; it is spot-checked on
    every support pair and violations raise DomainError.  Returns the pair
    (continuum inner product, extension value at y - x); the two agree
    exactly by the unit-cell averaging identity.  Missing lattice points
    contribute zero vectors.
    """
    xi_t, dim_x, width_x = _vector_table(xi, "xi")
    eta_t, dim_e, width_e = _vector_table(eta, "eta")
    if dim_x != dim_e or width_x != width_e:
        raise DomainError("xi and eta must share dimension and vector length")
    dim = dim_x
    xp = _as_point(x, dim)
    yp = _as_point(y, dim)

    # <u, v> linear in the first slot, matching the Gram convention used
    # by the Schur certificates.
    phi = {}
    scale = max(max(float(np.linalg.norm(v)) for v in xi_t.values()),
                max(float(np.linalg.norm(v)) for v in eta_t.values()), 1.0)
    for g1, u in xi_t.items():
        for g2, v in eta_t.items():
            delta = tuple(b - a for a, b in zip(g1, g2))
            val = complex(np.vdot(v, u))
            seen = phi.get(delta)
            if seen is None:
                phi[delta] = val
            elif abs(seen - val) > 1e-9 * scale * scale:
                raise DomainError(
                    "Gram pairing is not a difference function: offset %r "
                    "gives %r and %r" % (delta, seen, val))
    phi = {k: v for k, v in phi.items() if v != 0.0} or {tuple([0] * dim): 0.0}

    acc = 0.0 + 0.0j
    for mid, measure in _cells(xp, yp, subdivisions):
        gx = tuple(math.floor(c + m) for c, m in zip(xp, mid))
        gy = tuple(math.floor(c + m) for c, m in zip(yp, mid))
        u = xi_t.get(gx)
        v = eta_t.get(gy)
        if u is not None and v is not None:
            acc += measure * complex(np.vdot(v, u))

    diff = tuple(b - a for a, b in zip(xp, yp))
    lifted = induce(phi)(diff if dim > 1 else diff[0])
    return complex(acc), complex(lifted)


def phi_to_json(phi):
    """Serialize to {"support": [[n,...]], "re": [...], "im": [...]}."""
    table, _dim = _as_phi(phi)
    keys = sorted(table)
    return {
        "support": [list(k) for k in keys],
        "re": [table[k].real for k in keys],
        "im": [table[k].imag for k in keys],
    }


def phi_from_json(doc):
    """Inverse of phi_to_json; d = 1 functions come back with int keys."""
    try:
        support = doc["support"]
        re = doc["re"]
        im = doc.get("im", [0.0] * len(re))
    except (TypeError, KeyError) as exc:
        raise DomainError("phi document needs support/re/im fields") from exc
    if not (len(support) == len(re) == len(im)):
        raise DomainError("support/re/im lengths disagree")
    out = {}
    for point, a, b in zip(support, re, im):
        key = tuple(int(c) for c in point)
        if len(key) == 1:
            key = key[0]
        out[key] = complex(float(a), float(b))
    _as_phi(out)
    return out
