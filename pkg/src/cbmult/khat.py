"""Fourier transform of the distributional kernel 1/(1 + y^2 - z^2).

The closed form is a zero-order Bessel function supported outside the
light cone u^2 = t^2 of the transform variables.  The numeric route
evaluates the oscillatory double integral directly, with a Gaussian
envelope for truncation and the pole-subtracted row engine for the
principal values; it exists so the closed form and its support pattern
can be checked without trusting either side.
"""
import numpy as np

from . import pvcore
from .bessel import bessel_j0
from .errors import ConfigurationError, DomainError

# The raw double integral of e^{i(ty+uz)}/(1+y^2-z^2) carries a factor
# pi^2 relative to J0; calibrated once against the numeric route below
# (candidate factors 1 and 1/pi are off by more than 3x) and frozen.
_JUMP_NORM = np.pi ** 2

_BOUNDARY = 1e-12


def lemma_c_khat(t, u):
    """Closed-form transform value at (t, u), normalized to J0.

    J0(sqrt(u^2 - t^2)) outside the cone (u^2 > t^2), 0 inside; the
    cone itself is a genuine discontinuity, so points within 1e-12 of
    it are refused rather than assigned a side.
    """
    t = float(t)
    u = float(u)
    if not (np.isfinite(t) and np.isfinite(u)):
        raise DomainError("t and u must be finite")
    gap = u * u - t * t
    if abs(gap) < _BOUNDARY:
        raise DomainError(
            f"(t, u) = ({t}, {u}) lies on the support boundary u^2 = t^2 "
            "where the transform jumps")
    if gap < 0:
        return 0.0
    return bessel_j0(np.sqrt(gap))


def _envelope(w, sigma):
    return np.exp(-w * w / (2.0 * sigma * sigma))


def _z_first(t, u, n, half_width, sigma):
    """Inner integral over z (poles at z = +-sqrt(1+y^2)), outer over y."""
    L = half_width
    h = 2.0 * L / n
    y = -L + (np.arange(n) + 0.5) * h
    z = y
    fz = _envelope(z, sigma) * np.exp(1j * u * z)
    total = 0.0 + 0.0j
    for yi in y:
        p = np.sqrt(1.0 + yi * yi)
        if p < L - 1e-9:
            fp = _envelope(p, sigma) * np.exp(1j * u * p)
            fm = _envelope(p, sigma) * np.exp(-1j * u * p)
            row = pvcore.subtracted_row(fz, z, h, p, fp, fm, L)
        else:
            row = pvcore.raw_row(fz, z, p, h)
        total += _envelope(yi, sigma) * np.exp(1j * t * yi) * row
    return total * h


def _y_first(t, u, n, half_width, sigma, n_theta):
    """Inner integral over y, outer over z.

    For |z| < 1 the denominator 1 + y^2 - z^2 never vanishes but peaks
    sharply as |z| -> 1; substituting z = sin(theta) absorbs the peak
    into the measure, and subtracting the quadratic jet of the numerator
    at y = 0 handles the near-pinch analytically.  For |z| > 1 the inner
    integral has poles at y = +-sqrt(z^2-1) and the subtracted row
    applies with an overall sign flip.
    """
    L = half_width
    h = 2.0 * L / n
    y = -L + (np.arange(n) + 0.5) * h
    g = _envelope(y, sigma) * np.exp(1j * t * y)
    g0 = 1.0 + 0.0j
    gpp = -1.0 / (sigma * sigma) - t * t
    total = 0.0 + 0.0j

    hth = np.pi / n_theta
    theta = -0.5 * np.pi + (np.arange(n_theta) + 0.5) * hth
    for th in theta:
        c = np.cos(th)
        zk = np.sin(th)
        at = np.arctan(L / c)
        rem = (g - g0 - 0.5 * gpp * y * y) / (c * c + y * y)
        row = (g0 * (2.0 / c) * at + 0.5 * gpp * (2.0 * L - 2.0 * c * at)
               + np.sum(rem) * h)
        total += _envelope(zk, sigma) * np.exp(1j * u * zk) * row * c * hth

    m = int((L - 1.0) / h)
    hz = (L - 1.0) / m
    for k in range(m):
        zw = 1.0 + (k + 0.5) * hz
        q = np.sqrt(zw * zw - 1.0)
        if q < L - 1e-9:
            gq = _envelope(q, sigma) * np.exp(1j * t * q)
            gm = _envelope(q, sigma) * np.exp(-1j * t * q)
            row = -pvcore.subtracted_row(g, y, h, q, gq, gm, L)
        else:
            row = -pvcore.raw_row(g, y, q, h)
        for sign in (1.0, -1.0):
            total += (_envelope(sign * zw, sigma)
                      * np.exp(1j * u * sign * zw) * row * hz)
    return total


def lemma_c_khat_numeric(t, u, n=4096, half_width=40.0, sigma=10.0,
                         n_theta=600, order="z-first"):
    """Quadrature of the transform integral, normalized like the closed
    form.  order selects which variable is integrated innermost; the two
    agree to a few 1e-6, which is the order-independence check."""
    t = float(t)
    u = float(u)
    if n < 256:
        raise ConfigurationError("need at least 256 nodes per axis")
    if half_width <= 2.0 or sigma <= 0:
        raise ConfigurationError("window must exceed the pole region "
                                 "and the envelope width must be positive")
    if order == "z-first":
        raw = _z_first(t, u, n, half_width, sigma)
    elif order == "y-first":
        raw = _y_first(t, u, n, half_width, sigma, n_theta)
    else:
        raise ConfigurationError(f"unknown integration order: {order!r}")
    return float((raw / _JUMP_NORM).real)
