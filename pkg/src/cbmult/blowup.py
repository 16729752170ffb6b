"""Unbounded lower-bound curve from widening plateau functions.

Each plateau function equals one on [-R, R], falls to zero through a
C^2 quintic ramp of unit width, and is paired with the weight
1/sqrt(1+x^2/4).  The resulting bounds grow like log R without limit;
the sharp-indicator idealization has the closed form asinh(R/2)/pi that
the quadrature is checked against.
"""
import numpy as np

from .errors import DomainError

_SHOULDER = 1.0
_MIN_NODES = 1 << 14


def smooth_plateau(x, radius, shoulder=_SHOULDER):
    """1 on |x| <= radius, quintic C^2 ramp to 0 over the next shoulder
    width, 0 beyond; vectorized."""
    if radius <= 0 or shoulder <= 0:
        raise DomainError("radius and shoulder must be positive")
    u = (np.abs(np.asarray(x, dtype=float)) - radius) / shoulder
    u = np.clip(u, 0.0, 1.0)
    s = 1.0 - u
    return s * s * s * (10.0 - 15.0 * s + 6.0 * s * s)


def reference_bound(radius):
    """Sharp-indicator idealization of the same integral: asinh(R/2)/pi."""
    if radius <= 0:
        raise DomainError("radius must be positive")
    return float(np.arcsinh(0.5 * radius) / np.pi)


def blowup_bound(radius, shoulder=_SHOULDER):
    """(1/4 pi) int plateau_R(x)^2 / sqrt(1+x^2/4) dx by midpoint rule.

    The node count scales with the support so the cell size stays well
    below the shoulder width at every radius.
    """
    if radius <= 0 or not np.isfinite(radius):
        raise DomainError("radius must be positive and finite")
    half = radius + shoulder
    n = max(_MIN_NODES, int(64 * half))
    h = 2.0 * half / n
    x = -half + (np.arange(n) + 0.5) * h
    phi = smooth_plateau(x, radius, shoulder)
    val = np.sum(phi * phi / np.sqrt(1.0 + 0.25 * x * x)) * h
    return float(val / (4.0 * np.pi))


def blowup_curve(r_values, shoulder=_SHOULDER):
    """[(R, bound)] for each requested plateau radius."""
    out = []
    for r in r_values:
        out.append((float(r), blowup_bound(float(r), shoulder)))
    return out


def write_curve_csv(path, curve):
    with open(path, "w") as fh:
        fh.write("R,lower_bound\n")
        for r, bound in curve:
            fh.write(f"{r},{bound}\n")
