"""Principal-value quadrature on an interval with symmetric exclusion windows.

pv_integral_1d evaluates the integral with windows of the given radius
removed around each pole, by composite midpoint rule on every retained
subinterval.  The PV limit is the value as the radius shrinks; the
Richardson helper extrapolates a ladder of radii to zero.
"""
import numpy as np

from .errors import ConfigurationError, DomainError


def pv_integral_1d(f, a, b, poles, exclusion, n=32768):
    """Symmetric-exclusion quadrature of f over (a, b) at the given radius.

    Windows (p - exclusion, p + exclusion) around each pole are excluded;
    the rest is integrated by midpoint rule with about n nodes in total.
    """
    a, b = float(a), float(b)
    if not (np.isfinite(a) and np.isfinite(b)) or b <= a:
        raise DomainError("need a finite interval with a < b")
    poles = sorted(float(p) for p in np.atleast_1d(poles))
    eps = float(exclusion)
    if eps <= 0:
        raise DomainError("exclusion must be positive")
    for p in poles:
        if p <= a or p >= b:
            raise DomainError(f"pole {p} must lie strictly inside ({a}, {b})")
    for p, q in zip(poles, poles[1:]):
        if q - p < 2 * eps:
            raise ConfigurationError(
                f"exclusion windows around poles {p} and {q} overlap")
    if poles and (poles[0] - eps <= a or poles[-1] + eps >= b):
        raise ConfigurationError("exclusion window reaches the boundary")

    edges = [a]
    for p in poles:
        edges += [p - eps, p + eps]
    edges.append(b)
    total = 0.0 + 0.0j
    length = (b - a) - 2 * eps * len(poles)
    for lo, hi in zip(edges[0::2], edges[1::2]):
        if hi <= lo:
            continue
        m = max(8, int(round(n * (hi - lo) / length)))
        h = (hi - lo) / m
        t = lo + (np.arange(m) + 0.5) * h
        total += np.sum(f(t)) * h
    return complex(total)


def richardson_zero(radii, values):
    """Extrapolate samples (radius, value) to radius -> 0 by Neville's
    polynomial scheme; radii must be distinct and positive."""
    x = np.asarray(radii, dtype=float)
    y = np.asarray(values, dtype=complex)
    if x.size != y.size or x.size < 2:
        raise DomainError("need matching ladders with at least two rungs")
    tab = y.copy()
    for level in range(1, x.size):
        for i in range(x.size - level):
            tab[i] = (tab[i + 1] * x[i] - tab[i] * x[i + level]) \
                / (x[i] - x[i + level])
    return complex(tab[0])


def pv_integral_richardson(f, a, b, poles, ladder, n=32768):
    vals = [pv_integral_1d(f, a, b, poles, eps, n=n) for eps in ladder]
    return richardson_zero(ladder, vals)
