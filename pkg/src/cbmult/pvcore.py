"""Pole-subtracted principal-value rows on uniform midpoint grids.

Every singular integral in this package reduces to rows of the form
PV int f(v)/(p^2 - v^2) dv over a symmetric window (-L, L).  Plain
symmetric masking of cells near the poles is a dead end here: on a
sign-symmetric grid the masked midpoint sum is essentially independent
of the mask radius, so an exclusion ladder carries no signal to
extrapolate.  Each row therefore subtracts the secant line through the
two pole values f(+p), f(-p); the remainder is smooth across both poles
and is summed by midpoint rule, while the subtracted part is integrated
in closed form.

The windowed variant drops whole grid cells around each pole and adds
the secant mass back over exactly the retained cell union.  The rung
error is then genuinely linear in the radius (plus a cubic tail), so
Richardson extrapolation of a radius ladder to zero is sound, and the
radius-zero limit coincides with the fully subtracted row.
"""
import numpy as np

from .errors import ConfigurationError
from .pv import richardson_zero

# pole counts as sitting on a grid node below this fraction of a cell
_NODE_SNAP = 0.5e-6
# below this the two poles are treated as merged at the origin
_POLE_FLOOR = 1e-14


def secant_coefficients(pole, value_plus, value_minus):
    """Coefficients (alpha, beta) of the line through (p, f(p)) and
    (-p, f(-p)); for a merged pole at 0 the slope is dropped."""
    alpha = 0.5 * (value_plus + value_minus)
    if pole > _POLE_FLOOR:
        beta = 0.5 * (value_plus - value_minus) / pole
    else:
        beta = 0.0 * alpha
    return alpha, beta


def secant_mass(pole, alpha, half_width):
    # PV int (alpha + beta v)/(p^2 - v^2) dv over (-L, L); the beta part
    # is odd and vanishes, the alpha part has an elementary antiderivative
    if pole > _POLE_FLOOR:
        return alpha * np.log((half_width + pole) / (half_width - pole)) / pole
    return alpha * 2.0 / half_width


def _secant_antiderivative(v, pole, alpha, beta):
    # antiderivative of (alpha + beta t)/(p^2 - t^2) away from the poles
    p = pole
    first = alpha / (2.0 * p) * np.log(abs((p + v) / (p - v)))
    second = -0.5 * beta * np.log(abs((p - v) * (p + v)))
    return first + second


def subtracted_row(values, nodes, spacing, pole, value_plus, value_minus,
                   half_width):
    """PV int f(v)/(pole^2 - v^2) dv over (-half_width, half_width).

    values samples f on the midpoint nodes; value_plus / value_minus are
    f at +pole and -pole.  Where a pole falls exactly on a node the
    remainder has a removable singularity and a centred difference
    supplies the limit.  Requires pole < half_width; callers handle
    out-of-window poles with raw_row.
    """
    p = float(pole)
    h = float(spacing)
    alpha, beta = secant_coefficients(p, value_plus, value_minus)
    g = values - alpha - beta * nodes
    den = (p - nodes) * (p + nodes)
    near = np.abs(np.abs(nodes) - p) < _NODE_SNAP * h
    safe = np.where(near, 1.0, den)
    out = np.where(near, 0.0 * g, g / safe)
    for j in np.nonzero(near)[0]:
        if j == 0 or j == len(nodes) - 1:
            continue
        gp = (g[j + 1] - g[j - 1]) / (2.0 * h)
        out[j] = gp / (-2.0 * nodes[j])
    return np.sum(out) * h + secant_mass(p, alpha, half_width)


def raw_row(values, nodes, pole, spacing):
    """Plain midpoint sum of f/(p^2 - v^2), skipping near-singular nodes.

    Fallback for poles at or beyond the window edge, where the subtracted
    form has no closed secant mass; the callers only reach it where f has
    already decayed to round-off.
    """
    den = (pole - nodes) * (pole + nodes)
    keep = np.abs(den) > _NODE_SNAP * spacing * max(pole, spacing)
    return np.sum(values[keep] / den[keep]) * spacing


def windowed_row(values, nodes, spacing, pole, value_plus, value_minus,
                 half_width, radius):
    """One exclusion rung of the subtracted row.

    The windows (±pole - radius, ±pole + radius) are excluded as
    continuous intervals: boundary cells enter the remainder sum with
    fractional weight, and the secant mass is integrated in closed form
    over exactly the retained intervals.  Snapping the windows to whole
    cells instead would shift each window edge by up to half a cell and
    feed a ln(a/b) edge-asymmetry term into the rung; with exact edges
    the rung error is a smooth, linearly dominated function of the
    radius and Richardson extrapolation over a ladder is sound.
    """
    p = float(pole)
    h = float(spacing)
    r = float(radius)
    if r < h:
        raise ConfigurationError(
            f"exclusion radius {r:.3g} is below one grid cell {h:.3g}")
    runs = _retained_intervals(p, r, half_width)
    if not runs:
        raise ConfigurationError(
            "exclusion windows swallow the whole integration window")
    alpha, beta = secant_coefficients(p, value_plus, value_minus)
    g = values - alpha - beta * nodes
    lo_cell = nodes - 0.5 * h
    hi_cell = nodes + 0.5 * h
    w = np.zeros(len(nodes))
    for lo, hi in runs:
        w += np.clip(np.minimum(hi_cell, hi) - np.maximum(lo_cell, lo),
                     0.0, h)
    w /= h
    den = (p - nodes) * (p + nodes)
    safe = np.where(w > 0, den, 1.0)
    total = np.sum(np.where(w > 0, g / safe, 0.0 * g) * w) * h
    mass = 0.0 * alpha
    for lo, hi in runs:
        mass += (_secant_antiderivative(hi, p, alpha, beta)
                 - _secant_antiderivative(lo, p, alpha, beta))
    return total + mass


def _retained_intervals(pole, radius, half_width):
    """Complement of the two exclusion windows inside (-L, L); the
    windows merge when they overlap across the origin and are clipped
    at the domain edge."""
    wins = [(-pole - radius, -pole + radius), (pole - radius, pole + radius)]
    wins.sort()
    if wins[0][1] >= wins[1][0]:
        wins = [(wins[0][0], max(wins[0][1], wins[1][1]))]
    runs = []
    cursor = -half_width
    for lo, hi in wins:
        lo = max(lo, -half_width)
        hi = min(hi, half_width)
        if hi <= lo:
            continue
        if lo > cursor:
            runs.append((cursor, lo))
        cursor = max(cursor, hi)
    if cursor < half_width:
        runs.append((cursor, half_width))
    return runs


def rung_values(values, nodes, spacing, pole, value_plus, value_minus,
                half_width, radii):
    """Row values at every rung of a ladder, with a consistent policy.

    A window that reaches the mirror pole breaks the principal-value
    cancellation and leaves a 1/radius defect, and a window clipped by
    the domain edge is not a smooth function of the radius either.  Rows
    whose pole sits within the largest window of the origin or of the
    edge are therefore evaluated by the subtraction limit, identically
    on every rung, so they drop out of the rung differences; all other
    rows are windowed at the rung radius.
    """
    rmax = max(radii)
    if pole >= half_width:
        val = raw_row(values, nodes, pole, spacing)
        return [val] * len(radii)
    if (pole <= 2.0 * rmax + spacing
            or pole >= half_width - rmax - spacing):
        val = subtracted_row(values, nodes, spacing, pole, value_plus,
                             value_minus, half_width)
        return [val] * len(radii)
    return [windowed_row(values, nodes, spacing, pole, value_plus,
                         value_minus, half_width, r) for r in radii]


def validate_ladder(ladder, spacing, half_width):
    """Check an exclusion ladder against the grid and return it sorted
    from coarsest to finest radius."""
    lad = [float(r) for r in np.atleast_1d(np.asarray(ladder, dtype=float))]
    if not lad:
        raise ConfigurationError("exclusion ladder must not be empty")
    if any(not np.isfinite(r) or r <= 0 for r in lad):
        raise ConfigurationError("exclusion radii must be positive and finite")
    if len(set(lad)) != len(lad):
        raise ConfigurationError("exclusion radii must be distinct")
    if spacing > min(lad) / 4.0:
        raise ConfigurationError(
            f"grid spacing {spacing:.4g} too coarse for exclusion "
            f"{min(lad):.4g}; need spacing <= exclusion/4")
    if max(lad) >= 0.5 * half_width:
        raise ConfigurationError(
            f"exclusion radius {max(lad):.4g} is not small against the "
            f"window half-width {half_width:.4g}")
    return sorted(lad, reverse=True)


def extrapolate(radii, values):
    """Ladder limit at radius zero; a single rung is returned as-is."""
    if len(values) == 1:
        return complex(values[0])
    return richardson_zero(radii, values)


def default_ladder(spacing, scale=4.0):
    """Three-rung ladder tied to the grid: the finest rung keeps the
    mandated four cells per radius, the others step up by half-octaves."""
    base = scale * float(spacing)
    return (2.0 * base, 1.5 * base, base)


def cubic_interp_row(row, spacing, start, where):
    """Four-point Lagrange interpolation of uniformly sampled row data.

    start is the coordinate of row[0]; clamped near the ends so the
    stencil stays inside.  Exact on nodes and on cubics.
    """
    u = (where - start) / spacing
    j = int(np.floor(u))
    j = min(max(j, 1), len(row) - 3)
    t = u - j
    w0 = -t * (t - 1) * (t - 2) / 6
    w1 = (t + 1) * (t - 1) * (t - 2) / 2
    w2 = -(t + 1) * t * (t - 2) / 2
    w3 = (t + 1) * t * (t - 1) / 6
    return (w0 * row[j - 1] + w1 * row[j] + w2 * row[j + 1]
            + w3 * row[j + 2])
