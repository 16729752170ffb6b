"""Order-of-integration defect of the double integral of f(y,z)/(y^2-z^2).

The inner principal value leaves a jump across the pole lines z = +-y,
and the outer integral sees that jump with opposite orientation in the
two orders, so the two iterated integrals differ by a fixed multiple of
the value of f at the origin.  Both orders are computed with the same
pole-subtracted row engine; the exclusion ladder drives a Richardson
limit that certifies the rows are radius-independent.
"""
import numpy as np

from . import pvcore
from .errors import ConfigurationError, DomainError

_AXIS_TOL = 1e-9


def _check_axis(ax, spacing):
    if abs(ax[0] + ax[-1]) > _AXIS_TOL * spacing:
        raise ConfigurationError("grid must be symmetric about the origin")
    if np.min(np.abs(ax)) < 0.4 * spacing:
        raise ConfigurationError(
            "grid must be midpoint-offset: a node on the axis would put a "
            "pole line through the origin node")


def _iterated(values, outer_nodes, inner_nodes, spacing, radii):
    """Per-rung totals of sum_outer PV int f(outer,.)/(outer^2 - v^2) dv."""
    half_width = inner_nodes[-1] + 0.5 * spacing
    start = inner_nodes[0]
    totals = np.zeros(len(radii), dtype=complex)
    for i, t in enumerate(outer_nodes):
        p = abs(t)
        row = values[i]
        fp = pvcore.cubic_interp_row(row, spacing, start, p)
        fm = pvcore.cubic_interp_row(row, spacing, start, -p)
        vals = pvcore.rung_values(row, inner_nodes, spacing, p, fp, fm,
                                  half_width, radii)
        totals += np.asarray(vals) * spacing
    return totals


def fubini_defect(phi, ladder=None):
    """Both iterated integrals and their difference.

    phi is a 2D GridFunction on a square-spaced, symmetric, midpoint-
    offset grid.  Returns (I, J, defect): I integrates the second axis
    first (poles at v = +-first coordinate), J the first axis first,
    defect = I - J.  Each order is Richardson-extrapolated over the
    exclusion ladder; with no ladder a grid-tied default is used.
    """
    if getattr(phi, "dim", None) != 2:
        raise DomainError("fubini_defect needs a 2D GridFunction")
    h0, h1 = phi.spacing
    if abs(h0 - h1) > _AXIS_TOL * h0:
        raise ConfigurationError("grid spacing must match on both axes")
    ya, za = phi.axis(0), phi.axis(1)
    _check_axis(ya, h0)
    _check_axis(za, h1)
    if ladder is None:
        ladder = pvcore.default_ladder(h0)
    half = min(ya[-1], za[-1]) + 0.5 * h0
    radii = pvcore.validate_ladder(ladder, h0, half)

    vals = np.ascontiguousarray(phi.values)
    i_rungs = _iterated(vals, ya, za, h0, radii)
    j_rungs = -_iterated(np.ascontiguousarray(vals.T), za, ya, h0, radii)
    i_val = pvcore.extrapolate(radii, i_rungs).real
    j_val = pvcore.extrapolate(radii, j_rungs).real
    return float(i_val), float(j_val), float(i_val - j_val)
