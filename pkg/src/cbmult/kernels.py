"""Oscillatory kernels on the line, their commutator form, and norms.

Both kernel families live on a region where two quadratic forms have
opposite signs, carry a Bessel factor bounded by one there, and vanish
elsewhere.  Dropping the Bessel factor leaves an indicator kernel that
is exactly a commutator of sign multipliers with the Hilbert transform,
which is what caps the operator norm; the residual check verifies that
algebraic identity pointwise and the Nystrom norm checks the cap.
"""
from dataclasses import dataclass

import numpy as np

from .bessel import bessel_j0_array
from .errors import ConfigurationError, DomainError
from .linalg import operator_norm

_CASES = ("SL3", "SP2")


@dataclass(frozen=True)
class KernelSpec:
    case: str
    a: float
    b: float = None

    def __post_init__(self):
        if self.case not in _CASES:
            raise DomainError(f"case must be one of {_CASES}, "
                              f"got {self.case!r}")
        if not np.isfinite(self.a) or self.a == 0:
            raise DomainError("spectral parameter a must be finite "
                              "and nonzero")
        if self.case == "SP2":
            if self.b is None or not np.isfinite(self.b):
                raise DomainError("SP2 kernels need a finite offset b")
        elif self.b is not None:
            raise DomainError("the offset b only applies to SP2")

    @property
    def c(self):
        """Transition radius of the SP2 sign region."""
        if self.case != "SP2":
            raise DomainError("only SP2 kernels have a transition radius")
        if self.a * self.b >= 0:
            raise DomainError("a*b >= 0: the kernel vanishes identically "
                              "and has no transition radius")
        return float(np.sqrt(-self.b / self.a))


def kernel_sl3(spec, s, t):
    """2 pi^2 J0(a sqrt(-4 s t)) / |s - t| where s t < 0, else 0."""
    if spec.case != "SL3":
        raise DomainError("kernel_sl3 needs an SL3 spec")
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    s, t = np.broadcast_arrays(s, t)
    region = s * t < 0
    out = np.zeros(region.shape)
    if np.any(region):
        sr, tr = s[region], t[region]
        arg = spec.a * np.sqrt(-4.0 * sr * tr)
        out[region] = (2.0 * np.pi ** 2 * bessel_j0_array(arg)
                       / np.abs(sr - tr))
    if out.ndim == 0:
        return float(out)
    return out


def kernel_sp2(spec, s, t):
    """Same shape with the region (a s^2 + b)(a t^2 + b) < 0; empty
    region (a b >= 0) gives the zero kernel."""
    if spec.case != "SP2":
        raise DomainError("kernel_sp2 needs an SP2 spec")
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    s, t = np.broadcast_arrays(s, t)
    qs = spec.a * s * s + spec.b
    qt = spec.a * t * t + spec.b
    region = qs * qt < 0
    out = np.zeros(region.shape)
    if np.any(region):
        arg = np.sqrt(-qs[region] * qt[region])
        out[region] = (2.0 * np.pi ** 2 * bessel_j0_array(arg)
                       / np.abs(s[region] - t[region]))
    if out.ndim == 0:
        return float(out)
    return out


def indicator_kernel(case, c, s, t):
    """The Bessel-free majorant: 1/|s-t| on the sign region, else 0.

    For SL3 the region is s t < 0 (c is ignored); for SP2 it is
    (s^2 - c^2)(t^2 - c^2) < 0.
    """
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    if case == "SL3":
        region = s * t < 0
    elif case == "SP2":
        region = (s * s - c * c) * (t * t - c * c) < 0
    else:
        raise DomainError(f"case must be one of {_CASES}, got {case!r}")
    gap = np.where(region, np.abs(s - t), 1.0)
    out = np.where(region, 1.0 / gap, 0.0)
    if out.ndim == 0:
        return float(out)
    return out


def _commutator_kernel(case, c, s, t):
    # (pi/2) (U2 H U1 - U1 H U2) has kernel
    # (u2(s) u1(t) - u1(s) u2(t)) / (2 (s - t)); for SL3, U1 = U2's
    # one-sign version collapses it to (sign s - sign t)/(2(s-t))
    if case == "SL3":
        num = np.sign(s) - np.sign(t)
    else:
        num = (np.sign(s - c) * np.sign(t + c)
               - np.sign(s + c) * np.sign(t - c))
    return num / (2.0 * (s - t))


def commutator_kernel_residual(case, c, points):
    """Max pointwise gap between the indicator kernel and its commutator
    form; the identity is algebraic, so anything above round-off means a
    broken sign convention.

    points: array-like of (s, t) pairs, off the diagonal and off the
    sign-change loci.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] == 0:
        raise DomainError("points must be a nonempty array of (s, t) pairs")
    s, t = pts[:, 0], pts[:, 1]
    if np.min(np.abs(s - t)) < 1e-9:
        raise DomainError("sample points must stay off the diagonal s = t")
    if case == "SL3":
        loci = min(np.min(np.abs(s)), np.min(np.abs(t)))
    else:
        loci = min(np.min(np.abs(np.abs(s) - c)),
                   np.min(np.abs(np.abs(t) - c)))
    if loci < 1e-9:
        raise DomainError("sample points must stay off the sign-change loci")
    direct = indicator_kernel(case, c, s, t)
    comm = _commutator_kernel(case, c, s, t)
    return float(np.max(np.abs(direct - comm)))


def kernel_operator_norm(kernel, n, cutoff):
    """Operator norm of the Nystrom discretization of the kernel on a
    symmetric midpoint-offset grid over [-cutoff, cutoff].

    The grid offset keeps nodes off 0 and (for generic cutoff) off the
    sign loci; a node landing on a singular locus shows up as a
    non-finite entry and is rejected.
    """
    n = int(n)
    if n < 2 or cutoff <= 0 or not np.isfinite(cutoff):
        raise ConfigurationError("need n >= 2 nodes and a positive cutoff")
    h = 2.0 * cutoff / n
    nodes = -cutoff + (np.arange(n) + 0.5) * h
    ss, tt = np.meshgrid(nodes, nodes, indexing="ij")
    vals = np.asarray(kernel(ss, tt), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise ConfigurationError(
            "kernel is singular on a grid node; shift the cutoff or "
            "resolution so nodes avoid the singular loci")
    return float(operator_norm(vals) * h)
