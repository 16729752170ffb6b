"""Finite-set multiplier lower bounds and Fourier-algebra norms.

The completely bounded multiplier norm of a function on a group
dominates the Schur norm of every sampled matrix phi(x_j^-1 x_i); the
max over a family of finite sample sets is therefore a certified lower
bound, and that is all this module claims (the output is labelled a
bound, never the norm).  For finitely supported functions on Z^d the
Fourier-algebra norm is computed directly as the L^1 norm of the
symbol on the torus.
"""
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, DomainError
from .grid import GridFunction
from .groups import (Dix4Element, Heis3Element, dix4_inv, dix4_mul,
                     heis3_inv, heis3_mul)
from .schur import MAX_N, schur_norm

_SUPPORT_MAX = 1000


def group_mul(a, b):
    """Multiplication for the element kinds the sampler produces:
    numbers and tuples compose additively."""
    if isinstance(a, Heis3Element):
        return heis3_mul(a, b)
    if isinstance(a, Dix4Element):
        return dix4_mul(a, b)
    if isinstance(a, tuple):
        return tuple(x + y for x, y in zip(a, b))
    return a + b


def group_inv(a):
    if isinstance(a, Heis3Element):
        return heis3_inv(a)
    if isinstance(a, Dix4Element):
        return dix4_inv(a)
    if isinstance(a, tuple):
        return tuple(-x for x in a)
    return -a


@dataclass
class SampledMultiplier:
    """A multiplier together with the finite sets it will be sampled on.

    group: one of "Z", "Z2", "R", "Heis3", "Dix4".
    """
    group: str
    phi: callable
    sample_sets: list = field(default_factory=list)

    def __post_init__(self):
        for els in self.sample_sets:
            for x in els:
                v = complex(self.phi(x))
                if not (np.isfinite(v.real) and np.isfinite(v.imag)):
                    raise DomainError(
                        f"multiplier is not finite at sample {x!r}")


def herz_schur_matrix(elements, phi):
    """Matrix M with M[i, j] = phi(x_j^-1 x_i) for the given elements."""
    n = len(elements)
    if n == 0:
        raise DomainError("need at least one element")
    if n > MAX_N:
        raise DomainError(f"sample sets are limited to {MAX_N} elements")
    m = np.zeros((n, n), dtype=complex)
    for j, xj in enumerate(elements):
        invj = group_inv(xj)
        for i, xi in enumerate(elements):
            try:
                m[i, j] = complex(phi(group_mul(invj, xi)))
            except Exception as exc:
                raise DomainError(
                    f"multiplier evaluation failed at pair "
                    f"({xi!r}, {xj!r})") from exc
    return m


def m0a_lower_bound(sm, tol=1e-6):
    """Max Schur norm over the sample sets: a certified lower bound for
    the completely bounded multiplier norm of sm.phi."""
    if not sm.sample_sets:
        raise DomainError("no sample sets supplied")
    best = 0.0
    for els in sm.sample_sets:
        val, _ = schur_norm(herz_schur_matrix(els, sm.phi), tol=tol)
        best = max(best, val)
    return float(best)


def a_norm_abelian(phi, points=None):
    """Fourier-algebra norm of a finitely supported function on Z or Z^2.

    phi: dict mapping integers (d=1) or integer pairs (d=2) to values.
    Computed as (2 pi)^-d int |sum phi(n) e^{i n.theta}| d theta with
    the trapezoid rule, which is spectrally accurate for this periodic
    integrand away from symbol zeros.
    """
    if not phi:
        raise DomainError("empty support")
    if len(phi) > _SUPPORT_MAX:
        raise DomainError(f"support is limited to {_SUPPORT_MAX} points")
    keys = list(phi.keys())
    if all(isinstance(k, (int, np.integer)) for k in keys):
        d = 1
    elif all(isinstance(k, tuple) and len(k) == 2 for k in keys):
        d = 2
    else:
        raise DomainError("support must be ints or integer pairs")
    if points is None:
        points = 2 ** 14 if d == 1 else 2 ** 9
    points = int(points)
    if points < 2:
        raise DomainError("need at least 2 quadrature points")
    theta = 2.0 * np.pi * np.arange(points) / points
    if d == 1:
        ns = np.array(keys, dtype=float)
        vals = np.array([phi[k] for k in keys], dtype=complex)
        symbol = np.exp(1j * np.outer(theta, ns)) @ vals
        return float(np.mean(np.abs(symbol)))
    ns = np.array(keys, dtype=float)
    vals = np.array([phi[k] for k in keys], dtype=complex)
    t1, t2 = np.meshgrid(theta, theta, indexing="ij")
    phase = np.tensordot(np.stack([t1, t2], axis=-1), ns.T, axes=1)
    symbol = np.exp(1j * phase) @ vals
    return float(np.mean(np.abs(symbol)))


def a_norm_upper_conv(f, g):
    """||f||_2 ||g||_2, an upper bound for the algebra norm of f * g~."""
    if not isinstance(f, GridFunction) or not isinstance(g, GridFunction):
        raise DomainError("a_norm_upper_conv expects GridFunctions")
    if (f.dim != g.dim or f.origin != g.origin or f.spacing != g.spacing
            or f.values.shape != g.values.shape):
        raise DomainError("grid geometries must match")
    return f.norm_l2() * g.norm_l2()


# fixed generators for the seeded word sampler
_HEIS3_GENS = [Heis3Element(1.0, 0.0, 0.0), Heis3Element(0.0, 1.0, 0.0),
               Heis3Element(0.0, 0.0, 1.0)]
_DIX4_GENS = [Dix4Element(1.0, 0.0, 0.0, 0.0), Dix4Element(0.0, 1.0, 0.0, 0.0),
              Dix4Element(0.0, 0.0, 1.0, 0.0)]


def _random_word(rng, gens, identity, length):
    w = identity
    for _ in range(length):
        g = gens[rng.integers(len(gens))]
        if rng.integers(2):
            g = group_inv(g)
        w = group_mul(w, g)
    return w


def generate_sample_sets(group, n_sets, seed, set_size=6, word_length=5):
    """Deterministic sample sets: pseudo-random bounded-length words in
    fixed generators (seeded), always including the identity."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n_sets):
        els = []
        if group == "Z":
            els = [0] + [int(x) for x in
                         rng.integers(-word_length, word_length + 1,
                                      set_size - 1)]
        elif group == "Z2":
            els = [(0, 0)] + [tuple(int(v) for v in x) for x in
                              rng.integers(-word_length, word_length + 1,
                                           (set_size - 1, 2))]
        elif group == "R":
            els = [0.0] + [float(x) for x in
                           rng.uniform(-word_length, word_length,
                                       set_size - 1)]
        elif group == "Heis3":
            els = [Heis3Element.identity()]
            els += [_random_word(rng, _HEIS3_GENS, Heis3Element.identity(),
                                 int(rng.integers(1, word_length + 1)))
                    for _ in range(set_size - 1)]
        elif group == "Dix4":
            els = [Dix4Element.identity()]
            els += [_random_word(rng, _DIX4_GENS, Dix4Element.identity(),
                                 int(rng.integers(1, word_length + 1)))
                    for _ in range(set_size - 1)]
        else:
            raise ConfigurationError(f"unknown group tag {group!r}")
        out.append(els)
    return out


def _coords(x):
    if isinstance(x, Heis3Element):
        return np.array([x.x, x.y, x.z])
    if isinstance(x, Dix4Element):
        return np.array([x.x, x.y, x.z, x.w])
    if isinstance(x, tuple):
        return np.array(x, dtype=float)
    return np.array([float(x)])


def make_multiplier(kind, **params):
    """Evaluation callables for the spec files: gaussian (sigma),
    delta, constant (value)."""
    if kind == "gaussian":
        sigma = float(params.get("sigma", 1.0))
        if sigma <= 0:
            raise ConfigurationError("sigma must be positive")
        return lambda x: float(np.exp(-np.sum(_coords(x) ** 2)
                                      / (2.0 * sigma * sigma)))
    if kind == "delta":
        return lambda x: 1.0 if np.all(_coords(x) == 0.0) else 0.0
    if kind == "constant":
        value = complex(params.get("value", 1.0))
        return lambda x: value
    raise ConfigurationError(f"unknown multiplier kind {kind!r}")


def load_multiplier_spec(obj, n_sets=10, seed=0):
    """Build a SampledMultiplier from a parsed spec dict such as
    {"group": "Z", "kind": "gaussian", "sigma": 1.0}."""
    if not isinstance(obj, dict):
        raise ConfigurationError("multiplier spec must be a JSON object")
    if "group" not in obj or "kind" not in obj:
        raise ConfigurationError('multiplier spec needs "group" and "kind"')
    params = {k: v for k, v in obj.items() if k not in ("group", "kind")}
    phi = make_multiplier(obj["kind"], **params)
    sets = generate_sample_sets(obj["group"], n_sets, seed)
    return SampledMultiplier(obj["group"], phi, sets)
