"""Uniformly sampled complex functions on 1D/2D/3D boxes.

A GridFunction stores node values on an axis-aligned uniform grid,
endpoint-inclusive and row-major.  Values must vanish on the outermost
grid layer; that is the compact-support surrogate used throughout and it
lets quadrature treat h*sum as both the trapezoid and the cell-union rule.
"""
import json
import numpy as np

from .errors import DomainError

_BOUNDARY_TOL = 1e-12


def _as_tuple(v, dim, name):
    arr = np.atleast_1d(np.asarray(v, dtype=float))
    if arr.size == 1:
        arr = np.repeat(arr, dim)
    if arr.size != dim:
        raise DomainError(f"{name} needs 1 or {dim} entries, got {arr.size}")
    return tuple(float(x) for x in arr)


class GridFunction:
    def __init__(self, origin, spacing, values, support_radius=None):
        values = np.asarray(values, dtype=complex)
        if values.ndim not in (1, 2, 3):
            raise DomainError("GridFunction supports dim 1, 2 or 3")
        self.dim = values.ndim
        self.origin = _as_tuple(origin, self.dim, "origin")
        self.spacing = _as_tuple(spacing, self.dim, "spacing")
        if any(s <= 0 for s in self.spacing):
            raise DomainError("spacing must be positive on every axis")
        self.values = values
        if support_radius is None:
            support_radius = tuple(
                0.5 * s * (n - 1) for s, n in zip(self.spacing, values.shape))
        self.support_radius = _as_tuple(support_radius, self.dim,
                                        "support_radius")
        self._check_boundary()

    def _check_boundary(self):
        scale = max(np.abs(self.values).max(), 1.0)
        for ax in range(self.dim):
            for sl in (0, -1):
                idx = [slice(None)] * self.dim
                idx[ax] = sl
                layer = self.values[tuple(idx)]
                if np.abs(layer).max() > _BOUNDARY_TOL * scale:
                    raise DomainError(
                        "values must vanish on the outermost grid layer "
                        f"(axis {ax} violates this)")

    @classmethod
    def _raw(cls, origin, spacing, values, support_radius=None):
        """Build without the boundary-layer check; for operator outputs
        (e.g. Hilbert transforms) that decay but do not vanish."""
        obj = cls.__new__(cls)
        values = np.asarray(values, dtype=complex)
        obj.dim = values.ndim
        obj.origin = _as_tuple(origin, obj.dim, "origin")
        obj.spacing = _as_tuple(spacing, obj.dim, "spacing")
        obj.values = values
        if support_radius is None:
            support_radius = tuple(
                0.5 * s * (n - 1) for s, n in zip(obj.spacing, values.shape))
        obj.support_radius = _as_tuple(support_radius, obj.dim,
                                       "support_radius")
        return obj

    @property
    def shape(self):
        return self.values.shape

    def axis(self, ax):
        n = self.values.shape[ax]
        return self.origin[ax] + self.spacing[ax] * np.arange(n)

    @property
    def cell_volume(self):
        return float(np.prod(self.spacing))

    def norm_l2(self):
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2)
                             * self.cell_volume))

    @classmethod
    def sample(cls, f, origin, spacing, shape, zero_boundary=True):
        """Sample a callable on the grid; the outermost layer is zeroed so
        the compact-support invariant holds by construction."""
        origin = _as_tuple(origin, len(shape), "origin")
        spacing = _as_tuple(spacing, len(shape), "spacing")
        axes = [origin[a] + spacing[a] * np.arange(shape[a])
                for a in range(len(shape))]
        mesh = np.meshgrid(*axes, indexing="ij")
        vals = np.asarray(f(*mesh), dtype=complex)
        if zero_boundary:
            for ax in range(vals.ndim):
                idx = [slice(None)] * vals.ndim
                for sl in (0, -1):
                    idx[ax] = sl
                    vals[tuple(idx)] = 0.0
                idx[ax] = slice(None)
        return cls(origin, spacing, vals)

    @classmethod
    def centered(cls, f, half_width, n, dim, offset=True):
        """Symmetric box [-L, L]^dim.  With offset=True the nodes sit at
        cell midpoints, so no node lies on any coordinate axis and the
        node cells tile [-L, L] exactly."""
        if isinstance(half_width, (int, float)):
            half_width = (float(half_width),) * dim
        h = tuple(2.0 * L / n for L in half_width)
        if offset:
            origin = tuple(-L + hh / 2 for L, hh in zip(half_width, h))
            shape = (n,) * dim
        else:
            origin = tuple(-L for L in half_width)
            h = tuple(2.0 * L / (n - 1) for L in half_width)
            shape = (n,) * dim
        return cls.sample(f, origin, h, shape)

    # ---- serialization: bit-exact JSON and binary round trips ----

    def save_json(self, path):
        doc = {
            "dim": self.dim,
            "origin": list(self.origin),
            "spacing": list(self.spacing),
            "shape": list(self.values.shape),
            "support_radius": list(self.support_radius),
            "re": self.values.real.ravel().tolist(),
            "im": self.values.imag.ravel().tolist(),
        }
        with open(path, "w") as fh:
            json.dump(doc, fh)

    @classmethod
    def load_json(cls, path):
        with open(path) as fh:
            doc = json.load(fh)
        vals = (np.asarray(doc["re"], float)
                + 1j * np.asarray(doc["im"], float))
        vals = vals.reshape(doc["shape"])
        return cls(doc["origin"], doc["spacing"], vals,
                   doc.get("support_radius"))

    def save_binary(self, path):
        header = json.dumps({
            "dim": self.dim,
            "origin": list(self.origin),
            "spacing": list(self.spacing),
            "shape": list(self.values.shape),
            "support_radius": list(self.support_radius),
        }).encode()
        with open(path, "wb") as fh:
            fh.write(len(header).to_bytes(8, "little"))
            fh.write(header)
            fh.write(np.ascontiguousarray(self.values,
                                          dtype=np.complex128).tobytes())

    @classmethod
    def load_binary(cls, path):
        with open(path, "rb") as fh:
            hlen = int.from_bytes(fh.read(8), "little")
            doc = json.loads(fh.read(hlen).decode())
            raw = fh.read()
        vals = np.frombuffer(raw, dtype=np.complex128).reshape(doc["shape"])
        return cls(doc["origin"], doc["spacing"], vals.copy(),
                   doc["support_radius"])


def trilinear(values, origin, spacing, x, y, z):
    """Trilinear interpolation with zero extension outside the grid.

    values: 3D complex array; x, y, z: arrays of equal shape.
    """
    u = (np.asarray(x) - origin[0]) / spacing[0]
    v = (np.asarray(y) - origin[1]) / spacing[1]
    w = (np.asarray(z) - origin[2]) / spacing[2]
    n0, n1, n2 = values.shape
    i = np.floor(u).astype(np.int64)
    j = np.floor(v).astype(np.int64)
    k = np.floor(w).astype(np.int64)
    fu, fv, fw = u - i, v - j, w - k
    out = np.zeros(np.broadcast(u, v, w).shape, dtype=complex)
    inside = ((i >= 0) & (i < n0 - 1) & (j >= 0) & (j < n1 - 1)
              & (k >= 0) & (k < n2 - 1))
    ii, jj, kk = i[inside], j[inside], k[inside]
    a, b, c = fu[inside], fv[inside], fw[inside]
    res = np.zeros(ii.shape, dtype=complex)
    for di in (0, 1):
        for dj in (0, 1):
            for dk in (0, 1):
                wgt = ((a if di else 1 - a)
                       * (b if dj else 1 - b)
                       * (c if dk else 1 - c))
                res += wgt * values[ii + di, jj + dj, kk + dk]
    out[inside] = res
    return out
