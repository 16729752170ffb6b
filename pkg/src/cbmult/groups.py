"""Coordinate arithmetic for two nilpotent matrix groups, the twisting
maps gamma and gamma', dilation orbits, and group convolution.

Both groups live inside SL(n, R) as unipotent upper-triangular matrices;
elements are kept in polarized coordinates and every law here is checked
against plain matrix arithmetic in the test suite.  The 3-dimensional
group is the familiar one with multiplication

    (x, y, z)(x', y', z') = (x+x', y+y', z+z' + (xy' - x'y)/2),

the 4-dimensional one extends it by a second central-like slot w whose
cocycle was read off from the 4x4 matrix product.
"""
from dataclasses import dataclass

import numpy as np

from ._accel import hot
from .errors import DomainError, ResourceError
from .grid import GridFunction, trilinear

_CONV_MAX = 24


def _finite(*vals):
    return all(np.isfinite(v) for v in vals)


@dataclass(frozen=True)
class Heis3Element:
    x: float
    y: float
    z: float

    def __post_init__(self):
        if not _finite(self.x, self.y, self.z):
            raise DomainError("coordinates must be finite")

    @classmethod
    def identity(cls):
        return cls(0.0, 0.0, 0.0)

    def to_matrix(self):
        x, y, z = self.x, self.y, self.z
        return np.array([
            [1.0, x, z + 0.5 * x * y],
            [0.0, 1.0, y],
            [0.0, 0.0, 1.0],
        ])

    @classmethod
    def from_matrix(cls, m):
        m = np.asarray(m, dtype=float)
        if m.shape != (3, 3):
            raise DomainError("expected a 3x3 matrix")
        lower = np.tril(m, -1)
        if np.abs(lower).max() > 1e-12 or np.abs(np.diag(m) - 1.0).max() > 1e-12:
            raise DomainError("expected unit upper-triangular")
        x, y = m[0, 1], m[1, 2]
        return cls(x, y, m[0, 2] - 0.5 * x * y)


@dataclass(frozen=True)
class Dix4Element:
    x: float
    y: float
    z: float
    w: float

    def __post_init__(self):
        if not _finite(self.x, self.y, self.z, self.w):
            raise DomainError("coordinates must be finite")

    @classmethod
    def identity(cls):
        return cls(0.0, 0.0, 0.0, 0.0)

    def to_matrix(self):
        x, y, z, w = self.x, self.y, self.z, self.w
        return np.array([
            [1.0, -y, z - 0.5 * x * y, w],
            [0.0, 1.0, x, z + 0.5 * x * y],
            [0.0, 0.0, 1.0, y],
            [0.0, 0.0, 0.0, 1.0],
        ])

    @classmethod
    def from_matrix(cls, m):
        m = np.asarray(m, dtype=float)
        if m.shape != (4, 4):
            raise DomainError("expected a 4x4 matrix")
        lower = np.tril(m, -1)
        if np.abs(lower).max() > 1e-12 or np.abs(np.diag(m) - 1.0).max() > 1e-12:
            raise DomainError("expected unit upper-triangular")
        x, y, w = m[1, 2], m[2, 3], m[0, 3]
        z = m[1, 3] - 0.5 * x * y
        if abs(m[0, 1] + y) > 1e-12 or abs(m[0, 2] - (z - 0.5 * x * y)) > 1e-12:
            raise DomainError("matrix is not in the embedded group")
        return cls(x, y, z, w)


def heis3_mul(p, q):
    return Heis3Element(
        p.x + q.x,
        p.y + q.y,
        p.z + q.z + 0.5 * (p.x * q.y - q.x * p.y),
    )


def heis3_inv(p):
    return Heis3Element(-p.x, -p.y, -p.z)


def dix4_mul(p, q):
    """Group law of the 4-dimensional group; the w-cocycle is the one
    forced by the matrix embedding (see to_matrix)."""
    return Dix4Element(
        p.x + q.x,
        p.y + q.y,
        p.z + q.z + 0.5 * (p.x * q.y - q.x * p.y),
        p.w + q.w + p.z * q.y - p.y * q.z
        - 0.5 * p.y * q.y * (p.x + q.x),
    )


def dix4_inv(p):
    return Dix4Element(-p.x, -p.y, -p.z, -p.w)


def _gamma_coords(x, y, z):
    s = np.sqrt(1.0 + 0.25 * x * x)
    return -x, -z / s, y * s


def gamma(p):
    """The order-4 twisting diffeomorphism; gamma^2 = (x, -y, -z)."""
    gx, gy, gz = _gamma_coords(p.x, p.y, p.z)
    return Heis3Element(gx, gy, gz)


def gamma_prime(p):
    """Same twist on the 4-dimensional group; the w slot is untouched."""
    gx, gy, gz = _gamma_coords(p.x, p.y, p.z)
    return Dix4Element(gx, gy, gz, p.w)


def _rot_block(x):
    s = np.sqrt(1.0 + 0.25 * x * x)
    u = (1.0 / s) * np.array([[0.5 * x, 1.0], [-1.0, 0.5 * x]])
    return u, -u


def gamma_conjugation_residual(p):
    """Max-abs entrywise defect of the identity U n(p) V = n(gamma p),
    where U, V carry the rotation-like blocks u, -u on rows 0..1."""
    u, v = _rot_block(p.x)
    big_u = np.eye(3)
    big_u[:2, :2] = u
    big_v = np.eye(3)
    big_v[:2, :2] = v
    lhs = big_u @ p.to_matrix() @ big_v
    return float(np.abs(lhs - gamma(p).to_matrix()).max())


def gamma_prime_conjugation_residual(p):
    """4x4 analogue with the blocks on rows 1..2."""
    u, v = _rot_block(p.x)
    big_u = np.eye(4)
    big_u[1:3, 1:3] = u
    big_v = np.eye(4)
    big_v[1:3, 1:3] = v
    lhs = big_u @ p.to_matrix() @ big_v
    return float(np.abs(lhs - gamma_prime(p).to_matrix()).max())


def gamma_symmetrize(f):
    """Average a function over the orbit of gamma, yielding a
    gamma-invariant function.

    f is a callable (x, y, z) -> value (scalar or elementwise on arrays)
    or a 3D GridFunction, in which case trilinear sampling is used and
    invariance holds up to interpolation error.  Returns a callable.
    """
    if isinstance(f, GridFunction):
        if f.dim != 3:
            raise DomainError("gamma_symmetrize needs a 3D grid")
        base = lambda x, y, z: trilinear(f.values, f.origin, f.spacing,
                                         x, y, z)
    else:
        base = f

    def symmetrized(x, y, z):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        z = np.asarray(z, dtype=float)
        total = base(x, y, z)
        cx, cy, cz = x, y, z
        for _ in range(3):
            cx, cy, cz = _gamma_coords(cx, cy, cz)
            total = total + base(cx, cy, cz)
        return total / 4.0

    return symmetrized


def theta_action(y, v):
    """theta_y on (x, z, w) triples: conjugation by the y-axis element
    of the 4-dimensional group, restricted to the slice y = 0."""
    x, z, w = v
    return (x, z - y * x, w - 2.0 * y * z + y * y * x)


def theta_dual(y, c):
    s, u, v = c
    return (s - y * u + y * y * v, u - 2.0 * y * v, v)


@dataclass(frozen=True)
class OrbitClass:
    """Orbit of a point under the dual theta-flow.

    kind is "Parabola" (v != 0, with height a = v and vertex abscissa
    b = s - u^2/(4v)), "Line" (v = 0, u != 0, the line is determined by
    u alone) or "Point" (u = v = 0).  s, u, v keep the classified point.
    """
    kind: str
    s: float
    u: float
    v: float
    a: float = None
    b: float = None

    def same_orbit(self, other, tol=1e-9):
        if self.kind != other.kind:
            return False
        if self.kind == "Parabola":
            return (abs(self.a - other.a) <= tol
                    and abs(self.b - other.b) <= tol)
        if self.kind == "Line":
            return abs(self.u - other.u) <= tol
        return abs(self.s - other.s) <= tol


def classify_orbit(s, u, v):
    if not _finite(s, u, v):
        raise DomainError("coordinates must be finite")
    s, u, v = float(s), float(u), float(v)
    if v != 0.0:
        return OrbitClass("Parabola", s, u, v, a=v, b=s - u * u / (4.0 * v))
    if u != 0.0:
        return OrbitClass("Line", s, u, v)
    return OrbitClass("Point", s, u, v)


def heis3_convolution(f, g):
    """Group convolution f * g~ with g~(n) = conj(g(n^-1)), so that the
    result is the positive-definite-type function <lambda(.)f, g> when
    f = g.  Off-grid arguments of g are filled by trilinear
    interpolation with zero extension; the m-sum carries f's cell
    volume.  Cost is O(N^6), hence the hard size limit.
    """
    if not isinstance(f, GridFunction) or not isinstance(g, GridFunction):
        raise DomainError("heis3_convolution expects GridFunctions")
    if f.dim != 3 or g.dim != 3:
        raise DomainError("heis3_convolution needs 3D grids")
    if max(f.values.shape) > _CONV_MAX or max(g.values.shape) > _CONV_MAX:
        raise ResourceError(
            f"convolution grids are limited to {_CONV_MAX}^3 cells")
    out = hot.heis3_conv_loop(
        np.ascontiguousarray(f.values, dtype=np.complex128),
        np.ascontiguousarray(g.values, dtype=np.complex128),
        f.origin[0], f.origin[1], f.origin[2],
        f.spacing[0], f.spacing[1], f.spacing[2],
        g.origin[0], g.origin[1], g.origin[2],
        g.spacing[0], g.spacing[1], g.spacing[2])
    out *= f.cell_volume
    return GridFunction._raw(f.origin, f.spacing, out,
                             support_radius=f.support_radius)
