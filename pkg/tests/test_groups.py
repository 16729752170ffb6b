import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cbmult.errors import DomainError, ResourceError
from cbmult.grid import GridFunction
from cbmult.groups import (Dix4Element, Heis3Element, classify_orbit,
                           dix4_inv, dix4_mul, gamma,
                           gamma_conjugation_residual, gamma_prime,
                           gamma_prime_conjugation_residual,
                           gamma_symmetrize, heis3_convolution, heis3_inv,
                           heis3_mul, theta_action, theta_dual)

coord = st.floats(-5.0, 5.0)


def test_heis3_law_matches_matrix_model():
    rng = np.random.default_rng(0)
    for _ in range(200):
        p = Heis3Element(*rng.uniform(-4, 4, 3))
        q = Heis3Element(*rng.uniform(-4, 4, 3))
        lhs = p.to_matrix() @ q.to_matrix()
        rhs = heis3_mul(p, q).to_matrix()
        assert np.abs(lhs - rhs).max() < 1e-12


def test_dix4_law_matches_matrix_model():
    rng = np.random.default_rng(1)
    for _ in range(200):
        p = Dix4Element(*rng.uniform(-4, 4, 4))
        q = Dix4Element(*rng.uniform(-4, 4, 4))
        lhs = p.to_matrix() @ q.to_matrix()
        rhs = dix4_mul(p, q).to_matrix()
        assert np.abs(lhs - rhs).max() < 1e-12


def test_inverses():
    p = Heis3Element(1.5, -2.0, 0.7)
    e = heis3_mul(p, heis3_inv(p))
    assert (e.x, e.y, e.z) == (0.0, 0.0, 0.0)
    q = Dix4Element(1.5, -2.0, 0.7, 3.0)
    e4 = dix4_mul(q, dix4_inv(q))
    assert (e4.x, e4.y, e4.z, e4.w) == (0.0, 0.0, 0.0, 0.0)


@settings(max_examples=40, deadline=None)
@given(coord, coord, coord, coord, coord, coord, coord, coord, coord)
def test_heis3_associative(ax, ay, az, bx, by, bz, cx, cy, cz):
    a, b, c = Heis3Element(ax, ay, az), Heis3Element(bx, by, bz), \
        Heis3Element(cx, cy, cz)
    lhs = heis3_mul(heis3_mul(a, b), c)
    rhs = heis3_mul(a, heis3_mul(b, c))
    assert abs(lhs.z - rhs.z) < 1e-10
    assert abs(lhs.x - rhs.x) < 1e-12 and abs(lhs.y - rhs.y) < 1e-12


def test_matrix_round_trip():
    p = Heis3Element(0.3, -1.2, 2.5)
    back = Heis3Element.from_matrix(p.to_matrix())
    assert np.allclose((back.x, back.y, back.z), (0.3, -1.2, 2.5))
    q = Dix4Element(0.3, -1.2, 2.5, -0.4)
    back4 = Dix4Element.from_matrix(q.to_matrix())
    assert np.allclose((back4.x, back4.y, back4.z, back4.w),
                       (0.3, -1.2, 2.5, -0.4))


def test_twist_worked_example():
    g = gamma(Heis3Element(2.0, 1.0, 1.0))
    assert g.x == pytest.approx(-2.0)
    assert g.y == pytest.approx(-1.0 / np.sqrt(2.0))
    assert g.z == pytest.approx(np.sqrt(2.0))


def test_twist_fixes_y_axis_rotation():
    # at x = 0 the map is the quarter turn (0, y, z) -> (0, -z, y)
    g = gamma(Heis3Element(0.0, 2.0, 3.0))
    assert (g.x, g.y, g.z) == (0.0, -3.0, 2.0)


def test_twist_has_order_four():
    p = Heis3Element(1.3, -0.4, 2.2)
    g2 = gamma(gamma(p))
    assert (g2.x, g2.y, g2.z) == pytest.approx((p.x, -p.y, -p.z))
    g4 = gamma(gamma(g2))
    assert (g4.x, g4.y, g4.z) == pytest.approx((p.x, p.y, p.z))


def test_conjugation_identity_random():
    rng = np.random.default_rng(2)
    worst3 = max(gamma_conjugation_residual(Heis3Element(*c))
                 for c in rng.uniform(-5, 5, size=(300, 3)))
    worst4 = max(gamma_prime_conjugation_residual(Dix4Element(*c))
                 for c in rng.uniform(-5, 5, size=(300, 4)))
    assert worst3 < 1e-12
    assert worst4 < 1e-12


def test_prime_twist_leaves_w_alone():
    rng = np.random.default_rng(3)
    for c in rng.uniform(-5, 5, size=(50, 4)):
        assert gamma_prime(Dix4Element(*c)).w == c[3]


def test_symmetrized_function_is_invariant():
    f = lambda x, y, z: np.exp(-x**2 - 0.5 * y**2 - 0.3 * z**2)
    sym = gamma_symmetrize(f)
    rng = np.random.default_rng(4)
    pts = rng.uniform(-2, 2, size=(100, 3))
    for x, y, z in pts:
        g = gamma(Heis3Element(x, y, z))
        assert abs(sym(x, y, z) - sym(g.x, g.y, g.z)) < 1e-12


@settings(max_examples=40, deadline=None)
@given(coord, coord, coord, coord, coord)
def test_theta_is_a_flow(y, u, x, z, w):
    one = theta_action(y, theta_action(u, (x, z, w)))
    two = theta_action(y + u, (x, z, w))
    assert np.allclose(one, two, atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(coord, coord, coord, coord, coord, coord, coord)
def test_theta_duality_pairing(y, x, z, w, s, u, v):
    lhs = sum(a * b for a, b in zip(theta_action(y, (x, z, w)), (s, u, v)))
    rhs = sum(a * b for a, b in zip((x, z, w), theta_dual(y, (s, u, v))))
    assert abs(lhs - rhs) < 1e-8


def test_orbit_kinds():
    assert classify_orbit(1.0, 2.0, 3.0).kind == "Parabola"
    assert classify_orbit(1.0, 2.0, 0.0).kind == "Line"
    assert classify_orbit(1.0, 0.0, 0.0).kind == "Point"


def test_orbit_invariant_under_dual_flow():
    rng = np.random.default_rng(5)
    for _ in range(100):
        c = tuple(rng.uniform(-4, 4, 3))
        y = float(rng.uniform(-3, 3))
        assert classify_orbit(*c).same_orbit(
            classify_orbit(*theta_dual(y, c)), tol=1e-8)


def test_orbit_separates_distinct_parabolas():
    a = classify_orbit(0.0, 0.0, 1.0)
    b = classify_orbit(1.0, 0.0, 1.0)
    assert not a.same_orbit(b)


def _column_grid(u):
    """5^3 grid, spacing 1, nodes -2..2; u lives on the central z-column."""
    vals = np.zeros((5, 5, 5), dtype=complex)
    vals[2, 2, :] = u
    return GridFunction((-2.0, -2.0, -2.0), (1.0, 1.0, 1.0), vals)


def test_convolution_abelian_column_oracle():
    # data on the central column stays abelian: the twist vanishes, so
    # the group convolution reduces to a 1D cross-correlation times the
    # cell volume
    u = np.array([0.0, 1.0, -2.0, 0.5, 0.0])
    v = np.array([0.0, 0.5, 1.0, -1.0, 0.0])
    f = _column_grid(u)
    g = _column_grid(v)
    conv = heis3_convolution(f, g)
    zs = np.arange(-2, 3)
    for iz, nz in enumerate(zs):
        expected = sum(u[im] * np.conj(v[im2])
                       for im, mz in enumerate(zs)
                       for im2, m2 in enumerate(zs) if m2 == mz - nz)
        assert conv.values[2, 2, iz] == pytest.approx(expected, abs=1e-12)
    # off-column outputs vanish
    mask = np.ones((5, 5, 5), dtype=bool)
    mask[2, 2, :] = False
    assert np.abs(conv.values[mask]).max() < 1e-12


def test_convolution_volume_factor():
    u = np.array([0.0, 1.0, 1.0, 1.0, 0.0])
    f1 = _column_grid(u)
    conv1 = heis3_convolution(f1, f1)
    vals = np.zeros((5, 5, 5), dtype=complex)
    vals[2, 2, :] = u
    f2 = GridFunction((-1.0, -1.0, -1.0), (0.5, 0.5, 0.5), vals)
    conv2 = heis3_convolution(f2, f2)
    ratio = conv2.values[2, 2, 2] / conv1.values[2, 2, 2]
    assert ratio == pytest.approx(0.125)


def test_convolution_size_cap():
    big = GridFunction._raw((0, 0, 0), (1, 1, 1),
                            np.zeros((30, 30, 30), dtype=complex))
    with pytest.raises(ResourceError):
        heis3_convolution(big, big)


def test_convolution_type_checks():
    with pytest.raises(DomainError):
        heis3_convolution(np.zeros((4, 4, 4)), np.zeros((4, 4, 4)))
