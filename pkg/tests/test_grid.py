import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cbmult.errors import DomainError
from cbmult.grid import GridFunction, trilinear


def gauss2(y, z):
    return np.exp(-(y**2 + z**2))


def test_centered_offset_nodes_avoid_axes():
    g = GridFunction.centered(gauss2, 4.0, 64, dim=2)
    for ax in range(2):
        nodes = g.axis(ax)
        assert np.abs(nodes).min() > 0.4 * g.spacing[ax]
        assert abs(nodes[0] + nodes[-1]) < 1e-12


def test_centered_offset_cells_tile_the_box():
    g = GridFunction.centered(gauss2, 4.0, 32, dim=2)
    h = g.spacing[0]
    nodes = g.axis(0)
    assert nodes[0] - h / 2 == pytest.approx(-4.0)
    assert nodes[-1] + h / 2 == pytest.approx(4.0)
    assert g.cell_volume == pytest.approx(h * h)


def test_boundary_layer_must_vanish():
    vals = np.ones((8, 8))
    with pytest.raises(DomainError):
        GridFunction((0.0, 0.0), (1.0, 1.0), vals)
    # zeroing the outer layer fixes it
    vals[0, :] = vals[-1, :] = vals[:, 0] = vals[:, -1] = 0.0
    GridFunction((0.0, 0.0), (1.0, 1.0), vals)


def test_raw_bypasses_boundary_check():
    vals = np.ones((4, 4))
    g = GridFunction._raw((0.0, 0.0), (1.0, 1.0), vals)
    assert g.values.shape == (4, 4)


def test_sample_zeroes_boundary():
    g = GridFunction.sample(lambda x: np.ones_like(x), (0.0,), (1.0,), (9,))
    assert g.values[0] == 0.0 and g.values[-1] == 0.0
    assert np.all(g.values[1:-1] == 1.0)


def test_norm_l2_matches_direct_sum():
    g = GridFunction.centered(gauss2, 5.0, 40, dim=2)
    direct = np.sqrt(np.sum(np.abs(g.values) ** 2) * g.cell_volume)
    assert g.norm_l2() == pytest.approx(direct)


def test_trilinear_exact_on_nodes():
    rng = np.random.default_rng(0)
    vals = rng.normal(size=(6, 7, 8)) + 1j * rng.normal(size=(6, 7, 8))
    # interior-zero padding not needed for raw interpolation
    origin = (-1.0, 0.0, 2.0)
    spacing = (0.5, 0.25, 1.0)
    xs = origin[0] + spacing[0] * np.arange(5)
    ys = origin[1] + spacing[1] * np.arange(6)
    zs = origin[2] + spacing[2] * np.arange(7)
    gx, gy, gz = np.meshgrid(xs, ys, zs, indexing="ij")
    out = trilinear(vals, origin, spacing, gx, gy, gz)
    assert np.abs(out - vals[:5, :6, :7]).max() < 1e-12


def test_trilinear_zero_extension():
    vals = np.ones((4, 4, 4))
    out = trilinear(vals, (0.0, 0.0, 0.0), (1.0, 1.0, 1.0),
                    np.array([10.0]), np.array([0.5]), np.array([0.5]))
    assert out[0] == 0.0


def test_trilinear_linear_exactness():
    # interpolation reproduces affine functions inside the grid
    f = lambda x, y, z: 2.0 * x - y + 0.5 * z + 1.0
    origin = (0.0, 0.0, 0.0)
    spacing = (0.5, 0.5, 0.5)
    ax = np.arange(8) * 0.5
    gx, gy, gz = np.meshgrid(ax, ax, ax, indexing="ij")
    vals = f(gx, gy, gz)
    pts = np.random.default_rng(1).uniform(0.3, 3.0, size=(20, 3))
    out = trilinear(vals, origin, spacing, pts[:, 0], pts[:, 1], pts[:, 2])
    assert np.abs(out - f(pts[:, 0], pts[:, 1], pts[:, 2])).max() < 1e-12


def test_json_round_trip(tmp_path):
    g = GridFunction.centered(gauss2, 3.0, 16, dim=2)
    path = tmp_path / "g.json"
    g.save_json(path)
    back = GridFunction.load_json(path)
    assert np.array_equal(back.values, g.values)
    assert back.origin == g.origin and back.spacing == g.spacing


def test_binary_round_trip_bit_exact(tmp_path):
    rng = np.random.default_rng(2)
    vals = rng.normal(size=(5, 5, 5)) + 1j * rng.normal(size=(5, 5, 5))
    vals[0] = vals[-1] = 0.0
    vals[:, 0] = vals[:, -1] = 0.0
    vals[:, :, 0] = vals[:, :, -1] = 0.0
    g = GridFunction((0, 0, 0), (1, 1, 1), vals)
    path = tmp_path / "g.bin"
    g.save_binary(path)
    back = GridFunction.load_binary(path)
    assert np.array_equal(back.values, g.values)


@settings(max_examples=25, deadline=None)
@given(n=st.integers(8, 40), half=st.floats(1.0, 10.0))
def test_offset_axes_symmetric_property(n, half):
    g = GridFunction.centered(lambda y, z: 0.0 * y * z, half, n, dim=2)
    nodes = g.axis(0)
    assert abs(nodes[0] + nodes[-1]) < 1e-9 * g.spacing[0]
    assert np.abs(np.diff(nodes) - g.spacing[0]).max() < 1e-12
