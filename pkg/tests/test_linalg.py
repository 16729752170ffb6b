import numpy as np
import pytest

from cbmult.linalg import is_hermitian, operator_norm, psd_project


def test_operator_norm_matches_svd_small():
    rng = np.random.default_rng(0)
    m = rng.normal(size=(40, 40)) + 1j * rng.normal(size=(40, 40))
    assert operator_norm(m) == pytest.approx(np.linalg.svd(m, compute_uv=False)[0])


def test_operator_norm_large_path_consistent():
    # above the dense cutoff the iterative path must agree with the SVD
    rng = np.random.default_rng(1)
    m = rng.normal(size=(1600, 1600)) / 40.0
    dense = np.linalg.svd(m, compute_uv=False)[0]
    assert operator_norm(m) == pytest.approx(dense, rel=1e-6)


def test_operator_norm_deterministic():
    rng = np.random.default_rng(2)
    m = rng.normal(size=(1600, 1600))
    assert operator_norm(m) == operator_norm(m.copy())


def test_is_hermitian():
    a = np.array([[1.0, 2.0 + 1j], [2.0 - 1j, 3.0]])
    assert is_hermitian(a)
    assert not is_hermitian(a + np.array([[0, 1e-3], [0, 0]]))


def test_psd_project_idempotent_on_psd():
    rng = np.random.default_rng(3)
    b = rng.normal(size=(6, 6))
    a = b @ b.T
    assert np.abs(psd_project(a) - a).max() < 1e-10


def test_psd_project_clips_negative_part():
    a = np.diag([2.0, -3.0])
    p = psd_project(a)
    assert np.allclose(np.diag(p), [2.0, 0.0])
    w = np.linalg.eigvalsh(p)
    assert w.min() >= -1e-12
