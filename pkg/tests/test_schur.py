import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cbmult.schur import (schur_norm, schur_norm_lower, schur_product,
                          verify_certificate)
from cbmult.schur_oracle import oracle_bracket

TOL = 1e-6


def test_schur_product_entrywise():
    a = np.array([[1, 2], [3, 4]], dtype=float)
    b = np.array([[5, 6], [7, 8]], dtype=float)
    assert np.array_equal(schur_product(a, b), a * b)


def test_jordan_block_norm_closed_form():
    # the 2x2 upper-triangular all-ones pattern has norm 2/sqrt(3)
    a = np.array([[1.0, 1.0], [0.0, 1.0]])
    val, cert = schur_norm(a, tol=TOL)
    assert val == pytest.approx(2.0 / np.sqrt(3.0), abs=5e-6)
    assert verify_certificate(a, cert).passed


def test_ones_matrix_norm_one():
    a = np.ones((3, 3))
    val, cert = schur_norm(a, tol=TOL)
    assert val == pytest.approx(1.0, abs=5e-6)
    assert verify_certificate(a, cert).passed


def test_psd_matrix_norm_is_max_diagonal():
    rng = np.random.default_rng(0)
    for n in (2, 5, 9):
        b = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        a = b @ b.conj().T
        val, cert = schur_norm(a, tol=TOL)
        assert val == pytest.approx(float(np.real(np.diag(a)).max()),
                                    abs=5e-6)
        assert verify_certificate(a, cert).passed


def test_diagonal_matrix_norm():
    a = np.diag([1.0, -3.0, 2.0])
    val, _ = schur_norm(a, tol=TOL)
    assert val == pytest.approx(3.0, abs=5e-6)


def test_norm_dominates_entries():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(4, 4))
    val, _ = schur_norm(a, tol=TOL)
    assert val >= np.abs(a).max() - 5e-6


def test_engine_inside_oracle_bracket():
    rng = np.random.default_rng(2)
    for n in (2, 2, 3):
        a = rng.normal(size=(n, n))
        val, _ = schur_norm(a, tol=TOL)
        lo, hi = oracle_bracket(a, seed=5)
        assert lo - 1e-3 <= val <= hi + 1e-3


def test_certificate_tamper_detected():
    a = np.array([[1.0, 1.0], [0.0, 1.0]])
    val, cert = schur_norm(a, tol=TOL)
    cert.d[0, 0] += 1.0  # breaks the diagonal bound
    assert not verify_certificate(a, cert).passed


def test_probe_lower_bound_consistent():
    a = np.array([[1.0, 1.0], [0.0, 1.0]])
    val, _ = schur_norm(a, tol=TOL)
    lo = schur_norm_lower(a, trials=200, seed=3)
    assert lo <= val + 5e-6
    assert lo > 1.0  # better than the trivial entry bound


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000), st.floats(0.25, 4.0))
def test_homogeneity(seed, lam):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(3, 3))
    v1, _ = schur_norm(a, tol=TOL)
    v2, _ = schur_norm(lam * a, tol=TOL)
    assert v2 == pytest.approx(lam * v1, rel=2e-4, abs=2e-5)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000))
def test_principal_submatrix_monotone(seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(4, 4))
    small, _ = schur_norm(a[:3, :3], tol=TOL)
    big, _ = schur_norm(a, tol=TOL)
    assert small <= big + 5e-6
