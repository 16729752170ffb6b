import numpy as np
import pytest

from cbmult.errors import ConfigurationError, DomainError
from cbmult.grid import GridFunction
from cbmult.groups import Dix4Element, Heis3Element
from cbmult.multiplier import (SampledMultiplier, a_norm_abelian,
                               a_norm_upper_conv, generate_sample_sets,
                               group_inv, group_mul, herz_schur_matrix,
                               load_multiplier_spec, m0a_lower_bound,
                               make_multiplier)
from cbmult.schur import schur_norm


def test_group_ops_scalars_and_tuples():
    assert group_mul(2, 3) == 5
    assert group_inv(2) == -2
    assert group_mul((1, 2), (3, -1)) == (4, 1)
    assert group_inv((1, 2)) == (-1, -2)


def test_herz_schur_matrix_translation_structure():
    els = [0, 1, 3]
    phi = make_multiplier("gaussian", sigma=1.0)
    m = herz_schur_matrix(els, phi)
    # M[i, j] = phi(x_i - x_j) on an abelian group
    for i, xi in enumerate(els):
        for j, xj in enumerate(els):
            assert m[i, j] == pytest.approx(phi(xi - xj), abs=1e-15)


def test_positive_definite_multiplier_gives_psd_sample_matrix():
    phi = make_multiplier("gaussian", sigma=1.3)
    m = herz_schur_matrix([-2, 0, 1, 4, 5], phi)
    w = np.linalg.eigvalsh(m)
    assert w.min() > -1e-12


def test_herz_schur_matrix_rejects_bad_inputs():
    with pytest.raises(DomainError):
        herz_schur_matrix([], lambda x: 1.0)

    def broken(x):
        raise RuntimeError("boom")

    with pytest.raises(DomainError):
        herz_schur_matrix([0, 1], broken)


def test_m0a_bound_is_one_for_normalized_pd_function():
    sm = load_multiplier_spec({"group": "Z", "kind": "gaussian",
                               "sigma": 1.0}, n_sets=5, seed=3)
    assert m0a_lower_bound(sm) == pytest.approx(1.0, abs=1e-6)


def test_m0a_bound_needs_sample_sets():
    sm = SampledMultiplier("Z", lambda x: 1.0, [])
    with pytest.raises(DomainError):
        m0a_lower_bound(sm)


def test_sampled_multiplier_rejects_nonfinite_values():
    with pytest.raises(DomainError):
        SampledMultiplier("Z", lambda x: float("inf") if x == 1 else 1.0,
                          [[0, 1]])


def test_m0a_bound_monotone_under_set_growth():
    table = {0: 1.0, 1: 0.9, -1: 0.9, 2: -0.5, -2: -0.5}
    phi = lambda n: table.get(int(n), 0.0)
    small, _ = schur_norm(herz_schur_matrix([0, 1, 2], phi))
    large, _ = schur_norm(herz_schur_matrix([0, 1, 2, 4], phi))
    assert small <= large + 5e-6


def test_a_norm_abelian_anchors():
    # symbol of {+-1: 1/2} is cos(theta); mean |cos| = 2/pi
    assert a_norm_abelian({1: 0.5, -1: 0.5}) == pytest.approx(
        2.0 / np.pi, rel=1e-6)
    assert a_norm_abelian({0: 1.0}) == pytest.approx(1.0, abs=1e-12)
    assert a_norm_abelian({(0, 0): 1.0}) == pytest.approx(1.0, abs=1e-12)
    # |cos| has kinks, so the trapezoid rule is only O(1/points^2) here
    assert a_norm_abelian({(1, 0): 0.5, (-1, 0): 0.5},
                          points=512) == pytest.approx(2.0 / np.pi, rel=1e-4)


def test_a_norm_abelian_rejects_bad_support():
    with pytest.raises(DomainError):
        a_norm_abelian({})
    with pytest.raises(DomainError):
        a_norm_abelian({0: 1.0, (1, 2): 1.0})
    with pytest.raises(DomainError):
        a_norm_abelian({(1, 2, 3): 1.0})
    with pytest.raises(DomainError):
        a_norm_abelian({0: 1.0}, points=1)


def test_a_norm_upper_conv():
    f = GridFunction.centered(lambda x: np.exp(-x * x), 5.0, 64, 1)
    g = GridFunction.centered(lambda x: np.exp(-2 * x * x), 5.0, 64, 1)
    assert a_norm_upper_conv(f, g) == pytest.approx(
        f.norm_l2() * g.norm_l2(), rel=1e-14)
    other = GridFunction.centered(lambda x: np.exp(-x * x), 4.0, 64, 1)
    with pytest.raises(DomainError):
        a_norm_upper_conv(f, other)
    with pytest.raises(DomainError):
        a_norm_upper_conv(f, np.zeros(4))


def test_generate_sample_sets_deterministic_and_typed():
    a = generate_sample_sets("Z", 3, seed=11)
    b = generate_sample_sets("Z", 3, seed=11)
    assert a == b
    assert all(s[0] == 0 for s in a)

    z2 = generate_sample_sets("Z2", 2, seed=0)
    assert z2[0][0] == (0, 0)
    assert all(isinstance(x, tuple) for s in z2 for x in s)

    heis = generate_sample_sets("Heis3", 2, seed=0)
    assert all(isinstance(x, Heis3Element) for s in heis for x in s)
    dix = generate_sample_sets("Dix4", 2, seed=0)
    assert all(isinstance(x, Dix4Element) for s in dix for x in s)

    with pytest.raises(ConfigurationError):
        generate_sample_sets("F2", 1, seed=0)


def test_make_multiplier_kinds():
    g = make_multiplier("gaussian", sigma=2.0)
    assert g(0) == pytest.approx(1.0)
    assert g(2) == pytest.approx(np.exp(-0.5))
    d = make_multiplier("delta")
    assert d(0) == 1.0 and d(3) == 0.0
    assert d(Heis3Element.identity()) == 1.0
    c = make_multiplier("constant", value=2 + 1j)
    assert c(17) == 2 + 1j

    with pytest.raises(ConfigurationError):
        make_multiplier("gaussian", sigma=-1.0)
    with pytest.raises(ConfigurationError):
        make_multiplier("witch-hat")


def test_load_multiplier_spec_validation():
    with pytest.raises(ConfigurationError):
        load_multiplier_spec([1, 2, 3])
    with pytest.raises(ConfigurationError):
        load_multiplier_spec({"group": "Z"})
    sm = load_multiplier_spec({"group": "Z", "kind": "delta"},
                              n_sets=2, seed=5)
    assert len(sm.sample_sets) == 2
    assert sm.group == "Z"
