import numpy as np
import pytest

from cbmult.errors import ConfigurationError, DomainError
from cbmult.fubini import fubini_defect
from cbmult.grid import GridFunction

PI2 = float(np.pi ** 2)


def _gauss(sigma):
    def f(y, z):
        return np.exp(-(y ** 2 + z ** 2) / (2.0 * sigma * sigma))
    return f


def test_defect_is_pi_squared_times_center_value():
    phi = GridFunction.centered(_gauss(1.0), 6.3, 512, dim=2)
    i_val, j_val, defect = fubini_defect(phi)
    assert defect == pytest.approx(PI2, rel=0.02)
    assert i_val - j_val == defect
    # the defect has a definite orientation
    assert defect > 0


def test_defect_scales_with_amplitude():
    base = GridFunction.centered(_gauss(1.0), 6.3, 384, dim=2)
    scaled = GridFunction._raw(base.origin, base.spacing, 2.5 * base.values,
                               support_radius=base.support_radius)
    _, _, d1 = fubini_defect(base)
    _, _, d2 = fubini_defect(scaled)
    assert d2 == pytest.approx(2.5 * d1, rel=1e-12)


def test_defect_constant_across_bump_widths():
    """Five bump widths, each with its own (non-commensurate) window, all
    reproduce the same defect; the answer depends on the centre value
    only."""
    halves = {0.5: 3.7, 0.8: 5.3, 1.0: 6.4, 1.5: 9.7, 2.0: 13.1}
    defects = []
    for sigma, half in halves.items():
        phi = GridFunction.centered(_gauss(sigma), half, 512, dim=2)
        defects.append(fubini_defect(phi)[2])
    for d in defects:
        assert d == pytest.approx(PI2, rel=0.02)
    spread = (max(defects) - min(defects)) / PI2
    assert spread < 0.04


def test_rejects_node_on_a_pole_line():
    # non-offset odd grid puts a node at the origin, on both pole lines
    phi = GridFunction.centered(_gauss(1.0), 6.0, 257, dim=2, offset=False)
    with pytest.raises(ConfigurationError):
        fubini_defect(phi)


def test_rejects_anisotropic_or_low_dimensional_grids():
    rect = GridFunction.centered(_gauss(1.0), (6.0, 8.0), 128, dim=2)
    with pytest.raises(ConfigurationError):
        fubini_defect(rect)
    line = GridFunction.centered(lambda y: np.exp(-y * y), 6.0, 128, dim=1)
    with pytest.raises(DomainError):
        fubini_defect(line)


def test_ladder_must_fit_the_grid():
    phi = GridFunction.centered(_gauss(1.0), 6.0, 128, dim=2)
    h = phi.spacing[0]
    with pytest.raises(ConfigurationError):
        fubini_defect(phi, ladder=[2.0 * h])
