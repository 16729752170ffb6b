"""Certified Schur multiplier norms, singular-kernel checks on nilpotent
groups, and exact lattice induction identities, with a report-emitting CLI.

The public surface re-exports the stable names; module paths underneath
are implementation detail and may move.
"""

from .errors import (CbmultError, ConfigurationError, ConvergenceError,
                     DomainError, ResourceError)
from .report import Report
from .grid import GridFunction, trilinear
from .linalg import operator_norm
from .bessel import bessel_j0, bessel_j0_array
from .hilbert import discrete_hilbert, hilbert_matrix
from .schur import (SchurCertificate, schur_norm, schur_norm_lower,
                    schur_product, verify_certificate)
from .schur_oracle import oracle_bracket
from .groups import (Dix4Element, Heis3Element, OrbitClass, classify_orbit,
                     dix4_inv, dix4_mul, gamma, gamma_conjugation_residual,
                     gamma_prime, gamma_prime_conjugation_residual,
                     gamma_symmetrize, heis3_convolution, heis3_inv,
                     heis3_mul, theta_action, theta_dual)
from .multiplier import (SampledMultiplier, a_norm_abelian, a_norm_upper_conv,
                         generate_sample_sets, herz_schur_matrix,
                         load_multiplier_spec, m0a_lower_bound,
                         make_multiplier)
from .pvcore import (default_ladder, extrapolate, raw_row, rung_values,
                     subtracted_row, validate_ladder, windowed_row)
from .pv import pv_integral_1d, pv_integral_richardson, richardson_zero
from .fubini import fubini_defect
from .khat import lemma_c_khat, lemma_c_khat_numeric
from .kernels import (KernelSpec, commutator_kernel_residual,
                      indicator_kernel, kernel_operator_norm, kernel_sl3,
                      kernel_sp2)
from .pairing import d_pairing, lemma_e_pair
from .blowup import (blowup_bound, blowup_curve, reference_bound,
                     smooth_plateau, write_curve_csv)
from .repcheck import rep_convention_check
from .lattice import (cell_average, check_formula_p20, check_lemma21_norm,
                      decompose, gram_lift, induce, norm_a_z, phi_from_json,
                      phi_to_json, tent)
from .matrixio import load_matrix, save_matrix_json
from .claims import run_claim, run_suite

__version__ = "0.1.0"

import types as _types

__all__ = sorted(
    name for name, obj in list(globals().items())
    if not name.startswith("_") and not isinstance(obj, _types.ModuleType))
