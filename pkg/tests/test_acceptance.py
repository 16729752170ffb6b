"""End-to-end acceptance checks.

Each test covers one acceptance criterion, pulls what it needs from a
shared cache of claim reports (so no claim runs twice), and prints a
single [PASS]/[FAIL] line naming the criterion.  Run with ``-s`` (or read
the captured output) to see the per-criterion lines.
"""
import subprocess
import sys

import numpy as np

from cbmult.claims import run_claim

SEED = 7
TWO_PI_CUBED = 2.0 * np.pi ** 3

_cache = {}


def _claim(cid):
    if cid not in _cache:
        _cache[cid] = run_claim(cid, seed=SEED)
    return _cache[cid]


def _criterion(num, label, ok):
    verdict = "PASS" if ok else "FAIL"
    print(f"[{verdict}] criterion {num:02d}: {label}")
    assert ok, f"criterion {num:02d} failed: {label}"


def test_criterion_01_iterated_integral_defect():
    rep = _claim("lemma-b")
    ok = (rep.passed
          and rep.inputs["resolution"] == 2048
          and len(rep.computed["defects"]) == 3
          and rep.computed["max_rel_err"] <= 0.02
          and rep.runtime_ms < 3 * 60_000)
    _criterion(1, "iterated-integral defect = pi^2 for three bump widths "
                  f"(max rel err {rep.computed['max_rel_err']:.2e})", ok)


def test_criterion_02_transform_closed_form_and_support():
    rep = _claim("lemma-c")
    ok = (rep.passed
          and rep.computed["max_rel_err"] <= 0.02
          and rep.computed["max_gap_abs"] < 0.05
          and rep.computed["max_swap_gap"] < 1e-3)
    _criterion(2, "transform matches closed form, vanishes inside the "
                  f"cone, order-independent (rel {rep.computed['max_rel_err']:.2e})",
               ok)


def test_criterion_03_conjugation_identities():
    rep_a = _claim("lemma-a")
    rep_f = _claim("lemma-f")
    ok = (rep_a.passed and rep_f.passed
          and rep_a.inputs["points"] == 1000
          and rep_f.inputs["points"] == 1000
          and rep_a.computed["max_conjugation_residual"] < 1e-12
          and rep_f.computed["max_conjugation_residual"] < 1e-12
          and rep_a.runtime_ms < 1000 and rep_f.runtime_ms < 1000)
    _criterion(3, "conjugation identities hold to 1e-12 on 1000 points, "
                  f"under 1 s ({rep_a.runtime_ms:.0f} ms / "
                  f"{rep_f.runtime_ms:.0f} ms)", ok)


def test_criterion_04_commutator_kernel_identities():
    rep_d = _claim("lemma-d")
    rep_g = _claim("lemma-g")
    ok = (rep_d.computed["commutator_residual"] < 1e-12
          and rep_g.computed["commutator_residual"] < 1e-12)
    _criterion(4, "commutator kernel identities exact on 10^4 points in "
                  "both cases", ok)


def test_criterion_05_operator_norm_caps():
    rep = _claim("lemma-d")
    c = rep.computed
    bound_k = np.pi * 1.02
    bound_j = 1.05
    ok = (c["norm_indicator"] <= bound_k
          and c["norm_oscillatory_scaled"] <= bound_j
          and c["norm_indicator_refined"] <= 0.99 * bound_k
          and c["norm_oscillatory_scaled_refined"] <= 0.99 * bound_j)
    _criterion(5, "discretized norms stay under pi*1.02 and 1.05 with "
                  "margin after refinement "
                  f"({c['norm_indicator']:.3f}, "
                  f"{c['norm_oscillatory_scaled']:.3f})", ok)


def test_criterion_06_pairing_bound_for_convolution_inputs():
    rep = _claim("lemma-d")
    ok = (rep.passed
          and rep.computed["pairing_max_abs"] <= TWO_PI_CUBED * 1.05
          and rep.computed["pairing_max_swap_gap"] < 1e-3
          and rep.runtime_ms < 600_000)
    _criterion(6, "pairing bounded by 2 pi^3 for five unit convolution "
                  f"inputs (max {rep.computed['pairing_max_abs']:.2f} vs "
                  f"{TWO_PI_CUBED * 1.05:.2f})", ok)


def test_criterion_07_line_integral_identity():
    rep = _claim("lemma-e")
    res = rep.computed["identity_residuals"]
    ok = len(res) == 3 and max(res) <= 0.05
    _criterion(7, "line-integral identity within 5 percent for three "
                  f"symmetrized bumps (max residual {max(res):.2e})", ok)


def test_criterion_08_lower_bound_curve():
    rep = _claim("lemma-e")
    ok = (rep.computed["curve_max_rel_err"] <= 0.02
          and rep.computed["curve_increasing"]
          and len(rep.computed["curve"]) == 3)
    _criterion(8, "lower-bound curve tracks asinh(R/2)/pi within 2 "
                  "percent and increases strictly", ok)


def test_criterion_09_schur_engine():
    rep = _claim("schur-engine")
    ok = (rep.passed
          and rep.computed["psd_rule_max_err"] <= 1e-6
          and rep.computed["oracle_max_excess"] <= 1e-3
          and rep.computed["certificates_verified"])
    _criterion(9, "engine matches the PSD diagonal rule and the "
                  "completion oracle; certificates verify", ok)


def test_criterion_10_sampling_lower_bound():
    rep = _claim("m0a-sampler")
    ok = (rep.passed
          and rep.computed["pd_err"] <= 1e-6
          and rep.computed["monotonicity_worst_violation"] <= 5e-6)
    _criterion(10, "sampled bound is 1 for the normalized multiplier and "
                   "monotone under set growth", ok)


def test_criterion_11_lattice_identities():
    rep_p = _claim("formula-p20")
    rep_n = _claim("lemma-2-1")
    ok = (rep_p.passed and rep_p.computed["all_exact"]
          and rep_p.inputs["cases"] == 100
          and rep_n.passed and rep_n.computed["all_pass"]
          and rep_n.inputs["cases"] == 50)
    _criterion(11, "cell-average identity exact on 100 cases; extension "
                   "norm inequality holds on 50 cases", ok)


def test_criterion_12_reproducible_suite():
    cmd = [sys.executable, "-m", "cbmult.cli", "suite", "--all",
           "--seed", str(SEED), "--json"]
    first = subprocess.run(cmd, capture_output=True, timeout=1500)
    second = subprocess.run(cmd, capture_output=True, timeout=1500)
    ok = (first.returncode == 0 and second.returncode == 0
          and first.stdout == second.stdout
          and len(first.stdout.strip().splitlines()) == 11)
    _criterion(12, "two seeded suite runs emit byte-identical JSON and "
                   "exit 0", ok)
