"""Claim registry: one aggregate Report per verifiable claim id.

Each claim function bundles the checks that make up one externally named
verification, runs them at the default (acceptance) settings, and folds the
measurements into a single Report.  The CLI and the test suite both go
through this registry, so the numbers a user sees from ``verify`` are the
numbers the acceptance run is judged on.

Overridable knobs: ``grid`` rescales the claim's main resolution, ``window``
rescales the principal-value exclusion ladder, ``seed`` drives every random
draw.  Claims that use none of a knob simply echo it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import blowup as _blowup
from . import lattice as _lattice
from .errors import DomainError
from .fubini import fubini_defect
from .grid import GridFunction, trilinear
from .groups import (Dix4Element, Heis3Element, classify_orbit, gamma,
                     gamma_conjugation_residual, gamma_prime,
                     gamma_prime_conjugation_residual, gamma_symmetrize,
                     heis3_convolution, theta_action, theta_dual)
from .kernels import (KernelSpec, commutator_kernel_residual, indicator_kernel,
                      kernel_operator_norm, kernel_sl3, kernel_sp2)
from .khat import lemma_c_khat, lemma_c_khat_numeric
from .multiplier import (SampledMultiplier, generate_sample_sets,
                         herz_schur_matrix, m0a_lower_bound, make_multiplier)
from .pairing import d_pairing, lemma_e_pair
from .pvcore import default_ladder
from .report import Report
from .schur import schur_norm, verify_certificate
from .schur_oracle import oracle_bracket

DEFAULT_SEED = 7

TWO_PI_CUBED = 2.0 * np.pi**3


@dataclass
class ClaimOptions:
    grid: int = None
    window: float = None
    seed: int = None

    @property
    def rng_seed(self):
        return DEFAULT_SEED if self.seed is None else int(self.seed)

    def resolution(self, default):
        return default if self.grid is None else int(self.grid)

    def ladder_for(self, spacing):
        scale = 4.0 if self.window is None else float(self.window)
        return default_ladder(spacing, scale=scale)

    def echo(self, **extra):
        doc = {"seed": self.rng_seed}
        if self.grid is not None:
            doc["grid"] = int(self.grid)
        if self.window is not None:
            doc["window"] = float(self.window)
        doc.update(extra)
        return doc


def _finish(report, t0):
    report.runtime_ms = int(round(1000.0 * (time.perf_counter() - t0)))
    return report


def claim_lemma_a(opts):
    """Twisting map on the 3-dimensional group: conjugation identity,
    worked value, and the order-4 structure."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(opts.rng_seed)
    pts = rng.uniform(-5.0, 5.0, size=(1000, 3))
    worst = 0.0
    worst_sq = 0.0
    for x, y, z in pts:
        p = Heis3Element(x, y, z)
        worst = max(worst, gamma_conjugation_residual(p))
        q = gamma(gamma(p))
        worst_sq = max(worst_sq, abs(q.x - x), abs(q.y + y), abs(q.z + z))
    ref = np.array([-2.0, -1.0 / np.sqrt(2.0), np.sqrt(2.0)])
    g = gamma(Heis3Element(2.0, 1.0, 1.0))
    example = float(np.abs(np.array([g.x, g.y, g.z]) - ref).max())
    tol = 1e-12
    passed = worst < tol and worst_sq < 1e-9 and example < tol
    return _finish(Report(
        claim_id="lemma-a",
        inputs=opts.echo(points=1000),
        computed={"max_conjugation_residual": worst,
                  "max_square_residual": worst_sq,
                  "worked_example_residual": example},
        reference={"identity_residual": 0.0, "provenance": "paper"},
        tolerance=tol,
        tolerance_kind="abs",
        passed=bool(passed),
    ), t0)


def claim_lemma_f(opts):
    """Same twist on the 4-dimensional group; the w slot must be inert."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(opts.rng_seed)
    pts = rng.uniform(-5.0, 5.0, size=(1000, 4))
    worst = 0.0
    worst_w = 0.0
    for x, y, z, w in pts:
        p = Dix4Element(x, y, z, w)
        worst = max(worst, gamma_prime_conjugation_residual(p))
        worst_w = max(worst_w, abs(gamma_prime(p).w - w))
    tol = 1e-12
    return _finish(Report(
        claim_id="lemma-f",
        inputs=opts.echo(points=1000),
        computed={"max_conjugation_residual": worst,
                  "max_w_drift": worst_w},
        reference={"identity_residual": 0.0, "provenance": "paper"},
        tolerance=tol,
        tolerance_kind="abs",
        passed=bool(worst < tol and worst_w == 0.0),
    ), t0)


def claim_lemma_b(opts):
    """Iterated-integral defect equals pi^2 phi(0,0) for three bump widths."""
    t0 = time.perf_counter()
    n = opts.resolution(2048)
    target = float(np.pi**2)
    sigmas = (0.5, 1.0, 2.0)
    # Non-dyadic half-width ratios; with power-of-2 ratios the runs would
    # be exact rescalings of one another and agree bit-for-bit.
    halves = {0.5: 6.0, 1.0: 7.0, 2.0: 15.0}
    defects = []
    rels = []
    for sigma in sigmas:
        half = halves[sigma]

        def bump(y, z, s=sigma):
            return np.exp(-(y**2 + z**2) / (2.0 * s * s))

        phi = GridFunction.centered(bump, half, n, dim=2)
        ladder = opts.ladder_for(phi.spacing[0])
        _i, _j, defect = fubini_defect(phi, ladder=ladder)
        defects.append(defect)
        rels.append(abs(defect - target) / target)
    tol = 0.02
    return _finish(Report(
        claim_id="lemma-b",
        inputs=opts.echo(resolution=n, sigmas=list(sigmas)),
        computed={"defects": defects, "max_rel_err": max(rels)},
        reference={"defect": target, "provenance": "paper"},
        tolerance=tol,
        tolerance_kind="rel",
        passed=bool(max(rels) <= tol),
    ), t0)


def claim_lemma_c(opts):
    """Distributional transform against its closed form, plus support-gap
    vanishing and independence of the integration order."""
    t0 = time.perf_counter()
    n = opts.resolution(4096)
    u_vals = (0.5, 1.0, 2.0, 5.0)
    rels = []
    numeric = []
    for u in u_vals:
        ref = lemma_c_khat(0.0, u)
        num = lemma_c_khat_numeric(0.0, u, n=n)
        numeric.append(num)
        rels.append(abs(num - ref) / abs(ref))
    gap_pts = ((1.0, 0.5), (2.0, 1.0), (3.0, 0.0), (5.0, 2.0))
    gap_abs = [abs(lemma_c_khat_numeric(t, u, n=n)) for t, u in gap_pts]
    swaps = []
    for u in u_vals:
        a = lemma_c_khat_numeric(0.0, u, n=n, order="z-first")
        b = lemma_c_khat_numeric(0.0, u, n=n, order="y-first")
        swaps.append(abs(a - b))
    passed = (max(rels) <= 0.02 and max(gap_abs) < 0.05
              and max(swaps) < 1e-3)
    return _finish(Report(
        claim_id="lemma-c",
        inputs=opts.echo(resolution=n, u_values=list(u_vals)),
        computed={"numeric": numeric, "max_rel_err": max(rels),
                  "max_gap_abs": max(gap_abs), "max_swap_gap": max(swaps)},
        reference={"closed_form": [lemma_c_khat(0.0, u) for u in u_vals],
                   "provenance": "paper"},
        tolerance=0.02,
        tolerance_kind="rel",
        passed=bool(passed),
    ), t0)


def _commutator_points(rng, count, case, c):
    """Random off-diagonal points clear of the sign loci."""
    pts = np.empty((count, 2))
    have = 0
    while have < count:
        cand = rng.uniform(-8.0, 8.0, size=(count, 2))
        s, t_ = cand[:, 0], cand[:, 1]
        ok = np.abs(s - t_) > 1e-6
        if case == "SL3":
            ok &= (np.abs(s) > 1e-6) & (np.abs(t_) > 1e-6)
        else:
            ok &= (np.abs(np.abs(s) - c) > 1e-6) & (np.abs(np.abs(t_) - c) > 1e-6)
        good = cand[ok]
        take = min(count - have, good.shape[0])
        pts[have:have + take] = good[:take]
        have += take
    return pts


def _conv_form_phi(rng, grid_n, half_width):
    """Unit-norm random windows and their group convolution f * g~."""

    def window(r):
        centers = r.uniform(-0.6, 0.6, size=(2, 3))
        weights = r.uniform(0.5, 1.5, size=2)

        def f(x, y, z):
            acc = 0.0
            for (cx, cy, cz), w in zip(centers, weights):
                acc = acc + w * np.exp(
                    -((x - cx)**2 + (y - cy)**2 + (z - cz)**2)
                    / (2.0 * 0.35**2))
            return acc

        return f

    gfs = []
    for fn in (window(rng), window(rng)):
        g = GridFunction.centered(fn, half_width, grid_n, dim=3)
        norm = float(np.sqrt(np.sum(np.abs(g.values)**2) * g.cell_volume))
        gfs.append(GridFunction._raw(g.origin, g.spacing, g.values / norm,
                                     support_radius=g.support_radius))
    return heis3_convolution(gfs[0], gfs[1])


def claim_lemma_d(opts):
    """Oscillatory kernel on the line: commutator identity, operator-norm
    bounds with a refinement study, and the pairing bound for
    convolution-form inputs."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(opts.rng_seed)
    spec = KernelSpec(case="SL3", a=1.0)

    comm = commutator_kernel_residual(
        "SL3", None, _commutator_points(rng, 10_000, "SL3", None))

    n = opts.resolution(2048)
    n_fine = int(round(1.25 * n))
    cutoff = 50.0
    k_ind = lambda s, t: indicator_kernel("SL3", None, s, t)
    k_osc = lambda s, t: kernel_sl3(spec, s, t)
    norm_k = kernel_operator_norm(k_ind, n, cutoff)
    norm_j = kernel_operator_norm(k_osc, n, cutoff) / TWO_PI_CUBED
    norm_k_fine = kernel_operator_norm(k_ind, n_fine, cutoff)
    norm_j_fine = kernel_operator_norm(k_osc, n_fine, cutoff) / TWO_PI_CUBED
    bound_k = np.pi * 1.02
    bound_j = 1.05
    # The discrete norms climb to their continuum limits like 1/log^2(n),
    # so the stability statement is about the bounds: refinement must leave
    # at least a 1 percent margin below each bound.
    norms_ok = (norm_k <= bound_k and norm_j <= bound_j
                and norm_k_fine <= 0.99 * bound_k
                and norm_j_fine <= 0.99 * bound_j)

    pair_n = 64
    pair_half = 4.5
    bounds = []
    swaps = []
    for _ in range(5):
        conv = _conv_form_phi(rng, 20, 4.0)
        vals = conv.values

        def sampler(x, y, z, v=vals, o=conv.origin, s=conv.spacing):
            return trilinear(v, o, s, x, y, z)

        phi = GridFunction.centered(sampler, pair_half, pair_n, dim=3)
        ladder = opts.ladder_for(phi.spacing[0])
        d_val = d_pairing(phi, ladder=ladder)
        d_swp = d_pairing(phi, ladder=ladder, swap_xy=True)
        bounds.append(abs(d_val))
        swaps.append(abs(d_val - d_swp))
    pair_ok = max(bounds) <= TWO_PI_CUBED * 1.05 and max(swaps) < 1e-3

    passed = comm < 1e-12 and norms_ok and pair_ok
    return _finish(Report(
        claim_id="lemma-d",
        inputs=opts.echo(resolution=n, cutoff=cutoff, pair_grid=pair_n),
        computed={"commutator_residual": comm,
                  "norm_indicator": norm_k,
                  "norm_indicator_refined": norm_k_fine,
                  "norm_oscillatory_scaled": norm_j,
                  "norm_oscillatory_scaled_refined": norm_j_fine,
                  "pairing_max_abs": max(bounds),
                  "pairing_max_swap_gap": max(swaps)},
        reference={"norm_indicator_bound": bound_k,
                   "norm_oscillatory_bound": bound_j,
                   "pairing_bound": TWO_PI_CUBED * 1.05,
                   "provenance": "paper"},
        tolerance=1e-12,
        tolerance_kind="abs",
        passed=bool(passed),
    ), t0)


def claim_lemma_e(opts):
    """Pairing identity for twist-invariant bumps, and the lower-bound
    curve that diverges with the plateau radius."""
    t0 = time.perf_counter()
    n = opts.resolution(64)
    shapes = ((0.6, 0.8), (1.0, 1.0), (0.8, 1.2))
    residuals = []
    for ax, ar in shapes:

        def bump(x, y, z, a=ax, b=ar):
            return np.exp(-x**2 / (2.0 * a * a)
                          - (y**2 + z**2) / (2.0 * b * b))

        phi = gamma_symmetrize(bump)
        lhs, dval = lemma_e_pair(phi, n=n)
        residuals.append(abs(2.0 * dval - np.pi**2 * lhs)
                         / (abs(2.0 * dval) + 1.0))
    radii = (10.0, 100.0, 1000.0)
    curve = _blowup.blowup_curve(radii)
    refs = [_blowup.reference_bound(r) for r in radii]
    curve_rel = max(abs(v - r) / r for (_, v), r in zip(curve, refs))
    increasing = all(b[1] > a[1] for a, b in zip(curve, curve[1:]))
    passed = max(residuals) <= 0.05 and curve_rel <= 0.02 and increasing
    return _finish(Report(
        claim_id="lemma-e",
        inputs=opts.echo(resolution=n, radii=list(radii)),
        computed={"identity_residuals": residuals,
                  "curve": [v for _, v in curve],
                  "curve_max_rel_err": curve_rel,
                  "curve_increasing": increasing},
        reference={"curve_reference": refs, "provenance": "derived"},
        tolerance=0.05,
        tolerance_kind="rel",
        passed=bool(passed),
    ), t0)


def claim_lemma_g(opts):
    """4-dimensional case: kernel region and commutator identity, the
    degenerate same-sign case, and the dual flow with its orbit types."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(opts.rng_seed)
    spec = KernelSpec(case="SP2", a=1.0, b=-1.0)
    c = spec.c

    comm = commutator_kernel_residual(
        "SP2", c, _commutator_points(rng, 10_000, "SP2", c))

    degen = KernelSpec(case="SP2", a=1.0, b=1.0)
    pts = rng.uniform(-5.0, 5.0, size=(200, 2))
    zero_max = float(np.abs(kernel_sp2(degen, pts[:, 0], pts[:, 1])).max())

    dual_worst = 0.0
    orbit_ok = True
    for _ in range(1000):
        y = float(rng.uniform(-3.0, 3.0))
        v3 = tuple(rng.uniform(-4.0, 4.0, 3))
        c3 = tuple(rng.uniform(-4.0, 4.0, 3))
        moved = theta_action(y, v3)
        dualled = theta_dual(y, c3)
        lhs = sum(a * b for a, b in zip(moved, c3))
        rhs = sum(a * b for a, b in zip(v3, dualled))
        dual_worst = max(dual_worst, abs(lhs - rhs))
        before = classify_orbit(*c3)
        after = classify_orbit(*theta_dual(y, c3))
        if not before.same_orbit(after, tol=1e-6):
            orbit_ok = False
    kinds = {classify_orbit(1.0, 2.0, 3.0).kind,
             classify_orbit(1.0, 2.0, 0.0).kind,
             classify_orbit(1.0, 0.0, 0.0).kind}
    passed = (comm < 1e-12 and zero_max == 0.0 and dual_worst < 1e-9
              and orbit_ok and kinds == {"Parabola", "Line", "Point"})
    return _finish(Report(
        claim_id="lemma-g",
        inputs=opts.echo(points=10_000),
        computed={"commutator_residual": comm,
                  "same_sign_kernel_max": zero_max,
                  "dual_pairing_residual": dual_worst,
                  "orbits_invariant": orbit_ok},
        reference={"identity_residual": 0.0, "provenance": "paper"},
        tolerance=1e-12,
        tolerance_kind="abs",
        passed=bool(passed),
    ), t0)


def claim_formula_p20(opts):
    """Unit-cell averaging identity, exact on random lattice data."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(opts.rng_seed)
    worst = 0.0
    cases = 100
    all_pass = True
    for _ in range(cases):
        d = int(rng.integers(1, 3))
        size = int(rng.integers(1, 6))
        supp = rng.integers(-4, 5, size=(size, d))
        phi = {}
        for row in supp:
            key = int(row[0]) if d == 1 else tuple(int(v) for v in row)
            phi[key] = complex(rng.normal(), rng.normal())
        x = rng.uniform(-8.0, 8.0, size=d)
        y = rng.uniform(-8.0, 8.0, size=d)
        rep = _lattice.check_formula_p20(
            phi, float(x[0]) if d == 1 else x,
            float(y[0]) if d == 1 else y,
            subdivisions=int(rng.integers(1, 4)))
        worst = max(worst, rep.computed["gap"])
        all_pass = all_pass and rep.passed
    example = _lattice.check_formula_p20({0: 1.0}, 0.0, 0.3)
    example_ok = (example.passed
                  and abs(example.computed["induced"] - 0.7) < 1e-12)
    return _finish(Report(
        claim_id="formula-p20",
        inputs=opts.echo(cases=cases),
        computed={"max_gap": worst, "all_exact": all_pass,
                  "delta_example": example.computed["induced"]},
        reference={"gap": 0.0, "delta_example": 0.7,
                   "provenance": "paper"},
        tolerance=1e-9,
        tolerance_kind="abs",
        passed=bool(all_pass and example_ok),
    ), t0)


def claim_lemma_2_1(opts):
    """Norm does not grow under tent extension, on random lattice data."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(opts.rng_seed)
    cases = 50
    resolution = opts.resolution(256)
    worst_excess = -np.inf
    all_pass = True
    conclusive = True
    for _ in range(cases):
        size = int(rng.integers(1, 7))
        phi = {}
        for n in rng.integers(-8, 9, size=size):
            phi[int(n)] = complex(rng.normal(), rng.normal())
        rep = _lattice.check_lemma21_norm(phi, resolution=resolution)
        excess = (rep.computed["norm_induced"]
                  - rep.computed["norm_lattice"])
        worst_excess = max(worst_excess, excess)
        all_pass = all_pass and rep.passed
        conclusive = conclusive and rep.computed["conclusive"]
    return _finish(Report(
        claim_id="lemma-2-1",
        inputs=opts.echo(cases=cases, resolution=resolution),
        computed={"max_excess": float(worst_excess),
                  "all_pass": all_pass, "all_conclusive": conclusive},
        reference={"max_excess_allowed": 1e-3, "provenance": "paper"},
        tolerance=1e-3,
        tolerance_kind="abs",
        passed=bool(all_pass),
    ), t0)


def claim_schur_engine(opts):
    """Schur-norm engine against the closed-form PSD rule and an
    independent bracket oracle, with certificate verification."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(opts.rng_seed)
    tol = 1e-6

    psd_worst = 0.0
    certs_ok = True
    for _ in range(50):
        n = int(rng.integers(2, 17))
        b = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        a = b @ b.conj().T
        val, cert = schur_norm(a, tol=tol)
        psd_worst = max(psd_worst, abs(val - float(np.real(np.diag(a)).max())))
        certs_ok = certs_ok and verify_certificate(a, cert).passed

    # The bracket oracle is real-only; real instances exercise the same
    # engine path.
    oracle_worst = 0.0
    sizes = [2] * 20 + [3] * 5
    for n in sizes:
        a = rng.normal(size=(n, n))
        val, cert = schur_norm(a, tol=tol)
        certs_ok = certs_ok and verify_certificate(a, cert).passed
        lo, hi = oracle_bracket(a, seed=int(rng.integers(0, 2**31)))
        oracle_worst = max(oracle_worst,
                           max(lo - val, val - hi, 0.0))
    passed = psd_worst <= tol and oracle_worst <= 1e-3 and certs_ok
    return _finish(Report(
        claim_id="schur-engine",
        inputs=opts.echo(psd_instances=50, oracle_instances=len(sizes)),
        computed={"psd_rule_max_err": psd_worst,
                  "oracle_max_excess": oracle_worst,
                  "certificates_verified": bool(certs_ok)},
        reference={"psd_rule_err": 0.0, "oracle_excess": 0.0,
                   "provenance": "derived"},
        tolerance=1e-3,
        tolerance_kind="abs",
        passed=bool(passed),
    ), t0)


def claim_m0a_sampler(opts):
    """Finite-sampling lower bound: value 1 for a normalized
    positive-definite multiplier, and monotonicity under set growth."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(opts.rng_seed)
    phi = make_multiplier("gaussian", sigma=1.0)
    sets = generate_sample_sets("Z", 10, opts.rng_seed)
    sm = SampledMultiplier("Z", phi, sets)
    bound = m0a_lower_bound(sm)
    pd_err = abs(bound - 1.0)

    # An indefinite multiplier (its circle transform dips negative), so
    # the sampled norms genuinely vary with the set.
    table = {0: 1.0, 1: 0.9, -1: 0.9, 2: -0.5, -2: -0.5, 3: 0.2, -3: 0.2}

    def mixed(x):
        n = x if np.isscalar(x) else x[0]
        return table.get(int(n), 0.0)

    mono_worst = 0.0
    for _ in range(100):
        base = sorted({int(v) for v in rng.integers(-6, 7, size=4)})
        extra = int(rng.integers(-6, 7))
        if extra in base:
            extra += 13
        small, _ = schur_norm(herz_schur_matrix(base, mixed), tol=1e-6)
        large, _ = schur_norm(herz_schur_matrix(base + [extra], mixed),
                              tol=1e-6)
        mono_worst = max(mono_worst, small - large)
    passed = pd_err <= 1e-6 and mono_worst <= 5e-6
    return _finish(Report(
        claim_id="m0a-sampler",
        inputs=opts.echo(sets=10, trials=100),
        computed={"pd_bound": bound, "pd_err": pd_err,
                  "monotonicity_worst_violation": mono_worst},
        reference={"pd_bound": 1.0, "provenance": "paper"},
        tolerance=1e-6,
        tolerance_kind="abs",
        passed=bool(passed),
    ), t0)


VERIFY_CLAIMS = {
    "lemma-a": claim_lemma_a,
    "lemma-b": claim_lemma_b,
    "lemma-c": claim_lemma_c,
    "lemma-d": claim_lemma_d,
    "lemma-e": claim_lemma_e,
    "lemma-f": claim_lemma_f,
    "lemma-g": claim_lemma_g,
    "formula-p20": claim_formula_p20,
    "lemma-2-1": claim_lemma_2_1,
}

SUITE_CLAIMS = dict(VERIFY_CLAIMS)
SUITE_CLAIMS["schur-engine"] = claim_schur_engine
SUITE_CLAIMS["m0a-sampler"] = claim_m0a_sampler


def run_claim(claim_id, grid=None, window=None, seed=None):
    try:
        fn = SUITE_CLAIMS[claim_id]
    except KeyError:
        raise DomainError(f"unknown claim id {claim_id!r}") from None
    return fn(ClaimOptions(grid=grid, window=window, seed=seed))


def run_suite(grid=None, window=None, seed=None):
    """All claims, reports sorted by claim id."""
    return [run_claim(cid, grid=grid, window=window, seed=seed)
            for cid in sorted(SUITE_CLAIMS)]
