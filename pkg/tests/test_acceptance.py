"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Every tolerance is pinned here, not configurable.
"""

import cmath
import math
import time

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.linalg import expm

import radosc as R
from radosc.observables import Classification, classify
from radosc.statespace import QNums, StateVector


def _report(ok: bool, label: str, detail: str = ""):
    print(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail else ""))
    assert ok, f"{label}: {detail}"


# ---------------------------------------------------------------------------


def test_criterion_01_algebra_suite():
    t0 = time.perf_counter()
    results = R.commutator_suite(8, 8)
    elapsed = time.perf_counter() - t0
    worst = max(res for _, res in results)
    ok = worst < 1e-12 and elapsed < 5.0
    _report(ok, "criterion 1: commutator residuals < 1e-12 on 2<=s,l<=8 in < 5 s",
            f"worst={worst:.2e}, {len(results)} identities, {elapsed:.2f} s")


BG_GRID = [(ell, mod, phi) for ell in (0, 1, 2, 20) for mod in (0.5, 3.0, 8.0)
           for phi in (0.0, math.pi / 2, math.pi)]


def test_criterion_02_bg_lowering_eigenstate():
    worst = 0.0
    for ell, mod, phi in BG_GRID:
        z = mod * cmath.exp(-1j * phi)
        st = R.bg_state(ell, z)
        worst = max(worst, (R.apply(R.OpKind.L_MINUS, st) - st.scaled(z)).norm())
    _report(worst < 1e-10, "criterion 2: ||L- |z>_BG - z |z>_BG|| < 1e-10 on the parameter grid",
            f"worst={worst:.2e}")


def test_criterion_03_bg_minimum_uncertainty_chain():
    worst = 0.0
    for ell, mod, phi in BG_GRID:
        rep = R.su11_variances_series(R.bg_state(ell, mod * cmath.exp(-1j * phi)))
        bound = 0.5 * rep.mean_3
        worst = max(worst, abs(rep.var_1 - bound), abs(rep.var_2 - bound))
    _report(worst < 1e-9, "criterion 3: series (dL1)^2 = (dL2)^2 = <L3>/2 to 1e-9",
            f"worst={worst:.2e}")


def test_criterion_04_closed_form_cross_checks():
    r = np.linspace(0.1, 6.0, 120)
    worst_bg = 0.0
    for ell in (0, 1, 2):
        for mod in (0.25, 0.5, 0.8):  # real z > 0
            series = R.evaluate_density(R.bg_state(ell, mod), r)
            closed = np.array([abs(R.bg_wavefunction_closed(ell, mod, ri)) ** 2 for ri in r])
            worst_bg = max(worst_bg, float(np.max(np.abs(series - closed))))
    worst_per = 0.0
    for ell in (0, 1, 2):
        for mod in (0.25, 0.5, 0.8):
            for phi in (0.0, math.pi / 2, math.pi):
                z = mod * cmath.exp(-1j * phi)
                series = R.evaluate_density(R.su11_perelomov_state(ell, z), r)
                closed = np.array(
                    [abs(R.su11_perelomov_wavefunction_closed(ell, z, ri)) ** 2 for ri in r]
                )
                worst_per = max(worst_per, float(np.max(np.abs(series - closed))))
    ok = worst_bg < 1e-8 and worst_per < 1e-8
    _report(ok, "criterion 4: closed-form densities match series routes pointwise to 1e-8",
            f"bg={worst_bg:.2e}, perelomov={worst_per:.2e}")


def test_criterion_05_perelomov_single_peak():
    r = np.arange(1e-3, 8.0, 1e-3)
    counts = []
    for ell in (0, 1, 2):
        for phi in (0.0, math.pi / 2, math.pi):
            d = R.evaluate_density(R.su11_perelomov_state(ell, 0.5 * cmath.exp(-1j * phi)), r)
            interior = (d[1:-1] > d[:-2]) & (d[1:-1] > d[2:]) & (d[1:-1] > d.max() * 1e-12)
            counts.append(int(interior.sum()))
    _report(all(c == 1 for c in counts),
            "criterion 5: su(1,1) Perelomov density single-peaked on a 1e-3 grid",
            f"counts={counts}")


def test_criterion_06_perelomov_squeezing_pattern():
    checks = []
    for phi, expect in [(math.pi / 2, Classification.SQ1), (3 * math.pi / 2, Classification.SQ1),
                        (0.0, Classification.SQ2), (math.pi, Classification.SQ2)]:
        rep = R.su11_perelomov_variances_closed(0, 0.5 * cmath.exp(-1j * phi))
        checks.append(classify(rep) == expect)
    # MINIMUM appears only at z = 0
    grid = R.squeezing_map(R.Group.SU11, 0,
                           np.array([0.0, 0.25, 0.5, 0.75]),
                           np.linspace(0, 2 * math.pi, 16, endpoint=False))
    minimum_rows = {i for i, row in enumerate(grid.values)
                    if any(c == Classification.MINIMUM for c in row)}
    checks.append(minimum_rows == {0})
    checks.append(all(c == Classification.MINIMUM for c in grid.values[0]))
    _report(all(checks), "criterion 6: SQ1 at phi=pi/2,3pi/2; SQ2 at phi=0,pi; MINIMUM only at z=0",
            f"checks={checks}")


def test_criterion_07_su2_displacement_oracle():
    worst = 0.0
    for n in (2, 3, 4, 5, 8):
        rep = R.su2_rep_matrices(n)
        for xi in (0.35, 0.8 * cmath.exp(1j * math.pi / 5), 1.2 * cmath.exp(-2j * math.pi / 3)):
            vec = expm(xi * rep.s_plus - np.conj(xi) * rep.s_minus)[:, -1]
            st = R.su2_perelomov_state(n, R.xi_to_z(R.Group.SU2, xi))
            got = np.array([st.amplitude(q) for q in rep.basis_map])
            worst = max(worst, float(np.max(np.abs(got - vec))))
    _report(worst < 1e-10, "criterion 7: su(2) states equal expm(xi S+ - conj(xi) S-)|j,-j>",
            f"worst={worst:.2e}")


def test_criterion_08_su2_variance_maps():
    worst = 0.0
    for n in range(0, 13):
        for mod in (0.0, 0.4, 1.0, 1.8, 3.0):
            for phi in np.linspace(0, 2 * math.pi, 8, endpoint=False):
                z = mod * cmath.exp(-1j * phi)
                a = R.su2_variances_closed(n, z)
                b = R.su2_variances_matrix(n, z)
                worst = max(worst, abs(a.mean_3 - b.mean_3), abs(a.var_1 - b.var_1),
                            abs(a.var_2 - b.var_2))
    zone_ok = True
    for phi, expect in [
        (0.0, Classification.SQ1), (math.pi, Classification.SQ1),
        (math.pi / 2, Classification.SQ2), (3 * math.pi / 2, Classification.SQ2),
        (math.pi / 4, Classification.NONE), (3 * math.pi / 4, Classification.NONE),
        (5 * math.pi / 4, Classification.NONE), (7 * math.pi / 4, Classification.NONE),
    ]:
        rep = R.su2_variances_closed(2, 1.8 * cmath.exp(-1j * phi))
        zone_ok = zone_ok and classify(rep) == expect
    origin_ok = classify(R.su2_variances_closed(2, 0.0)) == Classification.MINIMUM
    ok = worst < 1e-10 and zone_ok and origin_ok
    _report(ok, "criterion 8: closed vs matrix su(2) reports to 1e-10 and the n=2 zone layout",
            f"worst={worst:.2e}, zones={zone_ok}, origin={origin_ok}")


def test_criterion_09_transition_probabilities():
    worst = 0.0
    for n in range(0, 10):
        two_j = int(round(2 * R.su2_weight(n)))
        for mod in (0.3, 1.0, 5.0):
            total = sum(R.transition_probability(n, k, mod) for k in range(two_j + 1))
            worst = max(worst, abs(total - 1.0))
    point = R.transition_probability(4, 1, 1.0)
    ok = worst < 1e-14 and point == 0.5
    _report(ok, "criterion 9: shell probabilities sum to 1 (1e-14) and P(4,1,|z|=1) = 1/2",
            f"worst={worst:.2e}, P={point}")


def test_criterion_10_dynamics():
    # (a) BG density rows at tau = 0 and tau = 2 pi agree
    r = np.linspace(0.02, 12.0, 300)
    taus = np.array([0.0, 2 * math.pi])
    spec = R.EvolutionSpec(R.CoherentSpec(R.Family.BG, 0, 3.0), taus / 4.0, r)
    grid = R.density_evolution(spec)
    row_gap = float(np.max(np.abs(grid.values[0] - grid.values[1])))
    # (b) circular quadrature orbit
    z = 2.0 * cmath.exp(-0.4j)
    spec2 = R.EvolutionSpec(R.CoherentSpec(R.Family.BG, 1, z), np.linspace(0, 1.5, 11),
                            np.linspace(0.1, 5, 10))
    circle_gap = max(abs(m1 * m1 + m2 * m2 - abs(z) ** 2)
                     for _, m1, m2 in R.quadrature_trajectory(spec2))
    # (c) Perelomov peak at tau = pi within one grid step of the outer
    # turning radius; evaluated in the semiclassical hierarchy l = 20
    ell, mod, step = 20, 0.5, 0.15
    r2 = np.arange(step, 12.0 + 1e-9, step)
    spec3 = R.EvolutionSpec(R.CoherentSpec(R.Family.SU11P, ell, mod),
                            np.array([0.0, math.pi]) / 4.0, r2)
    rows = R.density_evolution(spec3).values
    peak = r2[np.argmax(rows[1])]
    _, r_out = R.turning_points(R.mean_energy(R.su11_perelomov_state(ell, mod)), ell)
    peak_gap = abs(peak - r_out)
    ok = row_gap < 1e-10 and circle_gap < 1e-10 and peak_gap <= step
    _report(ok, "criterion 10: tau-periodic density, circular <L1,2> orbit, peak at r_outer",
            f"rows={row_gap:.2e}, circle={circle_gap:.2e}, peak gap={peak_gap:.3f} vs step {step}")


def test_criterion_11_appendix_suite():
    worst_orth = 0.0
    for ell in (0, 1, 5, 20):
        # r_max puts the Gaussian tail of every integrand below 1e-12
        r_max = 16.0
        for s in range(11):
            for sp in range(s, 11):
                val, _ = quad(
                    lambda rr: R.radial_wavefunction(QNums(s, ell), rr)
                    * R.radial_wavefunction(QNums(sp, ell), rr),
                    0.0, r_max, limit=300,
                )
                worst_orth = max(worst_orth, abs(val - (1.0 if s == sp else 0.0)))
    points = [
        (1.5, 0, 1.0, 0.0, 1.0),
        (2.7, 1, 1.0, 0.0, 2.0),   # non-quantized energy
        (3.5, 0, 0.0, 1.0, 1.5),
        (4.25, 2, 1.0, 0.0, 1.2),  # non-quantized, l = 2
        (2.0, 0, 1.0, 1.0, 0.7),   # both branches mixed
        (6.5, 3, 0.0, 1.0, 2.5),
    ]
    worst_res = max(abs(R.general_u_residual(*p)) for p in points)
    ok = worst_orth < 1e-8 and worst_res < 1e-5
    _report(ok, "criterion 11: u-orthonormality to 1e-8 and ODE residuals < 1e-5 at 6 points",
            f"orth={worst_orth:.2e}, residual={worst_res:.2e}")


def test_criterion_12_bookkeeping():
    ok = True
    for n in range(41):
        d = R.degeneracy(n)
        shell = R.enumerate_hierarchy(R.HierarchyId.horizontal(n))
        ok = ok and d == len(shell) == int(round(2 * R.su2_weight(n) + 1))
    chain_ok = True
    for s in range(13):
        chain = [StateVector.ket(s, 0)]
        while chain[-1]:
            chain.append(R.apply(R.OpKind.C_MINUS, chain[-1]))
        chain_ok = chain_ok and (len(chain) - 1 == s + 1)
    _report(ok and chain_ok,
            "criterion 12: degeneracy = shell size = 2j+1 (n <= 40); diagonal chain length s+1",
            f"shells={ok}, chains={chain_ok}")


def test_criterion_13_concurrence_endpoints():
    w = 1 / math.sqrt(2)
    sep = R.concurrence(w, w, 0.0, 0.0)
    bell = R.concurrence(0.0, w, w, 0.0)
    ok = sep == 0.0 and bell == pytest.approx(1.0, abs=1e-15)
    _report(ok, "criterion 13: concurrence 0 for separable and 1 for the Bell pair",
            f"C_sep={sep}, C_bell={bell}")
