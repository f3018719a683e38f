"""Variance reports, squeezing classification, turning points, concurrence."""

import cmath
import math

import numpy as np
import pytest

from radosc.coherent import Group, bg_state, su11_perelomov_state
from radosc.errors import DomainError, NoClassicalRegionError
from radosc.observables import (
    Classification,
    classify,
    concurrence,
    mean_energy,
    squeezing_map,
    su2_variances_closed,
    su2_variances_matrix,
    su11_mean_l3,
    su11_perelomov_variances_closed,
    su11_quadrature_means,
    su11_variances_series,
    turning_points,
)
from radosc.statespace import StateVector

# ------------------------------------------------------- su(1,1) series route


@pytest.mark.parametrize("ell", [0, 1, 4])
def test_extremal_ket_is_minimum_uncertainty(ell):
    rep = su11_variances_series(StateVector.ket(0, ell))
    expected = (2 * ell + 3) / 8.0
    assert rep.var_1 == pytest.approx(expected, abs=1e-12)
    assert rep.var_2 == pytest.approx(expected, abs=1e-12)
    assert rep.minimum_uncertainty
    assert not rep.squeezed_1 and not rep.squeezed_2


def test_l3_mean_of_excited_ket():
    assert su11_mean_l3(StateVector.ket(1, 0)) == pytest.approx(1.75, abs=1e-14)


def test_series_route_rejects_mixed_or_unnormalized():
    mixed = (StateVector.ket(0, 0) + StateVector.ket(0, 2)).scaled(1 / math.sqrt(2))
    with pytest.raises(DomainError):
        su11_variances_series(mixed)
    with pytest.raises(DomainError):
        su11_variances_series(StateVector.ket(0, 0).scaled(2.0))


@pytest.mark.parametrize("ell", [0, 1, 2])
@pytest.mark.parametrize("mod", [0.25, 1.0, 4.0])
def test_bg_minimum_uncertainty_chain(ell, mod):
    z = mod * cmath.exp(-1j * math.pi / 3)
    rep = su11_variances_series(bg_state(ell, z))
    half_l3 = 0.5 * rep.mean_3
    assert rep.var_1 == pytest.approx(half_l3, abs=1e-9)
    assert rep.var_2 == pytest.approx(half_l3, abs=1e-9)
    assert rep.minimum_uncertainty


def test_bg_quadrature_means_are_re_im_z():
    z = 1.3 * cmath.exp(-1j * 2.1)
    m1, m2 = su11_quadrature_means(bg_state(0, z))
    assert m1 == pytest.approx(z.real, abs=1e-10)
    assert m2 == pytest.approx(z.imag, abs=1e-10)


def test_flagged_printed_prefactor_relation():
    # the equality chain pins (dL1)^2 = <L3>/2; the textbook-looking
    # expression l + 3/2 + 2|z| I_{l+3/2}/I_{l+1/2} equals 2 <L3>, i.e.
    # four times the actual bound -- recorded here, not asserted as a bound
    from radosc.specfun import bessel_i

    ell, mod = 1, 2.0
    rep = su11_variances_series(bg_state(ell, mod))
    printed = ell + 1.5 + 2 * mod * bessel_i(ell + 1.5, 2 * mod) / bessel_i(ell + 0.5, 2 * mod)
    assert printed == pytest.approx(2.0 * rep.mean_3, rel=1e-10)
    assert printed == pytest.approx(4.0 * rep.var_1, rel=1e-9)


# --------------------------------------------------- su(1,1) Perelomov closed


def test_perelomov_closed_minimum_only_at_zero():
    rep0 = su11_perelomov_variances_closed(0, 0.0)
    assert rep0.var_1 == rep0.var_2 == pytest.approx(rep0.bound)
    assert rep0.minimum_uncertainty and not rep0.squeezed_1 and not rep0.squeezed_2


def test_perelomov_closed_squeezing_by_phase():
    # z = |z| e^{-i phi}: phi = pi/2 squeezes the first quadrature
    rep = su11_perelomov_variances_closed(0, 0.5 * cmath.exp(-1j * math.pi / 2))
    assert rep.squeezed_1 and not rep.squeezed_2
    rep = su11_perelomov_variances_closed(0, 0.5j)  # phi = 3pi/2
    assert rep.squeezed_1 and not rep.squeezed_2
    rep = su11_perelomov_variances_closed(0, 0.5)  # phi = 0
    assert rep.squeezed_2 and not rep.squeezed_1
    with pytest.raises(DomainError):
        su11_perelomov_variances_closed(0, 1.0)


def test_perelomov_closed_values():
    z = 0.5
    rep = su11_perelomov_variances_closed(0, z)
    assert rep.mean_3 == pytest.approx(0.5 * 1.5 * 1.25 / 0.75, rel=1e-14)
    assert rep.var_1 == pytest.approx(0.25 * 1.5 * (1 + (2 * 0.5 / 0.75) ** 2), rel=1e-14)
    assert rep.var_2 == pytest.approx(0.25 * 1.5, rel=1e-14)


@pytest.mark.parametrize("ell", [0, 1])
@pytest.mark.parametrize("mod", [0.2, 0.5, 0.8])
@pytest.mark.parametrize("phi", [0.0, 0.7, math.pi / 2, 2.6])
def test_perelomov_series_matches_closed(ell, mod, phi):
    z = mod * cmath.exp(-1j * phi)
    series = su11_variances_series(su11_perelomov_state(ell, z))
    closed = su11_perelomov_variances_closed(ell, z)
    assert series.mean_3 == pytest.approx(closed.mean_3, abs=1e-8)
    assert series.var_1 == pytest.approx(closed.var_1, abs=1e-8)
    assert series.var_2 == pytest.approx(closed.var_2, abs=1e-8)


# --------------------------------------------------------------------- su(2)


def test_su2_closed_small_cases():
    rep = su2_variances_closed(2, 0.0)
    assert rep.var_1 == rep.var_2 == pytest.approx(0.25)
    assert rep.minimum_uncertainty
    assert su2_variances_closed(2, cmath.exp(-0.4j)).mean_3 == pytest.approx(0.0)  # |z| = 1
    rep18 = su2_variances_closed(2, 1.8)
    assert rep18.squeezed_1 and not rep18.squeezed_2


def test_su2_matrix_trivial_rep():
    rep = su2_variances_matrix(1, 0.3 + 2.2j)
    assert rep.mean_3 == rep.var_1 == rep.var_2 == 0.0


def test_su2_phase_pi_half_squeezes_second():
    rep = su2_variances_matrix(2, 1.8 * cmath.exp(-1j * math.pi / 2))
    assert rep.var_2 < rep.bound
    assert rep.squeezed_2 and not rep.squeezed_1


@pytest.mark.parametrize("n", range(0, 13))
def test_su2_closed_vs_matrix(n):
    for mod in (0.0, 0.4, 1.0, 1.8, 3.0):
        for phi in np.linspace(0, 2 * math.pi, 8, endpoint=False):
            z = mod * cmath.exp(-1j * phi)
            a = su2_variances_closed(n, z)
            b = su2_variances_matrix(n, z)
            assert abs(a.mean_3 - b.mean_3) < 1e-10
            assert abs(a.var_1 - b.var_1) < 1e-10
            assert abs(a.var_2 - b.var_2) < 1e-10


# ------------------------------------------------------------ classification


def test_squeezing_map_su2_zones():
    phases = np.array([0.0, math.pi / 4, math.pi / 2, math.pi, 3 * math.pi / 2])
    grid = squeezing_map(Group.SU2, 2, np.array([0.0, 1.8]), phases)
    z0 = grid.values[0]
    assert all(c == Classification.MINIMUM for c in z0)  # |z| = 0 row
    z18 = grid.values[1]
    assert z18[0] == Classification.SQ1  # phi = 0
    assert z18[1] == Classification.NONE  # phi = pi/4
    assert z18[2] == Classification.SQ2  # phi = pi/2
    assert z18[3] == Classification.SQ1  # phi = pi
    assert z18[4] == Classification.SQ2  # phi = 3pi/2


def test_squeezing_map_su11_minimum_at_origin():
    grid = squeezing_map(Group.SU11, 0, np.array([0.0, 0.5]), np.array([0.0, math.pi / 2]))
    assert grid.values[0][0] == Classification.MINIMUM
    assert grid.values[1][0] == Classification.SQ2
    assert grid.values[1][1] == Classification.SQ1
    with pytest.raises(DomainError):
        squeezing_map(Group.SU11, 0, np.array([1.5]), np.array([0.0]))


def test_squeezing_map_symmetries():
    phases = np.linspace(0, math.pi, 9, endpoint=False)
    mods = np.array([0.5, 2.0])  # 2.0 = 1/0.5
    low = squeezing_map(Group.SU2, 3, mods, phases).values
    shifted = squeezing_map(Group.SU2, 3, mods, phases + math.pi).values
    assert np.array_equal(low, shifted)  # phi -> phi + pi
    assert np.array_equal(low[0], low[1])  # |z| -> 1/|z|
    # the mean flips sign under modulus inversion
    m_low = su2_variances_closed(3, 0.5).mean_3
    m_high = su2_variances_closed(3, 2.0).mean_3
    assert m_low == pytest.approx(-m_high, rel=1e-12)


def test_classify_precedence_squeezed_wins_over_minimum():
    # at phi = 0 the su(1,1) Perelomov state saturates the bound AND has a
    # squeezed second quadrature; classification must say SQ2
    rep = su11_perelomov_variances_closed(0, 0.5)
    assert rep.minimum_uncertainty and rep.squeezed_2
    assert classify(rep) == Classification.SQ2


# ------------------------------------------------------------ turning points


def test_turning_points_values():
    assert turning_points(4.0, 0) == (0.0, 2.0)
    r_in, r_out = turning_points(3.0, 1)
    assert r_in == pytest.approx(1.0, rel=1e-14)
    assert r_out == pytest.approx(math.sqrt(2), rel=1e-14)
    with pytest.raises(NoClassicalRegionError):
        turning_points(2 * math.sqrt(2) * 0.9, 1)
    with pytest.raises(DomainError):
        turning_points(-1.0, 0)


# -------------------------------------------------------------- mean energy


def test_mean_energy_routes():
    assert mean_energy(StateVector.ket(0, 0)) == pytest.approx(3.0)
    assert mean_energy(su11_perelomov_state(0, 0.0)) == pytest.approx(3.0)
    with pytest.raises(DomainError):
        mean_energy(42.0)


def test_mean_energy_perelomov_displacement_parameter():
    # 4 <L3> with z = tanh|xi| equals 2 (l + 3/2) cosh(2|xi|); this is twice
    # the (l+3/2) cosh(2|xi|) sometimes quoted, which would fall below the
    # z = 0 ground energy 2l + 3 and, for large l, below the potential floor
    xi = 0.5
    z = math.tanh(xi)
    got = mean_energy(su11_perelomov_variances_closed(0, z))
    assert got == pytest.approx(2 * 1.5 * math.cosh(2 * xi), rel=1e-12)
    assert got > 3.0
    # series route agrees
    assert mean_energy(su11_perelomov_state(0, z)) == pytest.approx(got, abs=1e-9)


# --------------------------------------------------------------- concurrence


def test_concurrence_endpoints():
    w = 1 / math.sqrt(2)
    assert concurrence(w, w, 0.0, 0.0) == 0.0
    assert concurrence(0.0, w, w, 0.0) == pytest.approx(1.0, abs=1e-15)
    assert concurrence(0.5, 0.5, 0.5, 0.5) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(DomainError):
        concurrence(1.0, 1.0, 0.0, 0.0)
