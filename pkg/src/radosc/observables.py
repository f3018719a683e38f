"""Expectation values, quadrature variances, squeezing and entanglement.

Quadratures are X1 = (X+ + X-)/2 and X2 = (X- - X+)/(2i) for X in {L, S}.
The sign of the second quadrature is fixed so that an L- eigenstate with
eigenvalue z has <L1> = Re z and <L2> = Im z under the package-wide
convention z = |z| e^{-i phi}; variances are unaffected by this choice.

Squeezing follows the Wodkiewicz-Eberly criterion: a quadrature is
squeezed when its variance falls below half the magnitude of the mean of
the third generator.  Boundary cases within :data:`CLASSIFY_TOL` classify
as minimum-uncertainty rather than squeezed.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from ._version import __version__
from .coherent import Group, su2_perelomov_state, su2_weight
from .errors import DomainError, NoClassicalRegionError
from .grids import GridResult
from .operators import OpKind, RepMatrices, apply, su2_rep_matrices
from .statespace import StateVector, inner_product

__all__ = [
    "CLASSIFY_TOL",
    "VarianceReport",
    "Classification",
    "su11_mean_l3",
    "su11_quadrature_means",
    "su11_variances_series",
    "su11_perelomov_variances_closed",
    "su2_variances_closed",
    "su2_variances_matrix",
    "classify",
    "squeezing_map",
    "turning_points",
    "mean_energy",
    "concurrence",
]

#: tolerance separating squeezed / minimum-uncertainty / neither
CLASSIFY_TOL = 1e-9


@dataclass(frozen=True)
class VarianceReport:
    """Means, variances and squeezing flags for one su(1,1) or su(2) state."""

    mean_3: float
    var_1: float
    var_2: float
    bound: float
    squeezed_1: bool
    squeezed_2: bool
    minimum_uncertainty: bool

    @classmethod
    def from_moments(cls, mean_3: float, var_1: float, var_2: float) -> "VarianceReport":
        bound = 0.5 * abs(mean_3)
        product = math.sqrt(max(var_1, 0.0) * max(var_2, 0.0))
        return cls(
            mean_3=mean_3,
            var_1=var_1,
            var_2=var_2,
            bound=bound,
            squeezed_1=var_1 < bound - CLASSIFY_TOL,
            squeezed_2=var_2 < bound - CLASSIFY_TOL,
            minimum_uncertainty=abs(product - bound) < CLASSIFY_TOL,
        )


def _check_normalized(state: StateVector):
    if abs(state.norm() - 1.0) > 1e-6:
        raise DomainError(f"state must be normalized, got norm {state.norm()}")


def su11_mean_l3(state: StateVector) -> float:
    """<L3> of a normalized single-l state (L3 eigenvalue s + (2l+3)/4)."""
    state.single_ell()
    _check_normalized(state)
    return sum(abs(c) ** 2 * (q.s + (2 * q.ell + 3) / 4.0) for q, c in state.items())


def su11_quadrature_means(state: StateVector) -> tuple[float, float]:
    """Series-route (<L1>, <L2>) of a normalized single-l state."""
    state.single_ell()
    _check_normalized(state)
    m_minus = inner_product(state, apply(OpKind.L_MINUS, state))
    return m_minus.real, m_minus.imag


def su11_variances_series(state: StateVector) -> VarianceReport:
    """Variance report assembled from ladder-operator applications.

    Uses <L+ L-> = ||L- psi||^2 and <L- L+> = ||L+ psi||^2 together with
    <L+-> and <L+-^2>; exact on the sparse support (no truncation enters).
    """
    state.single_ell()
    _check_normalized(state)
    up = apply(OpKind.L_PLUS, state)
    down = apply(OpKind.L_MINUS, state)
    m_minus = inner_product(state, down)
    m_plus = m_minus.conjugate()
    mm_minus = inner_product(state, apply(OpKind.L_MINUS, down))
    mm_plus = mm_minus.conjugate()
    pm = down.norm() ** 2  # <L+ L->
    mp = up.norm() ** 2  # <L- L+>
    mean_1 = 0.5 * (m_plus + m_minus)
    mean_2 = (m_minus - m_plus) / 2j
    sq_1 = 0.25 * (mm_plus + mm_minus + pm + mp)
    sq_2 = 0.25 * (pm + mp - mm_plus - mm_minus)
    var_1 = (sq_1 - mean_1 * mean_1).real
    var_2 = (sq_2 - mean_2 * mean_2).real
    return VarianceReport.from_moments(su11_mean_l3(state), var_1, var_2)


def su11_perelomov_variances_closed(ell: int, z: complex) -> VarianceReport:
    """Closed-form report for the su(1,1) Perelomov state on hierarchy l.

    <L3> = (l + 3/2)(1+|z|^2)/(2(1-|z|^2)) and
    (Delta L_1,2)^2 = (l + 3/2)/4 [1 + (2 Re,Im z / (1-|z|^2))^2].
    """
    z = complex(z)
    y = abs(z) ** 2
    if y >= 1.0:
        raise DomainError(f"su(1,1) Perelomov variances need |z| < 1, got |z| = {abs(z)}")
    kappa2 = ell + 1.5
    mean_3 = 0.5 * kappa2 * (1 + y) / (1 - y)
    var_1 = 0.25 * kappa2 * (1 + (2 * z.real / (1 - y)) ** 2)
    var_2 = 0.25 * kappa2 * (1 + (2 * z.imag / (1 - y)) ** 2)
    return VarianceReport.from_moments(mean_3, var_1, var_2)


def su2_variances_closed(n: int, z: complex) -> VarianceReport:
    """Closed-form report for the su(2) Perelomov state on shell n.

    With <S3>_0 = -j: <S3> = <S3>_0 (1-|z|^2)/(1+|z|^2) and
    (Delta S_1,2)^2 = [(2 Re,Im z/(1+|z|^2))^2 - 1] <S3>_0 / 2.
    """
    z = complex(z)
    j = su2_weight(n)
    y = abs(z) ** 2
    s3_0 = -j
    mean_3 = s3_0 * (1 - y) / (1 + y)
    var_1 = 0.5 * ((2 * z.real / (1 + y)) ** 2 - 1.0) * s3_0
    var_2 = 0.5 * ((2 * z.imag / (1 + y)) ** 2 - 1.0) * s3_0
    return VarianceReport.from_moments(mean_3, var_1, var_2)


def _rep_vector(rep: RepMatrices, state: StateVector) -> np.ndarray:
    return np.array([state.amplitude(q) for q in rep.basis_map], dtype=complex)


def su2_variances_matrix(n: int, z: complex) -> VarianceReport:
    """Same report computed densely from the Hubbard representation matrices."""
    rep = su2_rep_matrices(n)
    v = _rep_vector(rep, su2_perelomov_state(n, z))
    s1 = 0.5 * (rep.s_plus + rep.s_minus)
    s2 = (rep.s_minus - rep.s_plus) / 2j
    mean_3 = float(np.real(v.conj() @ rep.s3 @ v))

    def var(op: np.ndarray) -> float:
        m = complex(v.conj() @ op @ v)
        m2 = complex(v.conj() @ op @ op @ v)
        return float((m2 - m * m).real)

    return VarianceReport.from_moments(mean_3, var(s1), var(s2))


class Classification(enum.IntEnum):
    """Per-point squeezing class; squeezed classes take precedence over MINIMUM."""

    NONE = 0
    SQ1 = 1
    SQ2 = 2
    MINIMUM = 3


def classify(report: VarianceReport) -> Classification:
    if report.squeezed_1:
        return Classification.SQ1
    if report.squeezed_2:
        return Classification.SQ2
    if report.minimum_uncertainty:
        return Classification.MINIMUM
    return Classification.NONE


def squeezing_map(group: Group, label: int, mod_grid, phase_grid) -> GridResult:
    """Classification grid over z = |z| e^{-i phi} (rows |z|, columns phi)."""
    mods = np.asarray(mod_grid, dtype=float)
    phases = np.asarray(phase_grid, dtype=float)
    if group is Group.SU11 and np.any(mods >= 1.0):
        raise DomainError("su(1,1) squeezing map requires all moduli < 1")
    values = np.empty((len(mods), len(phases)))
    for i, m in enumerate(mods):
        for k, phi in enumerate(phases):
            z = m * cmath.exp(-1j * phi)
            if group is Group.SU11:
                rep = su11_perelomov_variances_closed(label, z)
            else:
                rep = su2_variances_closed(label, z)
            values[i, k] = int(classify(rep))
    meta = {
        "group": group.value,
        "label": label,
        "classes": "0=NONE,1=SQ1,2=SQ2,3=MINIMUM",
        "tol": CLASSIFY_TOL,
        "phase_convention": "z=|z|exp(-i*phi)",
        "version": __version__,
    }
    return GridResult("mod", list(mods), "phi", list(phases), values, meta)


def turning_points(mean_energy_value: float, ell: int) -> tuple[float, float]:
    """Classical turning radii of E = l(l+1)/r^2 + r^2.

    r^2 = (E +- sqrt(E^2 - 4 l(l+1)))/2; l = 0 gives r_inner = 0.  Raises
    :class:`NoClassicalRegionError` when E lies below the potential minimum.
    """
    if mean_energy_value <= 0:
        raise DomainError(f"mean energy must be positive, got {mean_energy_value}")
    if ell == 0:
        return 0.0, math.sqrt(mean_energy_value)
    disc = mean_energy_value**2 - 4.0 * ell * (ell + 1)
    if disc < 0:
        raise NoClassicalRegionError(
            f"no classical region: E = {mean_energy_value} lies below 2 sqrt(l(l+1)) at l = {ell}"
        )
    root = math.sqrt(disc)
    return (
        math.sqrt((mean_energy_value - root) / 2.0),
        math.sqrt((mean_energy_value + root) / 2.0),
    )


def mean_energy(obj) -> float:
    """Mean radial-Hamiltonian energy 4 <L3> of an su(1,1)-sector state.

    Accepts either a single-l :class:`StateVector` (series route) or an
    existing :class:`VarianceReport` (4 * mean_3).
    """
    if isinstance(obj, VarianceReport):
        return 4.0 * obj.mean_3
    if isinstance(obj, StateVector):
        return 4.0 * su11_mean_l3(obj)
    raise DomainError(f"mean_energy expects a StateVector or VarianceReport, got {type(obj).__name__}")


def concurrence(a: complex, b: complex, c: complex, d: complex) -> float:
    """Two-qubit concurrence 2 |ad - bc| of a normalized product-basis state."""
    total = abs(a) ** 2 + abs(b) ** 2 + abs(c) ** 2 + abs(d) ** 2
    if abs(total - 1.0) > 1e-10:
        raise DomainError(f"amplitudes must be normalized: sum of squares is {total}")
    return 2.0 * abs(a * d - b * c)
