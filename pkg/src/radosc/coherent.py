"""Coherent-state constructors for the radial oscillator.

Three families:

* Barut-Girardello (BG): eigenstates of the su(1,1) lowering operator L-
  with complex eigenvalue z, living on a fixed-l (vertical) hierarchy.
* su(1,1) Perelomov: displacement orbit of the nodeless state |0>_l,
  parameterized on the unit disk |z| < 1.
* su(2) Perelomov (spin/Bloch): displacement orbit of the lowest-weight
  vector |j, -j> of a degenerate energy shell n; finite sum over the shell.

Phase convention: complex parameters are written z = |z| e^{-i phi} with
phi in [0, 2pi), so a given phi enters amplitudes as e^{-i s phi}.  Closed
form wavefunctions are defined up to a global phase; only |psi|^2 is a
contract-stable observable.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError
from .specfun import SeriesControl, bessel_i, bessel_j_complex, log_gamma
from .statespace import PRUNE_TOL, QNums, StateVector

__all__ = [
    "Family",
    "Group",
    "CoherentSpec",
    "bg_state",
    "bg_wavefunction_closed",
    "su11_perelomov_state",
    "su11_perelomov_wavefunction_closed",
    "su2_perelomov_state",
    "xi_to_z",
    "transition_probability",
    "su2_weight",
]

# re-exported here because the SU(2) Perelomov family is built on it
from .operators import su2_weight

#: magnitudes below this stop the tail of an infinite-family expansion;
#: one decade under the StateVector pruning threshold.
_TAIL_TOL = 1e-16


class Family(enum.Enum):
    BG = "bg"
    SU11P = "su11p"
    SU2P = "su2p"


class Group(enum.Enum):
    SU11 = "su11"
    SU2 = "su2"


@dataclass(frozen=True)
class CoherentSpec:
    """Parameter bundle naming one coherent state.

    ``label`` is the orbital number l for the BG and su(1,1) Perelomov
    families and the shell number n for the su(2) family.  ``trunc`` is a
    minimum expansion order for the two infinite families (they
    auto-extend until the dropped tail mass is below 1e-14 regardless).
    """

    family: Family
    label: int
    z: complex
    trunc: int | None = None

    def __post_init__(self):
        if self.label < 0:
            raise DomainError(f"label must be >= 0, got {self.label}")
        if self.trunc is not None:
            if self.family is Family.SU2P:
                raise DomainError("the su(2) family is a finite sum and takes no truncation")
            if self.trunc < 1:
                raise DomainError(f"trunc must be >= 1, got {self.trunc}")
        if self.family is Family.SU11P and abs(self.z) >= 1.0:
            raise DomainError(f"su(1,1) Perelomov states need |z| < 1, got |z| = {abs(self.z)}")

    def build(self, ctl: SeriesControl | None = None) -> StateVector:
        if self.family is Family.BG:
            return bg_state(self.label, self.z, self.trunc, ctl=ctl)
        if self.family is Family.SU11P:
            return su11_perelomov_state(self.label, self.z, self.trunc, ctl=ctl)
        return su2_perelomov_state(self.label, self.z)


def _vertical_expansion(ell, z, trunc, ctl, log_mag, decreasing_after, label):
    """Assemble amplitudes c_s = |c_s(z)| e^{i s arg z} on a vertical hierarchy.

    ``log_mag(s)`` gives ln|c_s|; the loop extends past any requested
    ``trunc`` until magnitudes are decreasing and below the tail tolerance.
    """
    ctl = ctl or SeriesControl.default()
    theta = cmath.phase(z)
    amps: dict[QNums, complex] = {}
    s = 0
    while True:
        mag = math.exp(log_mag(s))
        if mag >= PRUNE_TOL:
            amps[QNums(s, ell)] = mag * cmath.exp(1j * s * theta)
        if decreasing_after(s) and mag < _TAIL_TOL and s >= (trunc or 0):
            return StateVector(amps)
        s += 1
        if s > ctl.max_terms:
            raise ConvergenceError(f"{label}: tail not below {_TAIL_TOL} within {ctl.max_terms} terms")


def bg_state(
    ell: int, z: complex, trunc: int | None = None, *, ctl: SeriesControl | None = None
) -> StateVector:
    """Barut-Girardello state |z>_BG on the l-hierarchy: L- |z> = z |z>.

    Amplitudes N z^s / sqrt(Gamma(s+1) Gamma(s+l+3/2)) with the
    normalization N = |z|^((2l+1)/4) / sqrt(I_{l+1/2}(2|z|)); z = 0
    degenerates to the single ket |0>_l.
    """
    if ell < 0:
        raise DomainError(f"ell must be >= 0, got {ell}")
    z = complex(z)
    if z == 0:
        return StateVector.ket(0, ell)
    mod = abs(z)
    ln_norm = (2 * ell + 1) / 4.0 * math.log(mod) - 0.5 * math.log(bessel_i(ell + 0.5, 2 * mod, ctl))

    def log_mag(s: int) -> float:
        return ln_norm + s * math.log(mod) - 0.5 * (log_gamma(s + 1) + log_gamma(s + ell + 1.5))

    def decreasing_after(s: int) -> bool:
        return mod * mod < (s + 1) * (s + ell + 1.5)

    return _vertical_expansion(ell, z, trunc, ctl, log_mag, decreasing_after, "bg_state")


def bg_wavefunction_closed(
    ell: int, z: complex, r: float, ctl: SeriesControl | None = None
) -> complex:
    """Closed-form BG wavefunction sqrt(2r/I_{l+1/2}(2|z|)) e^(z-r^2/2) J_{l+1/2}(2r sqrt(z)).

    sqrt(z) is principal-branch.  Defined up to a global phase; the z -> 0
    limit is a 0/0 prefactor and is rejected (use the series route).
    """
    z = complex(z)
    if z == 0:
        raise DomainError("bg_wavefunction_closed is singular at z = 0; build the series state instead")
    if r <= 0:
        raise DomainError("bg_wavefunction_closed requires r > 0")
    mod = abs(z)
    pref = math.sqrt(2 * r / bessel_i(ell + 0.5, 2 * mod, ctl))
    return pref * cmath.exp(z - r * r / 2.0) * bessel_j_complex(ell + 0.5, 2 * r * cmath.sqrt(z), ctl)


def su11_perelomov_state(
    ell: int, z: complex, trunc: int | None = None, *, ctl: SeriesControl | None = None
) -> StateVector:
    """su(1,1) Perelomov state on the l-hierarchy (unit-disk parameter).

    Amplitudes (1-|z|^2)^((2l+3)/4) sqrt(Gamma(s+l+3/2) /
    (Gamma(s+1) Gamma(l+3/2))) z^s; the expansion auto-truncates once the
    dropped tail mass is below 1e-14.
    """
    if ell < 0:
        raise DomainError(f"ell must be >= 0, got {ell}")
    z = complex(z)
    mod = abs(z)
    if mod >= 1.0:
        raise DomainError(f"su(1,1) Perelomov states need |z| < 1, got |z| = {mod}")
    if z == 0:
        return StateVector.ket(0, ell)
    ln_pref = (2 * ell + 3) / 4.0 * math.log1p(-mod * mod)
    lg_base = log_gamma(ell + 1.5)

    def log_mag(s: int) -> float:
        return ln_pref + 0.5 * (log_gamma(s + ell + 1.5) - log_gamma(s + 1) - lg_base) + s * math.log(mod)

    def decreasing_after(s: int) -> bool:
        return mod * mod * (s + ell + 1.5) < (s + 1)

    return _vertical_expansion(ell, z, trunc, ctl, log_mag, decreasing_after, "su11_perelomov_state")


def su11_perelomov_wavefunction_closed(ell: int, z: complex, r: float) -> complex:
    """Closed-form su(1,1) Perelomov wavefunction (single-peaked Gaussian type).

    sqrt(2/Gamma(l+3/2)) [sqrt(1-|z|^2)/(1-z)]^((2l+3)/2) r^(l+1)
    exp(-(r^2/2)(1+z)/(1-z)), with the complex power on the principal
    branch.  Defined up to a global phase.
    """
    z = complex(z)
    mod = abs(z)
    if mod >= 1.0:
        raise DomainError(f"su(1,1) Perelomov states need |z| < 1, got |z| = {mod}")
    if r <= 0:
        raise DomainError("su11_perelomov_wavefunction_closed requires r > 0")
    log_pref = 0.5 * (math.log(2.0) - log_gamma(ell + 1.5))
    power = (2 * ell + 3) / 2.0 * (0.5 * math.log1p(-mod * mod) - cmath.log(1 - z))
    return cmath.exp(log_pref + power) * r ** (ell + 1) * cmath.exp(-(r * r / 2.0) * (1 + z) / (1 - z))


def su2_perelomov_state(n: int, z: complex) -> StateVector:
    """su(2) (spin) Perelomov state on the energy shell n.

    Finite sum over k = 0..2j of (1+|z|^2)^(-j) sqrt(binom(2j, k)) z^k on
    the shell ket with l = n - 2k; z = 0 gives the lowest-weight extremal
    |j, -j>, i.e. the maximal-l member of the shell.
    """
    j = su2_weight(n)
    two_j = int(round(2 * j))
    z = complex(z)
    mod = abs(z)
    theta = cmath.phase(z) if z != 0 else 0.0
    ln_pref = -j * math.log1p(mod * mod)
    lg_top = log_gamma(two_j + 1)
    amps: dict[QNums, complex] = {}
    for k in range(two_j + 1):
        if k > 0 and mod == 0.0:
            break
        log_mag = ln_pref + 0.5 * (lg_top - log_gamma(two_j - k + 1) - log_gamma(k + 1))
        if k > 0:
            log_mag += k * math.log(mod)
        amps[QNums(k, n - 2 * k)] = math.exp(log_mag) * cmath.exp(1j * k * theta)
    return StateVector(amps)


def xi_to_z(group: Group, xi: complex) -> complex:
    """Map the displacement parameter xi to the expansion label z.

    su(1,1): z = (xi/|xi|) tanh|xi| (into the unit disk);
    su(2):   z = (xi/|xi|) tan|xi|  (stereographic; poles at |xi| = pi/2 + k pi).
    """
    xi = complex(xi)
    mod = abs(xi)
    if mod == 0.0:
        return 0j
    if group is Group.SU11:
        return xi / mod * math.tanh(mod)
    if abs(math.cos(mod)) < 1e-12:
        raise DomainError(f"xi_to_z pole: |xi| = {mod} is within 1e-12 of an odd multiple of pi/2")
    return xi / mod * math.tan(mod)


def transition_probability(n: int, r_index: int, z_mod: float) -> float:
    """Probability that the shell-n su(2) Perelomov state has l = n - 2r.

    Binomial law binom(2j, r) |z|^(2r) / (1+|z|^2)^(2j) over r = 0..2j.
    """
    if z_mod < 0:
        raise DomainError(f"z_mod must be >= 0, got {z_mod}")
    j = su2_weight(n)
    two_j = int(round(2 * j))
    if not 0 <= r_index <= two_j:
        raise DomainError(f"r_index must lie in 0..{two_j} for n = {n}, got {r_index}")
    return math.comb(two_j, r_index) * z_mod ** (2 * r_index) / (1 + z_mod * z_mod) ** two_j
