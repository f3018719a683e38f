"""Quantum-number lattice, hierarchies, sparse states and wavefunctions.

Units: the oscillator stiffness lambda is fixed to 1 throughout storage;
it re-enters only as a time scale in :mod:`radosc.dynamics`.  The magnetic
quantum number is fixed to m = 0, so a state is labelled by the radial
number s and the orbital number l with principal number n = 2s + l.

The three hierarchy decompositions of the full state space:

* vertical   -- fixed l, s = 0, 1, ... (infinite; needs a truncation),
* horizontal -- fixed n, the degenerate energy shell,
* diagonal   -- fixed s + l = 2 j_C.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import DomainError
from .specfun import assoc_laguerre, assoc_laguerre_all, hyp1f1, legendre_p, log_gamma

__all__ = [
    "QNums",
    "StateVector",
    "HierarchyKind",
    "HierarchyId",
    "PRUNE_TOL",
    "energy",
    "degeneracy",
    "enumerate_hierarchy",
    "radial_wavefunction",
    "angular_wavefunction",
    "inner_product",
    "evaluate_density",
    "general_u_residual",
]

#: Amplitudes below this magnitude are dropped to keep sparsity honest.
PRUNE_TOL = 1e-15


@dataclass(frozen=True, order=True)
class QNums:
    """Lattice point (s, l); the principal number n = 2s + l is derived."""

    s: int
    ell: int

    def __post_init__(self):
        if self.s < 0 or self.ell < 0:
            raise DomainError(f"quantum numbers must be non-negative, got (s={self.s}, ell={self.ell})")

    @property
    def n(self) -> int:
        return 2 * self.s + self.ell

    def __repr__(self):  # compact: shows up in error messages
        return f"|s={self.s},ell={self.ell}>"


def energy(q: QNums) -> float:
    """Eigenvalue of the radial Hamiltonian at lambda = 1: 4s + 2l + 3."""
    return 4.0 * q.s + 2.0 * q.ell + 3.0


def degeneracy(n: int) -> int:
    """Number of (s, l) points on the energy shell n = 2s + l."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return n // 2 + 1 if n % 2 == 0 else (n + 1) // 2


class HierarchyKind(enum.Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"
    DIAGONAL = "diagonal"


@dataclass(frozen=True)
class HierarchyId:
    """One of the three hierarchy subspaces.

    ``label`` is l for vertical, n for horizontal and 2*j_C for diagonal
    hierarchies.  Vertical hierarchies are infinite and require
    ``truncation`` (the largest s to enumerate).
    """

    kind: HierarchyKind
    label: int
    truncation: int | None = None

    @staticmethod
    def vertical(ell: int, truncation: int) -> "HierarchyId":
        return HierarchyId(HierarchyKind.VERTICAL, ell, truncation)

    @staticmethod
    def horizontal(n: int) -> "HierarchyId":
        return HierarchyId(HierarchyKind.HORIZONTAL, n)

    @staticmethod
    def diagonal(two_j_c: int) -> "HierarchyId":
        return HierarchyId(HierarchyKind.DIAGONAL, two_j_c)


def enumerate_hierarchy(h: HierarchyId) -> list[QNums]:
    """Ordered lattice points of a hierarchy.

    Vertical: (0,l), (1,l), ..., (truncation,l).
    Horizontal: l descending from n in steps of 2 down to 0 or 1.
    Diagonal: l ascending 0..2j_C with s = 2j_C - l.
    """
    if h.label < 0:
        raise DomainError(f"hierarchy label must be >= 0, got {h.label}")
    if h.kind is HierarchyKind.VERTICAL:
        if h.truncation is None:
            raise DomainError("vertical hierarchies are infinite: a truncation is required")
        return [QNums(s, h.label) for s in range(h.truncation + 1)]
    if h.kind is HierarchyKind.HORIZONTAL:
        n = h.label
        return [QNums((n - ell) // 2, ell) for ell in range(n, -1, -2)]
    return [QNums(h.label - ell, ell) for ell in range(h.label + 1)]


class StateVector:
    """Sparse complex-amplitude map over :class:`QNums`.

    Instances are immutable values: every operation returns a new vector.
    Amplitudes smaller than :data:`PRUNE_TOL` in magnitude are never stored.
    """

    __slots__ = ("_amp",)

    def __init__(self, amplitudes: Mapping[QNums, complex] | Iterable[tuple[QNums, complex]] = ()):
        items = amplitudes.items() if isinstance(amplitudes, Mapping) else amplitudes
        amp: dict[QNums, complex] = {}
        for q, c in items:
            c = complex(c)
            if abs(c) >= PRUNE_TOL:
                amp[q] = amp.get(q, 0.0) + c
        self._amp = {q: c for q, c in amp.items() if abs(c) >= PRUNE_TOL}

    # -- constructors ----------------------------------------------------
    @classmethod
    def ket(cls, s: int, ell: int) -> "StateVector":
        return cls({QNums(s, ell): 1.0 + 0.0j})

    @classmethod
    def zero(cls) -> "StateVector":
        return cls()

    # -- mapping access ---------------------------------------------------
    def amplitude(self, q: QNums) -> complex:
        return self._amp.get(q, 0.0 + 0.0j)

    def items(self) -> Iterator[tuple[QNums, complex]]:
        return iter(self._amp.items())

    def support(self) -> list[QNums]:
        """Occupied lattice points, sorted by (l, s)."""
        return sorted(self._amp, key=lambda q: (q.ell, q.s))

    def __len__(self) -> int:
        return len(self._amp)

    def __bool__(self) -> bool:
        return bool(self._amp)

    # -- algebra ----------------------------------------------------------
    def scaled(self, c: complex) -> "StateVector":
        return StateVector({q: c * a for q, a in self._amp.items()})

    def __mul__(self, c: complex) -> "StateVector":
        return self.scaled(c)

    __rmul__ = __mul__

    def __add__(self, other: "StateVector") -> "StateVector":
        amp = dict(self._amp)
        for q, c in other._amp.items():
            amp[q] = amp.get(q, 0.0) + c
        return StateVector(amp)

    def __sub__(self, other: "StateVector") -> "StateVector":
        return self + other.scaled(-1.0)

    def norm(self) -> float:
        return math.sqrt(sum(abs(c) ** 2 for c in self._amp.values()))

    def normalized(self) -> "StateVector":
        n = self.norm()
        if n == 0.0:
            raise DomainError("cannot normalize the zero state")
        return self.scaled(1.0 / n)

    def allclose(self, other: "StateVector", tol: float = 1e-12) -> bool:
        keys = set(self._amp) | set(other._amp)
        return all(abs(self.amplitude(q) - other.amplitude(q)) <= tol for q in keys)

    def single_ell(self) -> int:
        """The common orbital number, or DomainError for mixed-l states."""
        ells = {q.ell for q in self._amp}
        if len(ells) != 1:
            raise DomainError(f"operation requires a single-l state, found orbital numbers {sorted(ells)}")
        return ells.pop()

    def max_s(self) -> int:
        if not self._amp:
            raise DomainError("zero state has no support")
        return max(q.s for q in self._amp)

    # -- serialization ----------------------------------------------------
    def to_json_dict(self) -> dict:
        entries = [
            {"s": q.s, "ell": q.ell, "re": self._amp[q].real, "im": self._amp[q].imag}
            for q in self.support()
        ]
        return {"entries": entries}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "StateVector":
        return cls({QNums(e["s"], e["ell"]): complex(e["re"], e["im"]) for e in data["entries"]})

    @classmethod
    def from_json(cls, text: str) -> "StateVector":
        return cls.from_json_dict(json.loads(text))

    def __repr__(self):
        body = ", ".join(f"{q}: {c:.6g}" for q, c in sorted(self._amp.items()))
        return f"StateVector({{{body}}})"


def inner_product(u: StateVector, v: StateVector) -> complex:
    """<u|v> with basis kets orthonormal in both indices (s and l)."""
    if len(u._amp) > len(v._amp):
        return complex(sum(u._amp[q].conjugate() * v._amp[q] for q in v._amp if q in u._amp))
    return complex(sum(u._amp[q].conjugate() * v._amp[q] for q in u._amp if q in v._amp))


def _radial_norm(s: int, ell: int) -> float:
    return math.exp(0.5 * (math.log(2.0) + log_gamma(s + 1) - log_gamma(s + ell + 1.5)))


def radial_wavefunction(q: QNums, r):
    """Normalized radial function u_{s,l}(r) at lambda = 1.

    u_{s,l}(r) = sqrt(2 Gamma(s+1)/Gamma(s+l+3/2)) r^(l+1) e^(-r^2/2)
                 L_s^(l+1/2)(r^2).

    ``r`` may be a positive scalar or an array of positive values.
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise DomainError("radial_wavefunction requires r > 0")
    val = (
        _radial_norm(q.s, q.ell)
        * r_arr ** (q.ell + 1)
        * np.exp(-r_arr * r_arr / 2.0)
        * assoc_laguerre(q.s, q.ell + 0.5, r_arr * r_arr)
    )
    return val if val.ndim else float(val)


def angular_wavefunction(ell: int, theta: float) -> float:
    """Polar factor sqrt((2l+1)/2) P_l(cos theta) for m = 0."""
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"theta must lie in [0, pi], got {theta}")
    return math.sqrt((2 * ell + 1) / 2.0) * legendre_p(ell, math.cos(theta))


def _u_matrix(ell: int, s_values: list[int], r_grid: np.ndarray) -> np.ndarray:
    """u_{s,l}(r) for the requested s values, shape (len(s_values), len(r))."""
    x = r_grid * r_grid
    lag = assoc_laguerre_all(max(s_values), ell + 0.5, x)
    envelope = r_grid ** (ell + 1) * np.exp(-x / 2.0)
    return np.array([_radial_norm(s, ell) * envelope * lag[s] for s in s_values])


def evaluate_density(state: StateVector, r_grid) -> np.ndarray:
    """Radial probability density |sum_s c_s u_{s,l}(r)|^2 on a grid.

    Only defined for single-l states; mixed-l superpositions would need the
    angular factors and a theta integration and are rejected.
    """
    r_grid = np.asarray(r_grid, dtype=float)
    if np.any(r_grid <= 0):
        raise DomainError("density grid points must be positive")
    ell = state.single_ell()
    s_values = sorted(q.s for q in state.support())
    coeffs = np.array([state.amplitude(QNums(s, ell)) for s in s_values])
    psi = coeffs @ _u_matrix(ell, s_values, r_grid).astype(complex)
    return np.abs(psi) ** 2


def _u_general(E_dimless: float, ell: int, gamma: float, delta: float, r: float) -> float:
    """Two-branch solution of the radial equation at energy E (lambda = 1).

    u(r) = r^(l+1) e^(-r^2/2) [ gamma 1F1(l/2+3/4-E/2; l+3/2; r^2)
           + delta r^(-(2l+1)) 1F1(-l/2+1/4-E/2; -l+1/2; r^2) ].
    """
    x = r * r
    val = 0.0
    if gamma != 0.0:
        val += gamma * hyp1f1(ell / 2 + 0.75 - E_dimless / 2, ell + 1.5, x)
    if delta != 0.0:
        val += delta * r ** (-(2 * ell + 1)) * hyp1f1(-ell / 2 + 0.25 - E_dimless / 2, -ell + 0.5, x)
    return r ** (ell + 1) * math.exp(-x / 2) * val


def general_u_residual(
    E_dimless: float, ell: int, gamma: float, delta: float, r: float, h: float = 1e-4
) -> float:
    """Residual of -u'' + [l(l+1)/r^2 + r^2 - 2E] u at radius r.

    The second derivative is taken by second-order central differences with
    step ``h``, so a true solution leaves a residual of order h^2 times the
    local fourth derivative.  Works for any E, quantized or not, and for
    either branch (gamma or delta) of the general solution.
    """
    if r <= 0:
        raise DomainError("general_u_residual requires r > 0")
    u0 = _u_general(E_dimless, ell, gamma, delta, r)
    up = _u_general(E_dimless, ell, gamma, delta, r + h)
    um = _u_general(E_dimless, ell, gamma, delta, r - h)
    upp = (up - 2.0 * u0 + um) / (h * h)
    return -upp + (ell * (ell + 1) / (r * r) + r * r - 2.0 * E_dimless) * u0
