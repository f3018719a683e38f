"""Ladder-operator families on the (s, l) lattice and finite su(2) matrices.

Single-ket actions (lambda = 1 units), extended linearly to sparse states:

    a+ |s,l> = sqrt(s+1)           |s+1, l-1>     (unphysical on l = 0)
    a- |s,l> = sqrt(s)             |s-1, l+1>
    b+ |s,l> = sqrt(s+l+3/2)       |s,   l+1>
    b- |s,l> = sqrt(s+l+1/2)       |s,   l-1>     (unphysical on l = 0)
    L+ |s,l> = sqrt((s+1)(s+l+3/2))|s+1, l>
    L- |s,l> = sqrt(s(s+l+1/2))    |s-1, l>
    L3 |s,l> = (s + (2l+3)/4)      |s,   l>
    J+ |s,l> = sqrt((s+1)(s+l+1/2))|s+1, l-2>     (unphysical on l in {0,1})
    J- |s,l> = sqrt(s(s+l+3/2))    |s-1, l+2>
    J3 |s,l> = -(2l+1)/4           |s,   l>
    C+ |s,l> = sqrt((s+1) l)       |s+1, l-1>
    C- |s,l> = sqrt(s (l+1))       |s-1, l+1>
    C3 |s,l> = (s-l)/2             |s,   l>
    Ns |s,l> = s                   |s,   l>
    Nl |s,l> = (s+l+1/2)           |s,   l>

A vanishing coefficient (e.g. a- on s = 0, C+ on l = 0) is genuine
annihilation and returns the zero state; a boundary guard (a+ or b- on
l = 0, J+ on l < 2) raises :class:`UnphysicalStateError`.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DomainError, UnphysicalStateError
from .statespace import QNums, StateVector

__all__ = [
    "OpKind",
    "apply",
    "commutator_residual",
    "commutator_suite",
    "RepMatrices",
    "su2_rep_matrices",
    "hubbard_su2_on_basis",
    "DickeCase",
    "DickeBasis",
    "dicke_basis",
    "su2_weight",
]


class OpKind(enum.Enum):
    A_PLUS = "a+"
    A_MINUS = "a-"
    B_PLUS = "b+"
    B_MINUS = "b-"
    L_PLUS = "L+"
    L_MINUS = "L-"
    L3 = "L3"
    J_PLUS = "J+"
    J_MINUS = "J-"
    J3 = "J3"
    C_PLUS = "C+"
    C_MINUS = "C-"
    C3 = "C3"
    N_S = "Ns"
    N_ELL = "Nl"


def _guard(kind: OpKind, q: QNums, reason: str):
    raise UnphysicalStateError(f"{kind.value} on {q} is unphysical ({reason})")


def _rule(kind: OpKind, q: QNums) -> tuple[float, QNums | None]:
    """Coefficient and target ket; target None encodes a diagonal action."""
    s, ell = q.s, q.ell
    if kind is OpKind.A_PLUS:
        if ell == 0:
            _guard(kind, q, "would lower the orbital number below zero")
        return math.sqrt(s + 1), QNums(s + 1, ell - 1)
    if kind is OpKind.A_MINUS:
        return (math.sqrt(s), QNums(s - 1, ell + 1)) if s > 0 else (0.0, None)
    if kind is OpKind.B_PLUS:
        return math.sqrt(s + ell + 1.5), QNums(s, ell + 1)
    if kind is OpKind.B_MINUS:
        if ell == 0:
            _guard(kind, q, "would lower the orbital number below zero")
        return math.sqrt(s + ell + 0.5), QNums(s, ell - 1)
    if kind is OpKind.L_PLUS:
        return math.sqrt((s + 1) * (s + ell + 1.5)), QNums(s + 1, ell)
    if kind is OpKind.L_MINUS:
        return (math.sqrt(s * (s + ell + 0.5)), QNums(s - 1, ell)) if s > 0 else (0.0, None)
    if kind is OpKind.L3:
        return s + (2 * ell + 3) / 4.0, q
    if kind is OpKind.J_PLUS:
        if ell < 2:
            _guard(kind, q, "would lower the orbital number below zero")
        return math.sqrt((s + 1) * (s + ell + 0.5)), QNums(s + 1, ell - 2)
    if kind is OpKind.J_MINUS:
        return (math.sqrt(s * (s + ell + 1.5)), QNums(s - 1, ell + 2)) if s > 0 else (0.0, None)
    if kind is OpKind.J3:
        return -(2 * ell + 1) / 4.0, q
    if kind is OpKind.C_PLUS:
        coeff = math.sqrt((s + 1) * ell)
        return (coeff, QNums(s + 1, ell - 1)) if coeff > 0 else (0.0, None)
    if kind is OpKind.C_MINUS:
        return (math.sqrt(s * (ell + 1)), QNums(s - 1, ell + 1)) if s > 0 else (0.0, None)
    if kind is OpKind.C3:
        return (s - ell) / 2.0, q
    if kind is OpKind.N_S:
        return float(s), q
    return s + ell + 0.5, q  # N_ELL


def apply(kind: OpKind, state: StateVector) -> StateVector:
    """Apply one ladder operator to a sparse state (linear extension)."""
    out: dict[QNums, complex] = {}
    for q, c in state.items():
        coeff, target = _rule(kind, q)
        if target is None or coeff == 0.0:
            continue
        out[target] = out.get(target, 0.0) + coeff * c
    return StateVector(out)


ExpectedCombo = Sequence[tuple[complex, OpKind | None]]


def commutator_residual(
    kind_a: OpKind,
    kind_b: OpKind,
    expected: ExpectedCombo,
    basis: Sequence[QNums],
) -> float:
    """max over basis kets of ||([A, B] - expected) |ket>||.

    ``expected`` is a linear combination given as (coefficient, OpKind)
    pairs; a ``None`` kind stands for the identity.  The basis must keep
    both operator orderings inside the physical lattice, otherwise the
    underlying :class:`UnphysicalStateError` propagates.
    """
    worst = 0.0
    for q in basis:
        ket = StateVector.ket(q.s, q.ell)
        comm = apply(kind_a, apply(kind_b, ket)) - apply(kind_b, apply(kind_a, ket))
        for coeff, kind in expected:
            term = ket if kind is None else apply(kind, ket)
            comm = comm - term.scaled(coeff)
        worst = max(worst, comm.norm())
    return worst


def su2_weight(n: int) -> float:
    """Highest weight j of the energy shell n: n/4 (n even), (n-1)/4 (n odd)."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return n / 4.0 if n % 2 == 0 else (n - 1) / 4.0


@dataclass(frozen=True)
class RepMatrices:
    """Finite su(2) representation in Hubbard (elementary-matrix) form.

    S3 = diag(j, j-1, ..., -j); S+ carries sqrt(k(2j+1-k)) on the
    superdiagonal and S- is its transpose.  ``basis_map[p]`` names the
    lattice ket represented by column p (empty for the dimension-only
    construction of :func:`hubbard_su2_on_basis`).
    """

    j: float
    s3: np.ndarray
    s_plus: np.ndarray
    s_minus: np.ndarray
    basis_map: list[QNums] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.s3.shape[0]


def _hubbard_triple(j: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    d = int(round(2 * j + 1))
    s3 = np.diag([j - p for p in range(d)])
    s_plus = np.zeros((d, d))
    for k in range(1, d):
        s_plus[k - 1, k] = math.sqrt(k * (2 * j + 1 - k))
    return s3, s_plus, s_plus.T.copy()


def su2_rep_matrices(n: int) -> RepMatrices:
    """su(2) generators acting on the degenerate energy shell n.

    The basis column p (p = 1..2j+1) is the shell ket with orbital number
    l = 2(p-1) for n even and l = 2p-1 for n odd, so the first column is
    the highest-weight vector |j, j> and the last is |j, -j>.
    """
    j = su2_weight(n)
    s3, s_plus, s_minus = _hubbard_triple(j)
    d = int(round(2 * j + 1))
    if n % 2 == 0:
        ells = [2 * (p - 1) for p in range(1, d + 1)]
    else:
        ells = [2 * p - 1 for p in range(1, d + 1)]
    basis = [QNums((n - ell) // 2, ell) for ell in ells]
    return RepMatrices(j, s3, s_plus, s_minus, basis)


def hubbard_su2_on_basis(dim: int) -> RepMatrices:
    """Same matrix pattern parameterized by the dimension alone.

    The caller attaches its own orthonormal basis (e.g. a Dicke-like one),
    so ``basis_map`` is left empty.
    """
    if dim < 1:
        raise DomainError(f"dimension must be >= 1, got {dim}")
    j = (dim - 1) / 2.0
    s3, s_plus, s_minus = _hubbard_triple(j)
    return RepMatrices(j, s3, s_plus, s_minus, [])


def _lattice(s_range: range, ell_range: range) -> list[QNums]:
    return [QNums(s, ell) for s in s_range for ell in ell_range]


def commutator_suite(smax: int = 8, lmax: int = 8) -> list[tuple[str, float]]:
    """Residuals of the full commutator table over an interior lattice.

    Runs every boson, su(1,1), su(2) and diagonal-su(2) identity on the
    kets 2 <= s <= smax, 2 <= l <= lmax.  The two identities whose double
    action reaches l - 3 ([J+,a+] = 0 and [J+,b-] = 0) use l >= 3 so both
    orderings respect the boundary guards.
    """
    if smax < 2 or lmax < 3:
        raise DomainError("commutator_suite needs smax >= 2 and lmax >= 3")
    K = OpKind
    base = _lattice(range(2, smax + 1), range(2, lmax + 1))
    deep = _lattice(range(2, smax + 1), range(3, lmax + 1))
    I = None  # identity in expected-combination entries
    table: list[tuple[str, OpKind, OpKind, ExpectedCombo, list[QNums]]] = [
        # boson pair a
        ("[a-;a+]=I", K.A_MINUS, K.A_PLUS, [(1, I)], base),
        ("[Ns;a+]=a+", K.N_S, K.A_PLUS, [(1, K.A_PLUS)], base),
        ("[Ns;a-]=-a-", K.N_S, K.A_MINUS, [(-1, K.A_MINUS)], base),
        # boson pair b
        ("[b-;b+]=I", K.B_MINUS, K.B_PLUS, [(1, I)], base),
        ("[Nl;b+]=b+", K.N_ELL, K.B_PLUS, [(1, K.B_PLUS)], base),
        ("[Nl;b-]=-b-", K.N_ELL, K.B_MINUS, [(-1, K.B_MINUS)], base),
        # su(1,1)
        ("[L-;L+]=2L3", K.L_MINUS, K.L_PLUS, [(2, K.L3)], base),
        ("[L3;L+]=L+", K.L3, K.L_PLUS, [(1, K.L_PLUS)], base),
        ("[L3;L-]=-L-", K.L3, K.L_MINUS, [(-1, K.L_MINUS)], base),
        # two-boson cross relations
        ("[a-;b-]=0", K.A_MINUS, K.B_MINUS, [], base),
        ("[a+;b+]=0", K.A_PLUS, K.B_PLUS, [], base),
        ("[a-;b+]=0", K.A_MINUS, K.B_PLUS, [], base),
        ("[b-;a+]=0", K.B_MINUS, K.A_PLUS, [], base),
        ("[L+;a+]=0", K.L_PLUS, K.A_PLUS, [], base),
        ("[L-;a-]=0", K.L_MINUS, K.A_MINUS, [], base),
        ("[L+;b+]=0", K.L_PLUS, K.B_PLUS, [], base),
        ("[L-;b-]=0", K.L_MINUS, K.B_MINUS, [], base),
        ("[L+;a-]=-b+", K.L_PLUS, K.A_MINUS, [(-1, K.B_PLUS)], base),
        ("[L-;a+]=b-", K.L_MINUS, K.A_PLUS, [(1, K.B_MINUS)], base),
        ("[L+;b-]=-a+", K.L_PLUS, K.B_MINUS, [(-1, K.A_PLUS)], base),
        ("[L-;b+]=a-", K.L_MINUS, K.B_PLUS, [(1, K.A_MINUS)], base),
        ("[L3;a+]=a+/2", K.L3, K.A_PLUS, [(0.5, K.A_PLUS)], base),
        ("[L3;a-]=-a-/2", K.L3, K.A_MINUS, [(-0.5, K.A_MINUS)], base),
        ("[L3;b+]=b+/2", K.L3, K.B_PLUS, [(0.5, K.B_PLUS)], base),
        ("[L3;b-]=-b-/2", K.L3, K.B_MINUS, [(-0.5, K.B_MINUS)], base),
        # su(2) on the energy shells
        ("[J-;J+]=-2J3", K.J_MINUS, K.J_PLUS, [(-2, K.J3)], base),
        ("[J3;J+]=J+", K.J3, K.J_PLUS, [(1, K.J_PLUS)], base),
        ("[J3;J-]=-J-", K.J3, K.J_MINUS, [(-1, K.J_MINUS)], base),
        ("[J+;a+]=0", K.J_PLUS, K.A_PLUS, [], deep),
        ("[J-;a-]=0", K.J_MINUS, K.A_MINUS, [], base),
        ("[J+;b-]=0", K.J_PLUS, K.B_MINUS, [], deep),
        ("[J-;b+]=0", K.J_MINUS, K.B_PLUS, [], base),
        ("[J+;a-]=-b-", K.J_PLUS, K.A_MINUS, [(-1, K.B_MINUS)], base),
        ("[J-;a+]=b+", K.J_MINUS, K.A_PLUS, [(1, K.B_PLUS)], base),
        ("[J+;b+]=a+", K.J_PLUS, K.B_PLUS, [(1, K.A_PLUS)], base),
        ("[J-;b-]=-a-", K.J_MINUS, K.B_MINUS, [(-1, K.A_MINUS)], base),
        ("[J3;a+]=a+/2", K.J3, K.A_PLUS, [(0.5, K.A_PLUS)], base),
        ("[J3;a-]=-a-/2", K.J3, K.A_MINUS, [(-0.5, K.A_MINUS)], base),
        ("[J3;b-]=b-/2", K.J3, K.B_MINUS, [(0.5, K.B_MINUS)], base),
        ("[J3;b+]=-b+/2", K.J3, K.B_PLUS, [(-0.5, K.B_PLUS)], base),
        # diagonal su(2)
        ("[C-;C+]=-2C3", K.C_MINUS, K.C_PLUS, [(-2, K.C3)], base),
        ("[C3;C+]=C+", K.C3, K.C_PLUS, [(1, K.C_PLUS)], base),
        ("[C3;C-]=-C-", K.C3, K.C_MINUS, [(-1, K.C_MINUS)], base),
    ]
    return [
        (name, commutator_residual(ka, kb, combo, basis))
        for name, ka, kb, combo, basis in table
    ]


class DickeCase(enum.Enum):
    D1 = "D1"
    D2 = "D2"
    D3 = "D3"
    D4 = "D4"
    E4A = "E4a"
    E4B = "E4b"


@dataclass(frozen=True)
class DickeBasis:
    """Orthonormal Dicke-like basis, ordered by weight mu = j, ..., -j.

    The ordering matches the Hubbard convention S3 = diag(j, ..., -j), so
    ``vectors[p]`` is the eigenvector of weight j - p when paired with
    :func:`hubbard_su2_on_basis` of the same dimension.
    """

    case: DickeCase
    chi: float
    j: float
    vectors: list[StateVector]


def _equal_weight(kets: list[QNums], chi: float) -> StateVector:
    # successive kets pick up phases e^{-i k chi}; chi = 0 gives the plain sum
    w = 1.0 / math.sqrt(len(kets))
    return StateVector({q: w * cmath.exp(-1j * k * chi) for k, q in enumerate(kets)})


# weight-descending ket lists; inner lists are equal-weight intermediaries
_DICKE_TABLE: dict[DickeCase, list[list[QNums]]] = {
    # 3-dim bases attached to the E2/E3 shells and the l=1 / l=2 hierarchies
    DickeCase.D1: [[QNums(1, 0)], [QNums(0, 1), QNums(1, 1)], [QNums(0, 2)]],
    DickeCase.D2: [[QNums(0, 1)], [QNums(1, 0), QNums(0, 2)], [QNums(1, 1)]],
    DickeCase.D3: [[QNums(1, 1)], [QNums(1, 2), QNums(0, 2)], [QNums(0, 3)]],
    DickeCase.D4: [[QNums(0, 2)], [QNums(1, 1), QNums(0, 3)], [QNums(1, 2)]],
    # 5-dim basis attached to the E4 shell
    DickeCase.E4A: [
        [QNums(2, 0)],
        [QNums(1, 1), QNums(2, 1)],
        [QNums(0, 2), QNums(1, 2), QNums(2, 2)],
        [QNums(0, 3), QNums(1, 3)],
        [QNums(0, 4)],
    ],
}


def dicke_basis(case: DickeCase, chi: float = 0.0) -> DickeBasis:
    """Explicit Dicke-like basis for one of the constructible cases.

    ``chi`` is the relative phase of the equal-weight intermediaries
    (defaulting to 0).  Case E4b (the mirror 5-dim representation) has no
    pinned-down vector set and is rejected.
    """
    if case not in _DICKE_TABLE:
        raise DomainError(f"unknown or non-constructible Dicke case: {case}")
    groups = _DICKE_TABLE[case]
    vectors = [_equal_weight(kets, chi) for kets in groups]
    return DickeBasis(case, chi, (len(groups) - 1) / 2.0, vectors)
