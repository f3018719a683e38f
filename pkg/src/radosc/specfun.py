"""Self-contained special-function kernel.

Everything here is evaluated from power series or stable recurrences so the
rest of the package has no external special-function dependency:

* ``assoc_laguerre`` -- associated Laguerre polynomials L_k^(alpha)(x),
  three-term recurrence in the degree k.
* ``legendre_p``     -- Legendre polynomials P_l(x), Bonnet recurrence.
* ``bessel_i``       -- modified Bessel function of the first kind,
  I_nu(x) = (x/2)^nu * sum_k (x^2/4)^k / (k! Gamma(k+1+nu)).
* ``bessel_j_complex`` -- Bessel function of the first kind for complex
  argument, J_nu(w) = sum_k (-1)^k (w/2)^(nu+2k) / (k! Gamma(k+nu+1)),
  with w^nu on the principal branch.
* ``hyp1f1``         -- confluent hypergeometric 1F1(a;c;x) power series.
* ``log_gamma``      -- ln Gamma(x) for x > 0.

All Gamma ratios used elsewhere in the package go through
``exp(log_gamma(..) - log_gamma(..))`` so that quantum numbers up to at
least l = 50 stay clear of double overflow.
"""

from __future__ import annotations

import math
import cmath
import os
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

__all__ = [
    "SeriesControl",
    "log_gamma",
    "gamma_ratio",
    "assoc_laguerre",
    "assoc_laguerre_all",
    "legendre_p",
    "bessel_i",
    "bessel_j_complex",
    "hyp1f1",
]

_ENV_MAX_TERMS = "RADOSC_MAX_TERMS"


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for all power series in this module.

    A series stops once ``consecutive_small`` successive terms each satisfy
    ``|term| <= rel_tol * |partial sum|``; a single accidentally small term
    of an alternating series therefore never terminates the sum early.
    Exceeding ``max_terms`` raises :class:`ConvergenceError`.
    """

    rel_tol: float = 1e-14
    max_terms: int = 10_000
    consecutive_small: int = 3

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")
        if self.consecutive_small < 1:
            raise DomainError("consecutive_small must be >= 1")

    @classmethod
    def default(cls) -> "SeriesControl":
        """Default policy; RADOSC_MAX_TERMS in the environment overrides max_terms."""
        raw = os.environ.get(_ENV_MAX_TERMS)
        if raw is None:
            return cls()
        try:
            return cls(max_terms=int(raw))
        except ValueError as exc:
            raise DomainError(f"{_ENV_MAX_TERMS} must be an integer, got {raw!r}") from exc


def log_gamma(x: float) -> float:
    """Return ln Gamma(x) for real x > 0.

    Backed by the C library ``lgamma`` behind a strict domain check; the
    reflection-formula branch for non-positive arguments is deliberately
    not exposed.
    """
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def gamma_ratio(top: float, bottom: float) -> float:
    """Gamma(top)/Gamma(bottom) evaluated in log space (both args > 0)."""
    return math.exp(log_gamma(top) - log_gamma(bottom))


def assoc_laguerre(k: int, alpha: float, x):
    """Associated Laguerre polynomial L_k^(alpha)(x).

    Uses the three-term recurrence

        (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1},

    which is stable in the upward direction.  ``x`` may be a scalar or a
    numpy array; the result matches its shape.
    """
    if k < 0:
        raise DomainError(f"Laguerre degree must be >= 0, got {k}")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if k == 0:
        return prev if prev.ndim else float(prev)
    cur = 1.0 + alpha - x
    for m in range(1, k):
        prev, cur = cur, ((2 * m + 1 + alpha - x) * cur - (m + alpha) * prev) / (m + 1)
    return cur if cur.ndim else float(cur)


def assoc_laguerre_all(k_max: int, alpha: float, x: np.ndarray) -> np.ndarray:
    """All L_k^(alpha)(x) for k = 0..k_max, shape (k_max+1, len(x))."""
    x = np.asarray(x, dtype=float)
    out = np.empty((k_max + 1,) + x.shape)
    out[0] = 1.0
    if k_max == 0:
        return out
    out[1] = 1.0 + alpha - x
    for m in range(1, k_max):
        out[m + 1] = ((2 * m + 1 + alpha - x) * out[m] - (m + alpha) * out[m - 1]) / (m + 1)
    return out


def legendre_p(ell: int, x: float) -> float:
    """Legendre polynomial P_l(x) on [-1, 1] via the Bonnet recurrence."""
    if ell < 0:
        raise DomainError(f"Legendre degree must be >= 0, got {ell}")
    if abs(x) > 1.0:
        raise DomainError(f"legendre_p requires |x| <= 1, got {x}")
    prev, cur = 1.0, x
    if ell == 0:
        return prev
    for m in range(1, ell):
        prev, cur = cur, ((2 * m + 1) * x * cur - m * prev) / (m + 1)
    return cur


def _sum_series(first_term, ratio, ctl: SeriesControl, label: str):
    """Sum term_0 + term_0*ratio(0) + ... under the SeriesControl stopping rule.

    ``ratio(k)`` maps term_k to term_{k+1}.  Works for real or complex terms.
    """
    term = first_term
    total = term
    small = 0
    for k in range(ctl.max_terms):
        term = term * ratio(k)
        total += term
        if abs(term) <= ctl.rel_tol * abs(total):
            small += 1
            if small >= ctl.consecutive_small:
                return total
        else:
            small = 0
    raise ConvergenceError(f"{label}: no convergence within {ctl.max_terms} terms")


def bessel_i(nu: float, x: float, ctl: SeriesControl | None = None) -> float:
    """Modified Bessel function of the first kind I_nu(x), nu >= 0, x >= 0."""
    if nu < 0:
        raise DomainError(f"bessel_i requires nu >= 0, got {nu}")
    if x < 0:
        raise DomainError(f"bessel_i requires x >= 0, got {x}")
    if x == 0.0:
        return 1.0 if nu == 0 else 0.0
    ctl = ctl or SeriesControl.default()
    first = math.exp(nu * math.log(x / 2) - log_gamma(nu + 1))
    q = x * x / 4.0
    return _sum_series(first, lambda k: q / ((k + 1) * (k + 1 + nu)), ctl, "bessel_i")


def bessel_j_complex(nu: float, w: complex, ctl: SeriesControl | None = None) -> complex:
    """Bessel function of the first kind J_nu(w) for complex w, nu >= 0.

    The prefactor (w/2)^nu is taken on the principal branch, i.e. with
    arg(w) in (-pi, pi].  A parameter written as z = |z| e^{-i phi} with
    phi in [0, 2pi) therefore maps to principal argument -phi for
    phi <= pi and 2pi - phi above.  For large |w| the alternating series
    loses relative accuracy to cancellation (roughly e^{|Im w|+|w|} * eps);
    callers needing the far oscillatory regime should prefer a
    representation that damps it (see the closed-form cross-checks).
    """
    if nu < 0:
        raise DomainError(f"bessel_j_complex requires nu >= 0, got {nu}")
    w = complex(w)
    if w == 0:
        return complex(1.0 if nu == 0 else 0.0)
    ctl = ctl or SeriesControl.default()
    first = cmath.exp(nu * cmath.log(w / 2) - log_gamma(nu + 1))
    q = w * w / 4.0
    return _sum_series(first, lambda k: -q / ((k + 1) * (k + 1 + nu)), ctl, "bessel_j_complex")


def hyp1f1(a: float, c: float, x: float, ctl: SeriesControl | None = None) -> float:
    """Confluent hypergeometric function 1F1(a; c; x) by its power series.

    For a = -k a non-positive integer the series terminates after k+1
    terms (the remaining terms vanish identically).  c must not be a
    non-positive integer.
    """
    if c <= 0 and c == int(c):
        raise DomainError(f"hyp1f1 pole: c must not be a non-positive integer, got {c}")
    ctl = ctl or SeriesControl.default()
    return _sum_series(1.0, lambda k: (a + k) * x / ((c + k) * (k + 1)), ctl, "hyp1f1")
