"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: :class:`DomainError` (and subclasses)
exit with 2, :class:`ConvergenceError` with 3.
"""


class RadOscError(Exception):
    """Base class for all radosc errors."""


class DomainError(RadOscError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(RadOscError, RuntimeError):
    """A series did not satisfy its stopping rule within the term budget."""


class UnphysicalStateError(DomainError):
    """A ladder operator was applied to a ket outside its boundary guard.

    Distinct from annihilation: a zero coefficient returns the zero state,
    while a guard violation (e.g. lowering the orbital number below zero)
    raises this error naming the offending ket and operator.
    """


class NoClassicalRegionError(DomainError):
    """The mean energy lies below the effective-potential minimum."""
