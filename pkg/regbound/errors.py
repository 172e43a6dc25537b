# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Exception hierarchy shared by every engine.

The command-line front end maps any RegboundError to exit code 1 and prints
its message verbatim, so messages name the violated precondition.
"""


class RegboundError(Exception):
    """Base class for all domain errors."""


class DomainError(RegboundError):
    """An argument is outside the domain of the operation."""


class InconsistentSequenceError(RegboundError):
    """A long exact sequence forces a negative dimension."""


class UncertainValueError(RegboundError):
    """An exact value was requested where only an interval is known."""


class CertificationError(RegboundError):
    """A scan cannot certify vanishing from the available data."""


class NonExactTableError(RegboundError):
    """A Betti table produces a negative Hilbert function."""


class DegenerateLocusError(RegboundError):
    """The class defining a dependency locus vanishes identically."""
