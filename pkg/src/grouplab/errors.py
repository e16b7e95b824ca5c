# -*- coding: utf-8 -*-
"""Exception hierarchy for grouplab.

Every domain error is a ValueError so callers that only know about
ValueError keep working. The CLI maps these to exit codes:
- SpecParseError -> 2
- ParameterError, DocumentError, TooLarge -> 3
"""


class GroupLabError(ValueError):
    """Base class for all grouplab errors."""


class OrderMismatch(GroupLabError):
    """Operands live in cyclotomic rings of different order."""


class CapExceeded(GroupLabError):
    """Closure produced more elements than the configured cap."""


class NotNormal(GroupLabError):
    """A quotient was requested by a subgroup that is not normal."""


class BadWord(GroupLabError):
    """A relation word could not be parsed or references a missing generator."""


class ParameterError(GroupLabError):
    """A family constructor was called with parameters outside its domain."""


class OddParameter(ParameterError):
    """Dicyclic groups require an even parameter."""


class InvalidTwist(ParameterError):
    """The twist k of C_n x| C_2 is not a unit square root of 1 modulo n."""


class TooLarge(GroupLabError):
    """The group or lattice is beyond the supported analysis bound."""


class NotASubgroup(GroupLabError):
    """An element set is not closed under the group operation."""


class SpecParseError(GroupLabError):
    """A family spec string does not match the grammar."""


class DocumentError(GroupLabError):
    """A group document failed validation on load."""
