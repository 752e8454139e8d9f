#!/usr/bin/env python3
"""
Exception hierarchy for the bicirculant toolkit and the CLI exit-code contract.
"""

# Exit codes are a stable contract of the CLI
EXIT_OK = 0
EXIT_NON_HAMILTONIAN = 1
EXIT_PARSE_ERROR = 2
EXIT_INVALID_SPEC = 3
EXIT_UNKNOWN = 4


class BicirculantError(Exception):
    """Base class for every domain error raised by the toolkit."""

    exit_code = EXIT_NON_HAMILTONIAN

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details


class SpecParseError(BicirculantError):
    exit_code = EXIT_PARSE_ERROR


class InvalidSpec(BicirculantError):
    exit_code = EXIT_INVALID_SPEC


class NotInS(InvalidSpec):
    pass


class NotAUnit(InvalidSpec):
    pass


class NotApplicable(InvalidSpec):
    pass


class Disconnected(InvalidSpec):
    pass


class TooLarge(BicirculantError):
    exit_code = EXIT_INVALID_SPEC


class SearchBudgetExceeded(BicirculantError):
    """A search stopped at its node budget; says nothing about absence."""

    exit_code = EXIT_UNKNOWN


class IsomorphismCheckFailed(BicirculantError):
    pass


class ClassificationFailed(BicirculantError):
    pass


class SurgeryBroken(BicirculantError):
    """Raised with the first violated check: edges, degree, coverage, connectivity or endpoints."""

    def __init__(self, message, check, **details):
        super().__init__(message, check=check, **details)
        self.check = check


class ResolutionFailed(BicirculantError):
    pass


class PreconditionUnmet(BicirculantError):
    pass


class NotAlternating(BicirculantError):
    pass


class OddM0(BicirculantError):
    pass


class WitnessInvalid(BicirculantError):
    pass


class MissingOuterEdge(BicirculantError):
    pass


class PathsInconsistent(BicirculantError):
    pass


class ElusiveInput(BicirculantError):
    pass


class WiringFailed(BicirculantError):
    pass


class NoValidX(BicirculantError):
    pass


class NotFound(BicirculantError):
    pass
