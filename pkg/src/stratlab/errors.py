"""Exception types raised across stratlab.

Every domain error derives from :class:`StratlabError`; the CLI prints the
class name of the error verbatim, so names are part of the interface.
"""


class StratlabError(Exception):
    """Base class for all domain errors."""


# weyl
class NotTabulated(StratlabError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotInWq(StratlabError, ValueError):
    pass


# polygons
class PolygonError(StratlabError, ValueError):
    pass


class HeightMismatch(PolygonError):
    pass


class DimensionMismatch(PolygonError):
    pass


class NotSymmetric(PolygonError):
    pass


class NotCoprime(PolygonError):
    pass


class QMismatch(PolygonError):
    pass


class BadSignature(StratlabError, ValueError):
    pass


# finalseq
class InvalidFinalSequence(StratlabError, ValueError):
    pass


class IndexOutOfRange(StratlabError, IndexError):
    pass


# modp / crystal
class NoSplitting(StratlabError, ValueError):
    pass


class EtaInvalid(StratlabError, ValueError):
    pass


class NotOddPrime(StratlabError, ValueError):
    pass


class NonIntegerEntries(StratlabError, TypeError):
    pass


# strata
class WrongSignature(StratlabError, ValueError):
    pass


class Inconsistent(StratlabError):
    pass


class WitnessFailure(StratlabError):
    def __init__(self, leg, message):
        super().__init__(f"{leg}: {message}")
        self.leg = leg


# io / cli
class ParseError(StratlabError, ValueError):
    pass


class SchemaViolation(StratlabError, ValueError):
    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path


class InvariantViolation(StratlabError, ValueError):
    def __init__(self, check, message, path="$"):
        super().__init__(f"{path}: {check}: {message}")
        self.check = check
        self.path = path
