"""Exception hierarchy.

Every error raised by a construction carries a short ``tag`` naming the
violated condition, so the CLI can report it without parsing messages.
"""


class NIEPError(Exception):
    tag = "error"

    def __init__(self, message: str, tag: str | None = None):
        super().__init__(message)
        if tag is not None:
            self.tag = tag


class NotClosed(NIEPError):
    tag = "not-closed"


class NoPerron(NIEPError):
    tag = "no-perron"


class NoConvergence(NIEPError):
    tag = "no-convergence"


class ZeroPerronEntry(NIEPError):
    tag = "zero-perron-entry"


class NoRealEigvec(NIEPError):
    tag = "no-real-eigvec"


class PositiveEigvec(NIEPError):
    tag = "positive-eigvec"


class NoComplexPair(NIEPError):
    tag = "no-complex-pair"


class PreconditionFailed(NIEPError):
    tag = "precondition"


class NegativeCoefficient(NIEPError):
    tag = "negative-coefficient"


class HypothesisViolated(NIEPError):
    tag = "hypothesis"


class SecondEntryNotReal(NIEPError):
    tag = "second-entry-not-real"


class NoConjugatePair(NIEPError):
    tag = "no-conjugate-pair"


class DiagonalTooSmall(NIEPError):
    tag = "diagonal-too-small"


class SpectrumMismatch(NIEPError):
    tag = "spectrum-mismatch"


class RegionViolation(NIEPError):
    tag = "region"


class ConeViolation(NIEPError):
    tag = "cone"


class HRecoveryFailed(NIEPError):
    tag = "h-recovery"


class CardinalityMismatch(NIEPError):
    tag = "cardinality"
