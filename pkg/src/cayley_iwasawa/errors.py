"""Exception hierarchy shared by every module of the package."""


class IwasawaError(Exception):
    """Base class for domain failures (CLI exit code 1)."""


class InvalidMultigraph(IwasawaError, ValueError):
    pass


class NotSymmetric(IwasawaError, ValueError):
    pass


class ContainsIdentity(IwasawaError, ValueError):
    pass


class NotGenerating(IwasawaError, ValueError):
    pass


class DuplicateGenerator(IwasawaError, ValueError):
    pass


class Disconnected(IwasawaError):
    pass


class NotPrime(IwasawaError, ValueError):
    pass


class IncompatibleShapes(IwasawaError, ValueError):
    pass


class BadGaloisIndex(IwasawaError, ValueError):
    pass


class PrecisionTooLow(IwasawaError, ValueError):
    pass


class PrecisionExhausted(IwasawaError):
    pass


class NegativeValuation(IwasawaError, ValueError):
    pass


class AntisymmetryViolated(IwasawaError):
    pass


class WalkConditionFails(IwasawaError):
    pass


class TowerDisconnected(IwasawaError):
    pass


class AssumptionViolated(IwasawaError):
    pass


class HypothesisNotMet(IwasawaError):
    pass


class DepthTooSmall(IwasawaError, ValueError):
    pass


class NonRationalProduct(IwasawaError):
    """A product that must be Galois-stable came out irrational (a bug)."""
