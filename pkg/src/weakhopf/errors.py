"""Exception hierarchy for weakhopf."""


class WeakHopfError(Exception):
    """Base class for every error raised by this package."""


class ShapeMismatch(WeakHopfError, ValueError):
    pass


class NotHermitian(WeakHopfError, ValueError):
    pass


class NotPositive(WeakHopfError, ValueError):
    pass


class Singular(WeakHopfError, ValueError):
    pass


class NotAnAlgebra(WeakHopfError, ValueError):
    pass


class DegenerateRandomization(WeakHopfError, RuntimeError):
    pass


class GaugeNotNormalized(WeakHopfError, ValueError):
    pass


class NotSeparating(WeakHopfError, ValueError):
    pass


class StructureRecoveryFailed(WeakHopfError, RuntimeError):
    pass


class NoSolution(WeakHopfError, ValueError):
    pass


class NonUniqueSolution(WeakHopfError, ValueError):
    pass


class CrossCheckMismatch(WeakHopfError, RuntimeError):
    pass


class NotInvertible(WeakHopfError, ValueError):
    pass


class NotAdmissible(WeakHopfError, ValueError):
    pass


class AbelianBaseOnlyTrivial(WeakHopfError, ValueError):
    """The base is commutative, so the canonical element is the only admissible k."""


class PostconditionViolated(WeakHopfError, RuntimeError):
    pass


class InvalidGroupoid(WeakHopfError, ValueError):
    pass


class ParseError(WeakHopfError, ValueError):
    pass


class UnsupportedVersion(WeakHopfError, ValueError):
    pass
