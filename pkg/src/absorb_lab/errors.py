"""Exception hierarchy shared by all absorb_lab modules."""


class AbsorbLabError(Exception):
    """Base class for every error raised by the package."""


class InvalidTable(AbsorbLabError):
    """A raw grid could not be turned into a semigroup."""


class NotSquare(InvalidTable):
    pass


class OutOfRangeEntry(InvalidTable):
    def __init__(self, i, j, value, n):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"entry ({i},{j}) = {value} is outside [0, {n})")


class AssociativityViolation(InvalidTable):
    def __init__(self, i, j, k, left, right):
        self.i, self.j, self.k = i, j, k
        self.left, self.right = left, right
        super().__init__(
            f"associativity fails at ({i},{j},{k}): "
            f"({i}+{j})+{k} = {left} but {i}+({j}+{k}) = {right}"
        )


class ParseError(InvalidTable):
    pass


class UnknownFamily(AbsorbLabError):
    pass


class BadParameter(AbsorbLabError, ValueError):
    pass


class SizeExplosion(AbsorbLabError):
    pass


class NTooLarge(AbsorbLabError):
    pass


class IndexOutOfRange(AbsorbLabError, IndexError):
    pass


class PreconditionViolated(AbsorbLabError):
    pass


class NotIdempotent(PreconditionViolated):
    pass


class NotAnIdeal(PreconditionViolated):
    def __init__(self, which):
        self.which = which
        super().__init__(f"{which} is not a two-sided ideal")


class ANotProper(PreconditionViolated):
    pass


class EmptyB(PreconditionViolated):
    pass


class NotClosedUnderOperation(PreconditionViolated):
    pass


class TooManyJClasses(AbsorbLabError):
    pass


class BadK(AbsorbLabError, ValueError):
    pass


class ChainSpecError(AbsorbLabError):
    pass


# set optimisation
class DimensionMismatch(AbsorbLabError):
    pass


class DimensionUnsupported(AbsorbLabError):
    pass


class ZeroNormal(AbsorbLabError, ValueError):
    pass


class NormalNotInDualCone(AbsorbLabError):
    pass


class BadZ(AbsorbLabError, ValueError):
    pass


class NotClosed(AbsorbLabError):
    def __init__(self, i, j):
        self.pair = (i, j)
        super().__init__(f"element {i} (+) element {j} is not in the list")
