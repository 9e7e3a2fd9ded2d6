"""Exception hierarchy shared by all modules."""


class QuatLatticeError(Exception):
    """Base class for domain errors raised by this package."""


class ZeroQuaternion(QuatLatticeError, ZeroDivisionError):
    pass


class RealQuaternion(QuatLatticeError, ValueError):
    """The quaternion has zero imaginary part where a direction is needed."""


class CentralQuaternion(RealQuaternion):
    pass


class NotOddPrime(QuatLatticeError, ValueError):
    pass


class NotAGenerator(QuatLatticeError, KeyError):
    pass


class NoMatch(QuatLatticeError, AssertionError):
    pass


class DuplicateCorner(QuatLatticeError, ValueError):
    pass


class LinkViolation(QuatLatticeError, ValueError):
    def __init__(self, missing, repeated):
        self.missing = sorted(missing)
        self.repeated = sorted(repeated)
        super().__init__(
            f"link condition fails: {len(self.missing)} missing corner(s), "
            f"{len(self.repeated)} repeated corner(s)"
        )


class AlphabetMismatch(QuatLatticeError, ValueError):
    pass


class SideMismatch(QuatLatticeError, ValueError):
    pass


class ZeroProduct(QuatLatticeError, AssertionError):
    pass


class NotAdmissible(QuatLatticeError, ValueError):
    pass


class NoFactorization(QuatLatticeError, AssertionError):
    pass


class TableNotClosed(QuatLatticeError, ValueError):
    pass


class ParseError(QuatLatticeError, ValueError):
    pass


class DomainError(QuatLatticeError, ValueError):
    pass
