"""Exception hierarchy shared by all modules."""


class IWContractError(Exception):
    """Base class for errors raised by this package."""


class UnsupportedFamily(IWContractError, ValueError):
    pass


class UnsupportedRank(IWContractError, ValueError):
    pass


class BasisMismatch(IWContractError, KeyError):
    pass


class UniverseMismatch(IWContractError, ValueError):
    pass


class UnknownVariable(IWContractError, KeyError):
    pass


class MissingCoordinate(IWContractError, KeyError):
    pass


class NotHomogeneous(IWContractError, ValueError):
    pass


class ZeroParameter(IWContractError, ZeroDivisionError):
    pass


class NotRegular(IWContractError, ValueError):
    pass


class RangeViolation(IWContractError, AssertionError):
    pass


class Inconclusive(IWContractError, RuntimeError):
    """Sampling could not settle a generic-point question."""
