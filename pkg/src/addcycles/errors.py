"""Exception hierarchy shared by every module."""


class AddCycleError(Exception):
    """Base class for all errors raised by addcycles."""


class ZeroFunction(AddCycleError, ValueError):
    pass


class UnsupportedFactorization(AddCycleError):
    """A polynomial factor has no rational root but degree >= 2."""


class ZeroRadicand(AddCycleError, ValueError):
    pass


class DivisionByZero(AddCycleError, ZeroDivisionError):
    pass


class InvalidParameter(AddCycleError, ValueError):
    pass


class FaceContainment(AddCycleError):
    """The curve lies inside a codimension-1 face."""


class InadmissibleBoundaryPoint(AddCycleError):
    """A face intersection point lies in ◊₁ but outside c₀(◊₁)."""


class NotOverXZero(AddCycleError, ValueError):
    pass


class ModulusViolation(AddCycleError):
    pass


class DSLSyntaxError(AddCycleError, SyntaxError):
    def __init__(self, message, source="", position=0):
        self.source = source
        self.position = position
        super().__init__(f"{message} at position {position}")

    def caret(self):
        return f"  {self.source}\n  {' ' * self.position}^"
