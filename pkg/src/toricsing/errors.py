"""Exception hierarchy shared by every module."""


class ToricError(Exception):
    """Base class for all library errors."""


class DimensionError(ToricError, ValueError):
    """Monomials, orders or configurations of mismatched length."""


class InvalidInput(ToricError, ValueError):
    """Out-of-range kind/n or otherwise malformed arguments."""


class BudgetExceeded(ToricError, RuntimeError):
    """A configured step, fiber or cone budget ran out."""


class IncoherentMarking(ToricError):
    """A marked basis whose leads no single term order selects."""


class BoundInsufficient(ToricError):
    """The Hilbert-basis box was too small; retry with a larger bound."""
