"""
Error kinds raised by the numerical stages.

All of them derive from ValueError so callers that only guard against bad
input keep working. The class name doubles as the machine-readable kind used
in CLI failure records.
"""


class ValenceError(ValueError):
    @property
    def kind(self):
        return type(self).__name__


class NonConvergence(ValenceError):
    """An iteration budget was exhausted."""


class Unrealizable(ValenceError):
    """A prescribed critical set admits no real (a, d)."""

    def __init__(self, residual):
        super(Unrealizable, self).__init__(
            "Critical set is not realizable (residual %.3e)." % residual)
        self.residual = residual


class Exhausted(ValenceError):
    """No entry in a delta schedule certified."""


class OutOfRegime(ValenceError):
    """A Blaschke parameter lies outside |delta| < (n-1)/(n+1)."""


class SingularZeroDetected(ValenceError):
    """A zero of H with numerically vanishing Jacobian."""

    def __init__(self, location, jacobian):
        super(SingularZeroDetected, self).__init__(
            "Singular zero at %r (jacobian %.3e)." % (location, jacobian))
        self.location = location
        self.jacobian = jacobian


class ContourTooClose(ValenceError):
    """|H| or |p| fell below the margin on a contour."""


class Inconsistent(ValenceError):
    """An assembled report violates its own invariants."""

    def __init__(self, message, report=None):
        super(Inconsistent, self).__init__(message)
        self.report = report


class Inconclusive(ValenceError):
    """An orbit neither converged nor cycled within the budget."""
