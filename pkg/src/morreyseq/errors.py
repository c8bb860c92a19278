"""Exception hierarchy.

Every domain error derives from :class:`MorreyError` so callers (the CLI in
particular) can tell a mathematically inadmissible input apart from a usage
mistake.
"""


class MorreyError(ValueError):
    """Base class for domain errors."""

    code = "MorreyError"


class TrivialSpace(MorreyError):
    """The space m_{phi,p} is {0}: phi(2^j) 2^{-jd/p} is unbounded."""

    code = "TrivialSpace"


class NotGp(MorreyError):
    """A weight is not in G_p(D) for the requested p."""

    code = "NotGp"


class NotInAnyGp(NotGp):
    """A weight is in no class G_p(D), p > 0."""

    code = "NotInAnyGp"


class NotNormalized(MorreyError):
    """A weight does not satisfy phi(1) = 1."""

    code = "NotNormalized"


class BoundedWeight(MorreyError):
    code = "BoundedWeight"


class LimitPositive(MorreyError):
    """lim 2^{-kd/p} phi(2^k) > 0, i.e. the space is l_p."""

    code = "LimitPositive"


class QuasiBanachUnsupported(MorreyError):
    code = "QuasiBanachUnsupported"


class NotContinuous(MorreyError):
    code = "NotContinuous"


class SupportOutOfRange(MorreyError):
    code = "SupportOutOfRange"


class DimensionMismatch(MorreyError):
    code = "DimensionMismatch"


class BudgetExceeded(MorreyError):
    """An enumeration would exceed its configured budget."""

    code = "BudgetExceeded"
