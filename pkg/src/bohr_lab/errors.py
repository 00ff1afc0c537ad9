"""Exception types raised across the package."""


class BohrLabError(ValueError):
    """Base class for all domain errors."""


class ParamOutOfRange(BohrLabError):
    pass


class RadiusOutOfRange(BohrLabError):
    pass


class NonVanishingInnerConstant(BohrLabError):
    """Inner function of a composition does not fix the origin."""


class BadBracket(BohrLabError):
    """Verdicts (or signs) at the two ends of a bracket do not differ."""


class PreconditionViolated(BohrLabError):
    """Radius lies beyond the validity radius of an inequality."""


class ConstantAnalyticPart(BohrLabError):
    """The order of the zero of h - h(0) cannot be determined."""


# the order-of-zero failure is the same condition under another name
DegenerateOrder = ConstantAnalyticPart
