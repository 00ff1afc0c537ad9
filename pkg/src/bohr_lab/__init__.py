"""Bohr-type radii for bounded analytic functions and harmonic mappings.

Closed-form radii and radius-equation roots live in :mod:`bohr_lab.radii`;
certified truncated power series in :mod:`bohr_lab.powerseries`; the checks
themselves in :mod:`bohr_lab.quasisub` and :mod:`bohr_lab.harmonic`.
"""
from .errors import (BadBracket, BohrLabError, ConstantAnalyticPart, DegenerateOrder,
                     NonVanishingInnerConstant, ParamOutOfRange, PreconditionViolated,
                     RadiusOutOfRange)
from .families import HarmonicPair
from .powerseries import Interval, TruncatedSeries
from .radii import RadiusParams
from .report import Verdict, VerificationReport

__version__ = "0.1.0"

__all__ = [
    "BadBracket", "BohrLabError", "ConstantAnalyticPart", "DegenerateOrder", "HarmonicPair",
    "Interval", "NonVanishingInnerConstant", "ParamOutOfRange", "PreconditionViolated",
    "RadiusOutOfRange", "RadiusParams", "TruncatedSeries", "Verdict", "VerificationReport",
]
