# MIT License
#
# Copyright (c) 2024 the mssampler developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""point estimation of the conformity rate, its one-sided lower confidence
bound, and the sample size that guarantees a given width of that bound."""

from typing import Optional, Union
from typing_extensions import Self
import dataclasses as _dataclasses
import math as _math

import numpy as _np
import numpy.typing as _npt

from . import (
    defaults as _defaults,
)
from .normal import (
    ConfidenceSpec,
)
from .typing import (
    Probability,
)

# absorbs float noise before rounding a real-valued size bound up
CEILING_TOLERANCE = 1e-9


@_dataclasses.dataclass(frozen=True)
class SampleOutcome:
    """``n`` items inspected, ``d`` of which were found non-conforming."""
    n: int
    d: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if int(self.d) != self.d or self.d < 0:
            raise ValueError(f"d must be a non-negative integer, got {self.d!r}")
        if self.d > self.n:
            raise ValueError(f"d exceeds n (d={self.d}, n={self.n})")


@_dataclasses.dataclass(frozen=True)
class ConformityEstimate:
    point: Probability        # f
    lower_bound: Probability  # f_L
    confidence: ConfidenceSpec

    def to_dict(self):
        return {
            'point': self.point,
            'lower_bound': self.lower_bound,
            'level': self.confidence.level,
        }


@_dataclasses.dataclass(frozen=True)
class IntervalSizingSpec:
    width: float
    confidence: ConfidenceSpec
    preliminary_rate: Optional[Probability] = None

    def __post_init__(self):
        validate_width(self.width)
        validate_rate(self.preliminary_rate, 'preliminary rate')

    @classmethod
    def create(
        cls,
        width: Optional[float] = None,
        level: Optional[Probability] = None,
        preliminary_rate: Optional[Probability] = None,
    ) -> Self:
        if width is None:
            width = _defaults.WIDTH
        if level is None:
            level = _defaults.CONFIDENCE_LEVEL
        return cls(
            width=float(width),
            confidence=ConfidenceSpec.from_level(level),
            preliminary_rate=preliminary_rate,
        )


def validate_width(width: float) -> float:
    if not (0 < width <= _defaults.MAX_WIDTH):
        raise ValueError(
            f"width must lie in (0, {_defaults.MAX_WIDTH}], got {width!r}"
        )
    return width


def validate_rate(rate: Optional[Probability], name: str = 'rate') -> Optional[Probability]:
    if rate is None:
        return None
    if not (0.0 <= rate <= 1.0):
        raise ValueError(f"{name} must lie in [0, 1], got {rate!r}")
    return rate


def point_estimate(outcome: SampleOutcome) -> Probability:
    """f = 1 - d/n"""
    return 1.0 - outcome.d / outcome.n


def _lower_bound_formula(
    n: int,
    f: Union[float, _npt.NDArray],
    z: float
) -> Union[float, _npt.NDArray]:
    z2  = z * z
    arg = z2 - (2 + 1 / n) + 4 * f * (n + 1 - n * f)
    if _np.any(arg < 0):
        raise ValueError(
            f"lower bound undefined for n={n}: negative square-root argument"
        )
    return ((2 * n * f + z2 - 1) - z * _np.sqrt(arg)) / (2 * (n + z2))


def lower_bound(
    outcome: SampleOutcome,
    confidence: ConfidenceSpec
) -> ConformityEstimate:
    """the one-sided, continuity-corrected lower bound ``f_L``
    of the conformity rate, at the level of ``confidence``.

    ``f_L`` is 0 when every inspected item is non-conforming."""
    f = point_estimate(outcome)
    if outcome.d == outcome.n:
        return ConformityEstimate(point=f, lower_bound=0.0, confidence=confidence)
    f_L = max(0.0, float(_lower_bound_formula(outcome.n, f, confidence.z)))
    assert f_L < f, f"lower bound {f_L} not below the point estimate {f}"
    return ConformityEstimate(point=f, lower_bound=f_L, confidence=confidence)


def lower_bounds(n: int, confidence: ConfidenceSpec) -> _npt.NDArray:
    """``lower_bound`` for every d in 0..n, as an array indexed by d."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    d = _np.arange(n + 1)
    f = 1.0 - d / n
    bounds = _np.zeros(n + 1, dtype=float)
    bounds[:n] = _lower_bound_formula(n, f[:n], confidence.z)
    return _np.clip(bounds, 0.0, None)


def coefficient_k(
    width: float,
    preliminary_rate: Optional[Probability] = None
) -> float:
    """the variance-adjustment coefficient of the interval sizing formula.

    piecewise in the preliminary rate; k = 1 when no rate is known."""
    w = validate_width(width)
    fp = validate_rate(preliminary_rate, 'preliminary rate')
    if fp is None:
        return 1.0
    half = w / 2
    if (fp < half) or (fp > 1 - half):
        return 4 * w * (1 - w)
    elif fp < 0.3:
        return 4 * (fp + half) * (1 - fp - half)
    elif fp <= 0.7:
        return 1.0
    else:
        return 4 * (fp - half) * (1 - fp + half)


def interval_size_bound(spec: IntervalSizingSpec) -> float:
    """the real-valued right-hand side of the sizing inequality."""
    w = spec.width
    z = spec.confidence.z
    k = coefficient_k(w, spec.preliminary_rate)
    return k * z * z / (w * w) + 2 / w - 2 * z * z + (z + 2) / k


def sample_size_interval(spec: IntervalSizingSpec) -> int:
    """the smallest n that satisfies the sizing inequality for the interval width."""
    return max(1, _math.ceil(interval_size_bound(spec) - CEILING_TOLERANCE))
