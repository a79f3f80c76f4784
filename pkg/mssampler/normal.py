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

"""the standard normal distribution function, its inverse, and the
confidence-level record that carries the one-sided quantile ``z``.

every z-value used elsewhere in the package is obtained through
``phi_inv``; nothing reads the rounded values of a printed table."""

from typing import Optional
from typing_extensions import Self
import dataclasses as _dataclasses
import math as _math

import scipy.special as _special

from . import (
    defaults as _defaults,
)
from .typing import (
    Number,
    Probability,
)

# rational initializer for the inverse (Acklam), relative error ~1.2e-9
_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)
_P_LOW = 0.02425
_SQRT_2PI = _math.sqrt(2 * _math.pi)
_MAX_EXP  = 700.0
REFINEMENT_STEPS = 2


def phi(x: Number) -> Probability:
    """returns P[Z <= x] for a standard normal Z.

    evaluated through the complementary error function
    (``scipy.special.ndtr``), then clamped into [0, 1]."""
    x = float(x)
    if not _math.isfinite(x):
        raise ValueError(f"phi() requires a finite argument, got {x!r}")
    return min(1.0, max(0.0, float(_special.ndtr(x))))


def _acklam(p: float) -> float:
    if p < _P_LOW:
        q = _math.sqrt(-2 * _math.log(p))
        return (((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]) / \
            ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1)
    elif p > 1 - _P_LOW:
        return -_acklam(1 - p)
    q = p - 0.5
    r = q * q
    return (((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q / \
        (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1)


def phi_inv(p: Probability) -> float:
    """returns the ``p``-quantile of the standard normal distribution.

    the rational initializer is refined by Halley steps against ``phi``,
    so that ``phi(phi_inv(p))`` reproduces ``p`` to rounding level."""
    p = float(p)
    if not (0.0 < p < 1.0):
        raise ValueError(f"phi_inv() requires 0 < p < 1, got {p!r}")
    if p > 0.5:
        # solve on the lower half so that the symmetry holds exactly
        return -phi_inv(1.0 - p)
    x = _acklam(p)
    for _ in range(REFINEMENT_STEPS):
        err = phi(x) - p
        if err == 0.0:
            break
        # err / density, in log space
        log_u = _math.log(abs(err) * _SQRT_2PI) + x * x / 2
        if log_u > _MAX_EXP:
            break
        u   = _math.copysign(_math.exp(log_u), err)
        x   = x - u / (1 + x * u / 2)
    return x


@_dataclasses.dataclass(frozen=True)
class ConfidenceSpec:
    """the level of confidence ``level``, its significance level
    ``alpha = 1 - level``, and the one-sided quantile ``z``."""
    level: Probability
    alpha: Probability
    z: float

    def __post_init__(self):
        if not (0.5 < self.level < 1.0):
            raise ValueError(
                f"confidence level must lie in (0.5, 1), got {self.level!r}"
            )
        if self.z <= 0:
            raise ValueError(f"z-value must be positive, got {self.z!r}")

    @classmethod
    def from_level(cls, level: Probability) -> Self:
        level = float(level)
        if not (0.5 < level < 1.0):
            raise ValueError(
                f"confidence level must lie in (0.5, 1), got {level!r}"
            )
        return cls(level=level, alpha=1.0 - level, z=phi_inv(level))

    @classmethod
    def from_z(cls, z: float) -> Self:
        """builds the record from an explicitly given quantile."""
        z = float(z)
        if not (_math.isfinite(z) and z > 0):
            raise ValueError(f"z-value must be positive and finite, got {z!r}")
        level = phi(z)
        return cls(level=level, alpha=1.0 - level, z=z)


def confidence_spec(level: Optional[Probability] = None) -> ConfidenceSpec:
    """``level`` defaults to ``defaults.CONFIDENCE_LEVEL``."""
    if level is None:
        level = _defaults.CONFIDENCE_LEVEL
    return ConfidenceSpec.from_level(level)
