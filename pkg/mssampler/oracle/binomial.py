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

"""exact binomial probabilities, evaluated in log space."""

from typing_extensions import Self
import dataclasses as _dataclasses
import math as _math

import numpy as _np
import numpy.typing as _npt
import scipy.special as _special

from ..typing import (
    Probability,
)


@_dataclasses.dataclass(frozen=True)
class BinomialSpec:
    """``n`` independent trials, each a success with probability ``p``."""
    n: int
    p: Probability

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not (0.0 <= self.p <= 1.0):
            raise ValueError(f"p must lie in [0, 1], got {self.p!r}")

    @property
    def mean(self) -> float:
        return self.n * self.p

    @classmethod
    def of_nonconforming(cls, n: int, conformity_rate: Probability) -> Self:
        """the distribution of the non-conforming count in a sample of ``n``."""
        return cls(n=n, p=1.0 - conformity_rate)


def _check_count(spec: BinomialSpec, k: int):
    if int(k) != k or not (0 <= k <= spec.n):
        raise ValueError(f"k must be an integer in [0, {spec.n}], got {k!r}")


def _log_pmf(spec: BinomialSpec, k: _npt.NDArray) -> _npt.NDArray:
    n, p = spec.n, spec.p
    lchoose = _special.gammaln(n + 1) - _special.gammaln(k + 1) - _special.gammaln(n - k + 1)
    return lchoose + k * _np.log(p) + (n - k) * _np.log1p(-p)


def binom_pmfs(spec: BinomialSpec) -> _npt.NDArray:
    """the probability masses of every count 0..n."""
    k = _np.arange(spec.n + 1)
    if spec.p == 0.0 or spec.p == 1.0:
        masses = _np.zeros(spec.n + 1, dtype=float)
        masses[0 if spec.p == 0.0 else spec.n] = 1.0
        return masses
    return _np.exp(_log_pmf(spec, k.astype(float)))


def binom_pmf(spec: BinomialSpec, k: int) -> Probability:
    _check_count(spec, k)
    if spec.p == 0.0:
        return 1.0 if k == 0 else 0.0
    elif spec.p == 1.0:
        return 1.0 if k == spec.n else 0.0
    return float(_np.exp(_log_pmf(spec, _np.float64(k))))


def binom_cdf_upper(spec: BinomialSpec, k: int) -> Probability:
    """P[X >= k], summed over whichever tail is the smaller one."""
    _check_count(spec, k)
    if k == 0:
        return 1.0
    masses = binom_pmfs(spec)
    if k > spec.mean:
        tail = _math.fsum(masses[k:])
    else:
        tail = 1.0 - _math.fsum(masses[:k])
    return min(1.0, max(0.0, tail))
