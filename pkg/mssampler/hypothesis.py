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

"""the one-sided test of the conformity rate against the acceptable
conformity rate (ACR), its approximate power, and the sample size
that attains a given power.

the continuity correction 1/(2n) is subtracted from the threshold,
outside the square root."""

from typing import Optional, Tuple, List, Dict, Any
from typing_extensions import Self
import dataclasses as _dataclasses
import math as _math
import warnings as _warnings

import numpy as _np

from . import (
    defaults as _defaults,
)
from .normal import (
    ConfidenceSpec,
    phi as _phi,
    phi_inv as _phi_inv,
)
from .estimation import (
    SampleOutcome,
    CEILING_TOLERANCE,
    point_estimate as _point_estimate,
)
from .typing import (
    Probability,
    RiskName,
    Pairing,
)

PAIRINGS = ('canonical', 'printed')


class UnboundedSampleSizeError(ValueError):
    """raised when no finite sample size can attain the requested power."""
    pass


class DegenerateTestWarning(UserWarning):
    """the decision threshold is not positive: the test can never reject."""
    pass


@_dataclasses.dataclass(frozen=True)
class RiskClass:
    """a product-risk class and its acceptable conformity rate.
    ``name`` is None for an explicitly given ACR."""
    name: Optional[RiskName]
    acr: Probability

    def __post_init__(self):
        if not (0.0 < self.acr < 1.0):
            raise ValueError(f"ACR must lie in (0, 1), got {self.acr!r}")
        if (self.name is not None) and (_defaults.RISK_ACR.get(self.name) != self.acr):
            raise ValueError(
                f"risk class '{self.name}' is fixed to ACR={_defaults.RISK_ACR.get(self.name)}"
            )

    @property
    def label(self) -> str:
        return self.name if self.name is not None else 'custom'

    @classmethod
    def from_name(cls, name: str) -> Self:
        key = str(name).strip().lower()
        if key not in _defaults.RISK_ACR:
            raise ValueError(
                f"unknown risk class '{name}' (expected one of: {', '.join(_defaults.RISK_ACR)})"
            )
        return cls(name=key, acr=_defaults.RISK_ACR[key])

    @classmethod
    def from_acr(cls, acr: Probability) -> Self:
        return cls(name=None, acr=float(acr))


def risk_class(name: Optional[str] = None) -> RiskClass:
    if name is None:
        name = _defaults.RISK_NAME
    return RiskClass.from_name(name)


@_dataclasses.dataclass(frozen=True)
class DecisionResult:
    reject: bool  # True: the real conformity rate is declared below the ACR
    threshold: Probability
    point: Probability
    continuity_applied: bool
    continuity_comparable: bool  # advisory: 1/(2n) is comparable to |f - ACR|

    def to_dict(self) -> Dict[str, Any]:
        return _dataclasses.asdict(self)


def decision_threshold(
    n: int,
    risk: RiskClass,
    confidence: ConfidenceSpec,
    use_continuity: Optional[bool] = None
) -> Probability:
    """the largest point estimate at which the test rejects."""
    if use_continuity is None:
        use_continuity = _defaults.USE_CONTINUITY
    acr = risk.acr
    threshold = acr - confidence.z * _math.sqrt(acr * (1 - acr) / n)
    if use_continuity:
        threshold -= 1 / (2 * n)
    return threshold


def decide(
    outcome: SampleOutcome,
    risk: RiskClass,
    confidence: ConfidenceSpec,
    use_continuity: Optional[bool] = None
) -> DecisionResult:
    """declares the real conformity rate below the ACR when the point
    estimate does not exceed the decision threshold.

    a non-positive threshold issues a ``DegenerateTestWarning``;
    the verdict (never reject) is still returned."""
    if use_continuity is None:
        use_continuity = _defaults.USE_CONTINUITY
    n = outcome.n
    threshold = decision_threshold(n, risk, confidence, use_continuity=use_continuity)
    if threshold <= 0:
        _warnings.warn(
            f"degenerate test: threshold {threshold:.6g} <= 0 "
            f"(n={n} too small for ACR={risk.acr} at LC={confidence.level})",
            DegenerateTestWarning,
            stacklevel=2,
        )
    f = _point_estimate(outcome)
    return DecisionResult(
        reject=bool(f <= threshold),
        threshold=threshold,
        point=f,
        continuity_applied=bool(use_continuity),
        continuity_comparable=bool(1 / (2 * n) >= abs(f - risk.acr) / 2),
    )


def rejection_count(
    n: int,
    risk: RiskClass,
    confidence: ConfidenceSpec,
    use_continuity: Optional[bool] = None
) -> Optional[int]:
    """the smallest number of non-conforming items that makes ``decide``
    reject at sample size ``n``, or None if no count does."""
    threshold = decision_threshold(n, risk, confidence, use_continuity=use_continuity)
    d = _np.arange(n + 1)
    rejecting = _np.flatnonzero((1.0 - d / n) <= threshold)
    if rejecting.size == 0:
        return None
    return int(rejecting[0])


def power(
    n: int,
    true_rate: Probability,
    risk: RiskClass,
    confidence: ConfidenceSpec
) -> Probability:
    """the normal approximation to the probability of detecting
    a product whose real conformity rate is ``true_rate``."""
    f = float(true_rate)
    if not (0.0 < f < 1.0):
        raise ValueError(f"power requires 0 < f < 1, got {f!r}")
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    acr = risk.acr
    num = n * (acr - f) - confidence.z * _math.sqrt(n * acr * (1 - acr))
    den = _math.sqrt(n * f * (1 - f))
    return _phi(num / den)


def power_curve(
    n_min: int,
    n_max: int,
    true_rate: Probability,
    risk: RiskClass,
    confidence: ConfidenceSpec
) -> List[Tuple[int, Probability]]:
    if n_min < 1 or n_max < n_min:
        raise ValueError(f"expected 1 <= n_min <= n_max, got ({n_min}, {n_max})")
    return [
        (n, power(n, true_rate, risk, confidence)) for n in range(n_min, n_max + 1)
    ]


@_dataclasses.dataclass(frozen=True)
class PowerSizingSpec:
    """the parameters of the power-based sizing.

    ``z_alpha_override`` / ``z_beta_override``, when given, replace the
    quantiles derived from ``alpha`` / ``beta``."""
    acr: Probability
    alpha: Probability  # producer's risk
    beta: Probability   # consumers' risk, 1 - power
    preliminary_rate: Probability
    pairing: Pairing = 'canonical'
    z_alpha_override: Optional[float] = None
    z_beta_override: Optional[float] = None

    def __post_init__(self):
        if not (0.0 < self.acr < 1.0):
            raise ValueError(f"ACR must lie in (0, 1), got {self.acr!r}")
        if not (0.0 < self.alpha < 0.5):
            raise ValueError(f"alpha must lie in (0, 0.5), got {self.alpha!r}")
        if not (0.0 < self.beta < 0.5):
            raise ValueError(f"beta must lie in (0, 0.5), got {self.beta!r}")
        if not (0.0 <= self.preliminary_rate <= 1.0):
            raise ValueError(
                f"preliminary rate must lie in [0, 1], got {self.preliminary_rate!r}"
            )
        if self.pairing not in PAIRINGS:
            raise ValueError(f"unknown pairing: '{self.pairing}'")

    @property
    def z_alpha(self) -> float:
        if self.z_alpha_override is not None:
            return self.z_alpha_override
        return _phi_inv(1 - self.alpha)

    @property
    def z_beta(self) -> float:
        if self.z_beta_override is not None:
            return self.z_beta_override
        return _phi_inv(1 - self.beta)

    @classmethod
    def create(
        cls,
        acr: Probability,
        preliminary_rate: Probability,
        alpha: Optional[Probability] = None,
        beta: Optional[Probability] = None,
        pairing: Optional[Pairing] = None,
        z_alpha: Optional[float] = None,
        z_beta: Optional[float] = None,
    ) -> Self:
        """resolves the defaults; an explicit ``z_alpha`` (``z_beta``)
        determines ``alpha`` (``beta``) as its upper-tail probability."""
        if z_alpha is not None:
            alpha = 1.0 - ConfidenceSpec.from_z(z_alpha).level
        elif alpha is None:
            alpha = 1.0 - _defaults.CONFIDENCE_LEVEL
        if z_beta is not None:
            beta = 1.0 - ConfidenceSpec.from_z(z_beta).level
        elif beta is None:
            beta = _defaults.BETA
        if pairing is None:
            pairing = _defaults.PAIRING
        return cls(
            acr=float(acr),
            alpha=float(alpha),
            beta=float(beta),
            preliminary_rate=float(preliminary_rate),
            pairing=pairing,
            z_alpha_override=None if z_alpha is None else float(z_alpha),
            z_beta_override=None if z_beta is None else float(z_beta),
        )


def sample_size_power(spec: PowerSizingSpec) -> int:
    """the sample size at which the test attains power ``1 - beta``
    against ``preliminary_rate`` with producer's risk ``alpha``.

    'canonical' pairing puts z_alpha on the ACR variance and z_beta on the
    preliminary-rate variance; 'printed' swaps the two."""
    acr = spec.acr
    fp  = spec.preliminary_rate
    if fp >= acr:
        raise UnboundedSampleSizeError(
            "preliminary rate not below ACR: required sample size unbounded"
        )
    sd_null = _math.sqrt(acr * (1 - acr))
    sd_alt  = _math.sqrt(fp * (1 - fp))
    if spec.pairing == 'canonical':
        spread = spec.z_alpha * sd_null + spec.z_beta * sd_alt
    else:
        spread = spec.z_alpha * sd_alt + spec.z_beta * sd_null
    bound = (spread / (acr - fp)) ** 2
    return max(1, _math.ceil(bound - CEILING_TOLERANCE))
