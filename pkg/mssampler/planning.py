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

"""selection between the interval-estimate and the test-of-hypothesis
sample sizes, and the two-stage (pilot, then final) planning workflow."""

from typing import Optional, Iterable, List, Tuple, Dict, Any
import dataclasses as _dataclasses
import logging as _logging

from . import (
    defaults as _defaults,
    estimation as _estimation,
    hypothesis as _hypothesis,
)
from .normal import (
    ConfidenceSpec,
)
from .estimation import (
    SampleOutcome,
)
from .hypothesis import (
    RiskClass,
)
from .typing import (
    Probability,
    Method,
)

_logger = _logging.getLogger(__name__)


@_dataclasses.dataclass(frozen=True)
class SamplingPlan:
    method: Method
    sample_size: int
    risk: RiskClass
    confidence: ConfidenceSpec
    interval_size: Optional[int] = None
    hypothesis_size: Optional[int] = None
    width: Optional[float] = None
    beta: Optional[Probability] = None
    preliminary_rate: Optional[Probability] = None
    rationale: str = ''

    def to_dict(self) -> Dict[str, Any]:
        return {
            'method': self.method,
            'sample_size': self.sample_size,
            'interval_size': self.interval_size,
            'hypothesis_size': self.hypothesis_size,
            'risk': self.risk.label,
            'acr': self.risk.acr,
            'level': self.confidence.level,
            'width': self.width,
            'beta': self.beta,
            'preliminary_rate': self.preliminary_rate,
            'rationale': self.rationale,
        }


def hypothesis_size_or_none(
    risk: RiskClass,
    confidence: ConfidenceSpec,
    beta: Probability,
    preliminary_rate: Optional[Probability]
) -> Optional[int]:
    """the canonical power-based size, or None when it is unbounded/undefined."""
    if (preliminary_rate is None) or (preliminary_rate >= risk.acr):
        return None
    spec = _hypothesis.PowerSizingSpec(
        acr=risk.acr,
        alpha=confidence.alpha,
        beta=beta,
        preliminary_rate=preliminary_rate,
        pairing='canonical',
    )
    return _hypothesis.sample_size_power(spec)


def make_plan(
    risk: RiskClass,
    confidence: ConfidenceSpec,
    width: Optional[float] = None,
    beta: Optional[Probability] = None,
    preliminary_rate: Optional[Probability] = None
) -> SamplingPlan:
    """computes both candidate sizes and picks the smaller one;
    ties go to the interval estimate."""
    if width is None:
        width = _defaults.WIDTH
    if beta is None:
        beta = _defaults.BETA
    interval_size = _estimation.sample_size_interval(
        _estimation.IntervalSizingSpec(
            width=width,
            confidence=confidence,
            preliminary_rate=preliminary_rate
        )
    )
    hypothesis_size = hypothesis_size_or_none(risk, confidence, beta, preliminary_rate)

    if hypothesis_size is None:
        method = 'interval_estimate'
        if preliminary_rate is None:
            rationale = (f"no preliminary rate: interval estimate with k=1 (n={interval_size}); "
                         "the test of hypothesis cannot be sized")
        else:
            rationale = (f"preliminary rate {preliminary_rate} not below ACR {risk.acr}: "
                         f"test size unbounded, interval estimate used (n={interval_size})")
    elif hypothesis_size < interval_size:
        method = 'hypothesis_test'
        rationale = (f"test of hypothesis needs n={hypothesis_size} "
                     f"< interval estimate n={interval_size}")
    else:
        method = 'interval_estimate'
        rationale = (f"interval estimate needs n={interval_size} "
                     f"<= test of hypothesis n={hypothesis_size}")
    sample_size = hypothesis_size if method == 'hypothesis_test' else interval_size
    _logger.debug("plan: %s", rationale)
    return SamplingPlan(
        method=method,
        sample_size=sample_size,
        risk=risk,
        confidence=confidence,
        interval_size=interval_size,
        hypothesis_size=hypothesis_size,
        width=width,
        beta=beta,
        preliminary_rate=preliminary_rate,
        rationale=rationale,
    )


@_dataclasses.dataclass(frozen=True)
class TwoStagePlan:
    """a pilot sample sized without any preliminary rate; its point
    estimate then serves as the preliminary rate of the final plan."""
    pilot: SamplingPlan
    final_rule: str
    pilot_width: float
    final_width: float
    beta: Probability

    def finalize(self, pilot_outcome: SampleOutcome) -> SamplingPlan:
        """the final plan, given the outcome of the pilot sample."""
        return make_plan(
            self.pilot.risk,
            self.pilot.confidence,
            width=self.final_width,
            beta=self.beta,
            preliminary_rate=_estimation.point_estimate(pilot_outcome),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'pilot': self.pilot.to_dict(),
            'pilot_width': self.pilot_width,
            'final_width': self.final_width,
            'final_rule': self.final_rule,
        }


def make_two_stage_plan(
    risk: RiskClass,
    confidence: ConfidenceSpec,
    final_width: Optional[float] = None,
    beta: Optional[Probability] = None,
    pilot_width: Optional[float] = None
) -> TwoStagePlan:
    if final_width is None:
        final_width = _defaults.WIDTH
    if pilot_width is None:
        pilot_width = _defaults.PILOT_WIDTH
    if beta is None:
        beta = _defaults.BETA
    _estimation.validate_width(final_width)
    _estimation.validate_width(pilot_width)
    if pilot_width < final_width:
        raise ValueError(
            f"pilot width ({pilot_width}) must not be smaller than the final width ({final_width})"
        )
    pilot = make_plan(risk, confidence, width=pilot_width, beta=beta, preliminary_rate=None)
    rule = (f"inspect {pilot.sample_size} items; take f = 1 - d/n of the pilot as the "
            f"preliminary rate and re-plan at width {final_width} with beta {beta}")
    return TwoStagePlan(
        pilot=pilot,
        final_rule=rule,
        pilot_width=pilot_width,
        final_width=final_width,
        beta=beta,
    )


def size_comparison_curve(
    risk: RiskClass,
    confidence: ConfidenceSpec,
    width: float,
    beta: Probability,
    fp_grid: Iterable[Probability]
) -> List[Tuple[Probability, int, Optional[int]]]:
    """(f_p, interval size, hypothesis size) per preliminary rate.
    the hypothesis size is None where it is unbounded (f_p >= ACR)."""
    rows = []
    for fp in fp_grid:
        interval_size = _estimation.sample_size_interval(
            _estimation.IntervalSizingSpec(width=width, confidence=confidence, preliminary_rate=fp)
        )
        rows.append((fp, interval_size, hypothesis_size_or_none(risk, confidence, beta, fp)))
    return rows
