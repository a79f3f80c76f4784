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

"""empirical and exact checks of the normal approximations:
the coverage of the lower bound, and the two error rates of the test."""

from typing import Optional, Union, Dict, Any
import dataclasses as _dataclasses
import logging as _logging
import math as _math

import numpy as _np

from .. import (
    estimation as _estimation,
    hypothesis as _hypothesis,
)
from ..normal import (
    ConfidenceSpec,
)
from ..typing import (
    Probability,
    Metric,
)
from .binomial import (
    BinomialSpec,
    binom_pmfs,
    binom_cdf_upper,
)
from .simulation import (
    ValidationScenario,
    simulate_inspections,
)

_logger = _logging.getLogger(__name__)


@_dataclasses.dataclass(frozen=True)
class ValidationReport:
    scenario: ValidationScenario
    metric: Metric
    empirical_rate: Probability
    standard_error: float
    exact_rate: Optional[Probability] = None

    @property
    def trials(self) -> int:
        return self.scenario.trials

    @property
    def seed(self) -> int:
        return self.scenario.seed

    @classmethod
    def from_hits(
        cls,
        scenario: ValidationScenario,
        metric: Metric,
        hits: int,
        exact_rate: Optional[Probability] = None
    ):
        rate = hits / scenario.trials
        return cls(
            scenario=scenario,
            metric=metric,
            empirical_rate=rate,
            standard_error=_math.sqrt(rate * (1 - rate) / scenario.trials),
            exact_rate=exact_rate,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'metric': self.metric,
            'empirical_rate': self.empirical_rate,
            'standard_error': self.standard_error,
            'exact_rate': self.exact_rate,
            'trials': self.trials,
            'seed': self.seed,
        }


def _as_risk(acr: Union[Probability, _hypothesis.RiskClass]) -> _hypothesis.RiskClass:
    if isinstance(acr, _hypothesis.RiskClass):
        return acr
    return _hypothesis.RiskClass.from_acr(acr)


def exact_coverage(
    n: int,
    true_rate: Probability,
    confidence: ConfidenceSpec
) -> Probability:
    """P[f_L <= f_r] summed over the binomial distribution of d."""
    bounds = _estimation.lower_bounds(n, confidence)
    masses = binom_pmfs(BinomialSpec.of_nonconforming(n, true_rate))
    return min(1.0, _math.fsum(masses[bounds <= true_rate]))


def exact_rejection_probability(
    n: int,
    true_rate: Probability,
    acr: Union[Probability, _hypothesis.RiskClass],
    confidence: ConfidenceSpec,
    use_continuity: Optional[bool] = None
) -> Probability:
    """the exact probability that ``hypothesis.decide`` rejects
    when the real conformity rate is ``true_rate``."""
    d_star = _hypothesis.rejection_count(
        n, _as_risk(acr), confidence, use_continuity=use_continuity
    )
    if d_star is None:
        return 0.0
    return binom_cdf_upper(BinomialSpec.of_nonconforming(n, true_rate), d_star)


def validate_coverage(
    scenario: ValidationScenario,
    confidence: ConfidenceSpec,
    threads: Optional[int] = None
) -> ValidationReport:
    """the fraction of simulated samples whose lower bound does not
    exceed the true conformity rate."""
    n = scenario.sample_size
    d = simulate_inspections(scenario, threads=threads)
    bounds = _estimation.lower_bounds(n, confidence)
    hits = int(_np.count_nonzero(bounds[d] <= scenario.true_conformity_rate))
    _logger.debug("coverage: %d/%d samples covered", hits, scenario.trials)
    return ValidationReport.from_hits(
        scenario,
        'coverage',
        hits,
        exact_rate=exact_coverage(n, scenario.true_conformity_rate, confidence),
    )


def validate_test_errors(
    scenario: ValidationScenario,
    acr: Union[Probability, _hypothesis.RiskClass],
    confidence: ConfidenceSpec,
    use_continuity: Optional[bool] = None,
    threads: Optional[int] = None
) -> ValidationReport:
    """estimates the producer's risk (type I, when the true rate equals
    the ACR) or the consumers' risk (type II, when the true rate is
    below the ACR) of the decision rule."""
    risk = _as_risk(acr)
    f_r = scenario.true_conformity_rate
    if f_r > risk.acr:
        raise ValueError(
            f"true conformity rate {f_r} exceeds ACR {risk.acr}: "
            "neither error rate is defined"
        )
    n = scenario.sample_size
    d_star = _hypothesis.rejection_count(n, risk, confidence, use_continuity=use_continuity)
    d = simulate_inspections(scenario, threads=threads)
    if d_star is None:
        rejected = 0
    else:
        rejected = int(_np.count_nonzero(d >= d_star))
    exact = exact_rejection_probability(
        n, f_r, risk, confidence, use_continuity=use_continuity
    )
    if f_r == risk.acr:
        return ValidationReport.from_hits(scenario, 'type_i', rejected, exact_rate=exact)
    else:
        return ValidationReport.from_hits(
            scenario, 'type_ii', scenario.trials - rejected, exact_rate=1.0 - exact
        )
