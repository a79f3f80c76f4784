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

"""reproductions of the reference tables, and the data series behind
the sample-size and power figures, as pandas DataFrames."""

from typing import Optional, Iterable, Tuple

import numpy as _np
import pandas as _pd

from . import (
    defaults as _defaults,
    estimation as _estimation,
    hypothesis as _hypothesis,
    planning as _planning,
)
from .normal import (
    ConfidenceSpec,
)
from .hypothesis import (
    RiskClass,
)
from .typing import (
    Probability,
)

GRID_DECIMALS = 10


def linear_grid(start: float, stop: float, step: float) -> Tuple[float]:
    """``start, start + step, ..., stop`` (inclusive), rounded so that
    e.g. 0.5 + 4 * 0.05 compares equal to 0.7."""
    if step <= 0:
        raise ValueError(f"grid step must be positive, got {step!r}")
    if stop < start:
        raise ValueError(f"grid stop ({stop}) is below its start ({start})")
    count = int(_np.floor((stop - start) / step + 1e-9)) + 1
    return tuple(round(start + i * step, GRID_DECIMALS) for i in range(count))


def parse_grid(text: str) -> Tuple[float]:
    """parses ``START:STOP:STEP``, or a comma-separated list of values."""
    if ':' in text:
        parts = text.split(':')
        if len(parts) != 3:
            raise ValueError(f"grid must be START:STOP:STEP, got '{text}'")
        start, stop, step = (float(part) for part in parts)
        return linear_grid(start, stop, step)
    return tuple(float(item) for item in text.split(',') if item.strip())


def _default_confidence(confidence: Optional[ConfidenceSpec]) -> ConfidenceSpec:
    if confidence is None:
        return ConfidenceSpec.from_level(_defaults.CONFIDENCE_LEVEL)
    return confidence


def table1(levels: Optional[Iterable[Probability]] = None) -> _pd.DataFrame:
    """levels of confidence, significance levels and z-values."""
    if levels is None:
        levels = _defaults.TABLE1_LEVELS
    specs = [ConfidenceSpec.from_level(level) for level in levels]
    return _pd.DataFrame({
        'level': [spec.level for spec in specs],
        'alpha': [round(spec.alpha, GRID_DECIMALS) for spec in specs],
        'z': [spec.z for spec in specs],
        'z_rounded': [round(spec.z, 3) for spec in specs],
    })


def table4(
    risk: Optional[RiskClass] = None,
    confidence: Optional[ConfidenceSpec] = None,
    width: Optional[float] = None,
    beta: Optional[Probability] = None,
    rates: Optional[Iterable[Probability]] = None
) -> _pd.DataFrame:
    """sample sizes per preliminary rate, one row per (method, rate).

    the test-of-hypothesis sizes are given under two parameterizations:
    the printed pairing with the fixed multipliers 1.645 / 1.282, and the
    canonical pairing with the stated alpha and beta."""
    if risk is None:
        risk = _hypothesis.risk_class()
    confidence = _default_confidence(confidence)
    if width is None:
        width = _defaults.WIDTH
    if beta is None:
        beta = _defaults.BETA
    if rates is None:
        rates = _defaults.TABLE4_RATES
    rates = tuple(rates)
    published = dict(zip(_defaults.TABLE4_RATES, _defaults.PUBLISHED_TABLE4_HYPOTHESIS))

    rows = []
    for fp in rates:
        k = _estimation.coefficient_k(width, fp)
        rows.append({
            'row': 'interval_estimate',
            'fp': fp,
            'n': _estimation.sample_size_interval(
                _estimation.IntervalSizingSpec(width=width, confidence=confidence, preliminary_rate=fp)
            ),
            'parameterization': f"k={k:.6g}, LC={confidence.level}, w={width}",
            'published_n': None,
            'note': '',
        })
    for fp in rates:
        printed = _hypothesis.PowerSizingSpec.create(
            acr=risk.acr,
            preliminary_rate=fp,
            pairing='printed',
            z_alpha=_defaults.TABLE4_Z_ALPHA,
            z_beta=_defaults.TABLE4_Z_BETA,
        )
        rows.append({
            'row': 'hypothesis_test',
            'fp': fp,
            'n': _size_or_label(printed),
            'parameterization': (f"printed pairing, z_alpha={_defaults.TABLE4_Z_ALPHA}, "
                                 f"z_beta={_defaults.TABLE4_Z_BETA}, ACR={risk.acr}"),
            'published_n': published.get(fp),
            'note': '',
        })
    for fp in rates:
        canonical = _hypothesis.PowerSizingSpec.create(
            acr=risk.acr,
            preliminary_rate=fp,
            alpha=confidence.alpha,
            beta=beta,
            pairing='canonical',
        )
        rows.append({
            'row': 'hypothesis_test',
            'fp': fp,
            'n': _size_or_label(canonical),
            'parameterization': (f"canonical pairing, alpha={round(confidence.alpha, GRID_DECIMALS)}, "
                                 f"beta={beta}, ACR={risk.acr}"),
            'published_n': published.get(fp),
            'note': ("published sizes reproduce only under the printed pairing "
                     "with z 1.645/1.282"),
        })
    frame = _pd.DataFrame(rows)
    frame['published_n'] = frame['published_n'].astype('Int64')
    return frame


def _size_or_label(spec: _hypothesis.PowerSizingSpec):
    try:
        return _hypothesis.sample_size_power(spec)
    except _hypothesis.UnboundedSampleSizeError:
        return _defaults.UNBOUNDED_LABEL


def table5(
    risk: Optional[RiskClass] = None,
    confidence: Optional[ConfidenceSpec] = None,
    preliminary_rate: Optional[Probability] = None,
    powers: Optional[Iterable[Probability]] = None
) -> _pd.DataFrame:
    """sample sizes attaining each power, canonical pairing."""
    if risk is None:
        risk = _hypothesis.risk_class()
    confidence = _default_confidence(confidence)
    if preliminary_rate is None:
        preliminary_rate = _defaults.TABLE5_RATE
    if powers is None:
        powers = _defaults.TABLE5_POWERS

    rows = []
    for target in powers:
        spec = _hypothesis.PowerSizingSpec.create(
            acr=risk.acr,
            preliminary_rate=preliminary_rate,
            alpha=confidence.alpha,
            beta=round(1 - target, GRID_DECIMALS),
            pairing='canonical',
        )
        n = _hypothesis.sample_size_power(spec)
        rows.append({
            'power': target,
            'n': n,
            'achieved_power': _hypothesis.power(n, preliminary_rate, risk, confidence),
            'parameterization': (f"canonical pairing, ACR={risk.acr}, "
                                 f"alpha={round(confidence.alpha, GRID_DECIMALS)}, fp={preliminary_rate}"),
        })
    return _pd.DataFrame(rows)


def table6(
    confidence: Optional[ConfidenceSpec] = None,
    preliminary_rate: Optional[Probability] = None,
    widths: Optional[Iterable[float]] = None
) -> _pd.DataFrame:
    """sample sizes per interval width."""
    confidence = _default_confidence(confidence)
    if preliminary_rate is None:
        preliminary_rate = _defaults.TABLE6_RATE
    if widths is None:
        widths = _defaults.TABLE6_WIDTHS
    published = dict(zip(_defaults.TABLE6_WIDTHS, _defaults.PUBLISHED_TABLE6))

    rows = []
    for w in widths:
        spec = _estimation.IntervalSizingSpec(
            width=w, confidence=confidence, preliminary_rate=preliminary_rate
        )
        n = _estimation.sample_size_interval(spec)
        printed = published.get(w)
        rows.append({
            'w': w,
            'n': n,
            'bound': _estimation.interval_size_bound(spec),
            'published_n': printed,
            'note': (f"paper prints {printed}" if (printed is not None) and (printed != n) else ''),
        })
    frame = _pd.DataFrame(rows)
    frame['published_n'] = frame['published_n'].astype('Int64')
    return frame


def figure1_curve(
    risk: RiskClass,
    confidence: ConfidenceSpec,
    width: float,
    beta: Probability,
    fp_grid: Iterable[Probability]
) -> _pd.DataFrame:
    """interval and hypothesis sizes against the preliminary rate."""
    rows = _planning.size_comparison_curve(risk, confidence, width, beta, fp_grid)
    return _pd.DataFrame({
        'fp': [fp for fp, _, _ in rows],
        'interval_n': [interval for _, interval, _ in rows],
        'hypothesis_n': [
            _defaults.UNBOUNDED_LABEL if hypothesis is None else hypothesis
            for _, _, hypothesis in rows
        ],
    })


def figure2_curve(
    n_min: int,
    n_max: int,
    true_rate: Probability,
    risk: RiskClass,
    confidence: ConfidenceSpec
) -> _pd.DataFrame:
    """power of the test against the sample size."""
    points = _hypothesis.power_curve(n_min, n_max, true_rate, risk, confidence)
    return _pd.DataFrame(points, columns=['n', 'power'])


def figure3_curve(
    widths: Iterable[float],
    preliminary_rate: Optional[Probability],
    confidence: ConfidenceSpec
) -> _pd.DataFrame:
    """interval sample size against the width."""
    widths = tuple(widths)
    sizes  = [
        _estimation.sample_size_interval(
            _estimation.IntervalSizingSpec(width=w, confidence=confidence, preliminary_rate=preliminary_rate)
        ) for w in widths
    ]
    return _pd.DataFrame({'w': widths, 'n': sizes})
