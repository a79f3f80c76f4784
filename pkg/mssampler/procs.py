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

"""the procedures that correspond to the individual sub-commands.

each procedure takes plain values, resolves the defaults, and returns
an ``OutputEnvelope`` (``run_curve`` returns the data frame itself)."""

from pathlib import Path
from typing import Optional, Iterable, Dict, Any
import dataclasses as _dataclasses
import warnings as _warnings

import pandas as _pd

from . import (
    defaults as _defaults,
    estimation as _estimation,
    hypothesis as _hypothesis,
    planning as _planning,
    tables as _tables,
    oracle as _oracle,
)
from .normal import (
    ConfidenceSpec,
    confidence_spec,
)
from .hypothesis import (
    RiskClass,
)
from .reporting import (
    OutputEnvelope,
    write_csv,
)
from .typing import (
    PathLike,
    Probability,
    Pairing,
)


def resolve_risk(risk: Optional[str] = None, acr: Optional[Probability] = None) -> RiskClass:
    """an explicit ``acr`` takes precedence over the risk class (with a warning)."""
    if acr is not None:
        if risk is not None:
            _warnings.warn(f"explicit ACR {acr} overrides risk class '{risk}'", UserWarning)
        return RiskClass.from_acr(acr)
    return _hypothesis.risk_class(risk)


def _risk_inputs(risk: RiskClass) -> Dict[str, Any]:
    return {'risk': risk.label, 'acr': risk.acr}


def run_estimate(
    n: int,
    d: int,
    level: Optional[Probability] = None
) -> OutputEnvelope:
    confidence = confidence_spec(level)
    outcome  = _estimation.SampleOutcome(n=n, d=d)
    estimate = _estimation.lower_bound(outcome, confidence)
    result = estimate.to_dict()
    result['z'] = confidence.z
    return OutputEnvelope(
        command='estimate',
        inputs={'n': n, 'd': d, 'lc': confidence.level},
        result=result,
    )


def run_size_interval(
    width: Optional[float] = None,
    level: Optional[Probability] = None,
    preliminary_rate: Optional[Probability] = None
) -> OutputEnvelope:
    spec = _estimation.IntervalSizingSpec.create(
        width=width, level=level, preliminary_rate=preliminary_rate
    )
    return OutputEnvelope(
        command='size interval',
        inputs={'w': spec.width, 'lc': spec.confidence.level, 'fp': preliminary_rate},
        result={
            'n': _estimation.sample_size_interval(spec),
            'k': _estimation.coefficient_k(spec.width, preliminary_rate),
            'bound': _estimation.interval_size_bound(spec),
            'z': spec.confidence.z,
        },
    )


def run_size_power(
    preliminary_rate: Probability,
    risk: Optional[str] = None,
    acr: Optional[Probability] = None,
    alpha: Optional[Probability] = None,
    beta: Optional[Probability] = None,
    pairing: Optional[Pairing] = None,
    z_alpha: Optional[float] = None,
    z_beta: Optional[float] = None
) -> OutputEnvelope:
    """raises ``UnboundedSampleSizeError`` when ``preliminary_rate`` is not below the ACR."""
    riskclass = resolve_risk(risk, acr)
    spec = _hypothesis.PowerSizingSpec.create(
        acr=riskclass.acr,
        preliminary_rate=preliminary_rate,
        alpha=alpha,
        beta=beta,
        pairing=pairing,
        z_alpha=z_alpha,
        z_beta=z_beta,
    )
    n = _hypothesis.sample_size_power(spec)
    other = 'printed' if spec.pairing == 'canonical' else 'canonical'
    other_n = _hypothesis.sample_size_power(_dataclasses.replace(spec, pairing=other))
    if other_n != n:
        _warnings.warn(
            f"the two variance pairings disagree: {spec.pairing} n={n}, {other} n={other_n}; "
            "the canonical pairing is consistent with the power function",
            UserWarning
        )
    inputs = _risk_inputs(riskclass)
    inputs.update({
        'alpha': spec.alpha,
        'beta': spec.beta,
        'fp': spec.preliminary_rate,
        'pairing': spec.pairing,
        'z_alpha': z_alpha,
        'z_beta': z_beta,
    })
    return OutputEnvelope(
        command='size power',
        inputs=inputs,
        result={
            'n': n,
            'pairing': spec.pairing,
            'z_alpha': spec.z_alpha,
            'z_beta': spec.z_beta,
            'alternate_pairing': other,
            'alternate_n': other_n,
        },
    )


def run_decide(
    n: int,
    d: int,
    risk: Optional[str] = None,
    acr: Optional[Probability] = None,
    level: Optional[Probability] = None,
    use_continuity: Optional[bool] = None
) -> OutputEnvelope:
    if use_continuity is None:
        use_continuity = _defaults.USE_CONTINUITY
    riskclass  = resolve_risk(risk, acr)
    confidence = confidence_spec(level)
    outcome    = _estimation.SampleOutcome(n=n, d=d)
    decision   = _hypothesis.decide(outcome, riskclass, confidence, use_continuity=use_continuity)
    result = decision.to_dict()
    result['rejection_count'] = _hypothesis.rejection_count(
        n, riskclass, confidence, use_continuity=use_continuity
    )
    inputs = {'n': n, 'd': d}
    inputs.update(_risk_inputs(riskclass))
    inputs.update({'lc': confidence.level, 'continuity': use_continuity})
    return OutputEnvelope(command='decide', inputs=inputs, result=result)


def run_power(
    n: int,
    true_rate: Probability,
    risk: Optional[str] = None,
    acr: Optional[Probability] = None,
    level: Optional[Probability] = None
) -> OutputEnvelope:
    riskclass  = resolve_risk(risk, acr)
    confidence = confidence_spec(level)
    inputs = {'n': n, 'fr': true_rate}
    inputs.update(_risk_inputs(riskclass))
    inputs['lc'] = confidence.level
    return OutputEnvelope(
        command='power',
        inputs=inputs,
        result={
            'power': _hypothesis.power(n, true_rate, riskclass, confidence),
            'exact_power': _oracle.exact_rejection_probability(n, true_rate, riskclass, confidence),
        },
    )


def run_plan(
    risk: Optional[str] = None,
    acr: Optional[Probability] = None,
    level: Optional[Probability] = None,
    width: Optional[float] = None,
    beta: Optional[Probability] = None,
    preliminary_rate: Optional[Probability] = None,
    two_stage: bool = False,
    pilot_width: Optional[float] = None,
    pilot_n: Optional[int] = None,
    pilot_d: Optional[int] = None
) -> OutputEnvelope:
    """a single-stage plan, or (``two_stage``) a pilot plan that is
    finalized when the pilot outcome ``pilot_n``/``pilot_d`` is given."""
    riskclass  = resolve_risk(risk, acr)
    confidence = confidence_spec(level)
    if width is None:
        width = _defaults.WIDTH
    if beta is None:
        beta = _defaults.BETA
    inputs = _risk_inputs(riskclass)
    inputs.update({'lc': confidence.level, 'w': width, 'beta': beta})

    if not two_stage:
        inputs['fp'] = preliminary_rate
        plan = _planning.make_plan(riskclass, confidence, width, beta, preliminary_rate)
        return OutputEnvelope(command='plan', inputs=inputs, result=plan.to_dict())

    if preliminary_rate is not None:
        _warnings.warn("a two-stage plan ignores the preliminary rate: the pilot provides it",
                       UserWarning)
    if pilot_width is None:
        pilot_width = _defaults.PILOT_WIDTH
    inputs.update({'pilot_w': pilot_width, 'pilot_n': pilot_n, 'pilot_d': pilot_d})
    staged = _planning.make_two_stage_plan(
        riskclass, confidence, final_width=width, beta=beta, pilot_width=pilot_width
    )
    result = staged.to_dict()
    if (pilot_n is None) != (pilot_d is None):
        raise ValueError("the pilot outcome needs both the pilot n and d")
    if pilot_n is not None:
        outcome = _estimation.SampleOutcome(n=pilot_n, d=pilot_d)
        result['final'] = staged.finalize(outcome).to_dict()
    return OutputEnvelope(command='plan', inputs=inputs, result=result)


def curve_inputs(
    figure: int,
    risk: RiskClass,
    confidence: ConfidenceSpec,
    **params
) -> Dict[str, Any]:
    inputs = {'figure': figure}
    inputs.update(_risk_inputs(risk))
    inputs['lc'] = confidence.level
    inputs.update(params)
    return inputs


def run_curve(
    figure: int,
    risk: RiskClass,
    confidence: ConfidenceSpec,
    width: float,
    beta: Probability,
    preliminary_rate: Optional[Probability] = None,
    fp_grid: Optional[Iterable[Probability]] = None,
    n_min: Optional[int] = None,
    n_max: Optional[int] = None,
    widths: Optional[Iterable[float]] = None
) -> _pd.DataFrame:
    if figure == 1:
        if fp_grid is None:
            fp_grid = _defaults.TABLE4_RATES
        return _tables.figure1_curve(risk, confidence, width, beta, fp_grid)
    elif figure == 2:
        if preliminary_rate is None:
            raise ValueError("figure 2 needs the true conformity rate (--fp)")
        if n_min is None:
            n_min = _defaults.CURVE_N_MIN
        if n_max is None:
            n_max = _defaults.CURVE_N_MAX
        return _tables.figure2_curve(n_min, n_max, preliminary_rate, risk, confidence)
    elif figure == 3:
        if widths is None:
            widths = _defaults.TABLE6_WIDTHS
        return _tables.figure3_curve(widths, preliminary_rate, confidence)
    else:
        raise ValueError(f"unknown figure: {figure!r}")


def run_validate(
    metric: str,
    n: int,
    true_rate: Optional[Probability] = None,
    risk: Optional[str] = None,
    acr: Optional[Probability] = None,
    level: Optional[Probability] = None,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
    use_continuity: Optional[bool] = None
) -> OutputEnvelope:
    """``metric`` is one of 'coverage', 'type1' or 'power'."""
    if trials is None:
        trials = _defaults.MC_TRIALS
    if seed is None:
        seed = _defaults.MC_SEED
    if use_continuity is None:
        use_continuity = _defaults.USE_CONTINUITY
    confidence = confidence_spec(level)
    inputs = {'metric': metric, 'n': n}

    if metric == 'coverage':
        if true_rate is None:
            raise ValueError("coverage needs the true conformity rate (--fr)")
        scenario = _oracle.ValidationScenario(true_rate, n, trials=trials, seed=seed)
        report = _oracle.validate_coverage(scenario, confidence, threads=threads)
        result = report.to_dict()
    elif metric in ('type1', 'power'):
        riskclass = resolve_risk(risk, acr)
        inputs.update(_risk_inputs(riskclass))
        if metric == 'type1':
            if (true_rate is not None) and (true_rate != riskclass.acr):
                raise ValueError(
                    f"type1 is measured at the ACR ({riskclass.acr}), got --fr {true_rate}"
                )
            true_rate = riskclass.acr
        elif true_rate is None:
            raise ValueError("power needs the true conformity rate (--fr)")
        elif true_rate >= riskclass.acr:
            raise ValueError(
                f"power needs a true conformity rate below the ACR ({riskclass.acr}), got {true_rate}"
            )
        scenario = _oracle.ValidationScenario(true_rate, n, trials=trials, seed=seed)
        report = _oracle.validate_test_errors(
            scenario, riskclass, confidence, use_continuity=use_continuity, threads=threads
        )
        result = report.to_dict()
        if metric == 'power':
            result['empirical_power'] = 1.0 - report.empirical_rate
            result['exact_power'] = 1.0 - report.exact_rate
            result['approximate_power'] = _hypothesis.power(n, true_rate, riskclass, confidence)
    else:
        raise ValueError(f"unknown metric: '{metric}'")

    inputs.update({
        'fr': true_rate,
        'lc': confidence.level,
        'trials': trials,
        'seed': seed,
        'continuity': use_continuity,
    })
    return OutputEnvelope(command='validate', inputs=inputs, result=result)


def run_tables(output_dir: Optional[PathLike] = None) -> OutputEnvelope:
    """writes the reproduced tables as CSV files into ``output_dir``."""
    output_dir = Path(output_dir) if output_dir is not None else Path()
    frames = {
        'table1': _tables.table1(),
        'table4': _tables.table4(),
        'table5': _tables.table5(),
        'table6': _tables.table6(),
    }
    files = {}
    for key, frame in frames.items():
        path = write_csv(frame, output_dir / _defaults.TABLE_FILE_NAMES[key])
        files[key] = str(path)
    return OutputEnvelope(
        command='tables',
        inputs={'out': str(output_dir)},
        result={'files': files},
    )
