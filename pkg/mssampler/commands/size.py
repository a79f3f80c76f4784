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

from typing import Optional

from .. import (
    defaults as _defaults,
    hypothesis as _hypothesis,
    procs as _procs,
)
from ..reporting import OutputEnvelope
from ..typing import (
    Pairing,
)
from . import (
    validate as _validate,
)
from .root import commands as _commands


def run_interval(
    width: Optional[float] = None,
    level: Optional[float] = None,
    preliminary_rate: Optional[float] = None
) -> OutputEnvelope:
    return _procs.run_size_interval(
        width=width,
        level=level,
        preliminary_rate=preliminary_rate
    )


def run_power(
    preliminary_rate: float,
    risk: Optional[str] = None,
    acr: Optional[float] = None,
    alpha: Optional[float] = None,
    beta: Optional[float] = None,
    pairing: Optional[Pairing] = None,
    z_alpha: Optional[float] = None,
    z_beta: Optional[float] = None
) -> OutputEnvelope:
    return _procs.run_size_power(
        preliminary_rate,
        risk=risk,
        acr=acr,
        alpha=alpha,
        beta=beta,
        pairing=pairing,
        z_alpha=z_alpha,
        z_beta=z_beta,
    )


parser = _commands.add_parser(
    'size',
    help='the sample size for the interval estimate, or for the test of hypothesis.'
)
methods = parser.add_subparsers()

interval = methods.add_parser(
    'interval',
    help='the sample size that bounds the width of the lower confidence interval.'
)
interval.add_argument(
    '--w',
    dest='width',
    metavar='WIDTH',
    type=_validate.positive_float,
    help=f'the desired width of the interval (defaults to {_defaults.WIDTH}).'
)
_validate.add_level_argument(interval)
interval.add_argument(
    '--fp',
    dest='preliminary_rate',
    metavar='RATE',
    type=_validate.probability,
    help='a preliminary estimate of the conformity rate. the most conservative size is used if omitted.'
)
interval.set_defaults(func=run_interval)

power = methods.add_parser(
    'power',
    help='the sample size that attains the desired power of the test.'
)
power.add_argument(
    '--fp',
    dest='preliminary_rate',
    metavar='RATE',
    type=_validate.probability,
    required=True,
    help='the preliminary estimate of the conformity rate; must be below the ACR.'
)
_validate.add_risk_arguments(power)
power.add_argument(
    '--alpha',
    dest='alpha',
    metavar='ALPHA',
    type=_validate.probability,
    help=f'the significance level (defaults to {round(1 - _defaults.CONFIDENCE_LEVEL, 10)}).'
)
power.add_argument(
    '--beta',
    dest='beta',
    metavar='BETA',
    type=_validate.probability,
    help=f'the type II error probability (defaults to {_defaults.BETA}).'
)
power.add_argument(
    '--pairing',
    dest='pairing',
    metavar='PAIRING',
    choices=_hypothesis.PAIRINGS,
    help=f"how the variances pair with the two z-values: one of {', '.join(_hypothesis.PAIRINGS)} (defaults to '{_defaults.PAIRING}')."
)
power.add_argument(
    '--z-alpha',
    dest='z_alpha',
    metavar='Z',
    type=_validate.positive_float,
    help='overrides the z-value derived from --alpha.'
)
power.add_argument(
    '--z-beta',
    dest='z_beta',
    metavar='Z',
    type=_validate.positive_float,
    help='overrides the z-value derived from --beta.'
)
power.set_defaults(func=run_power)
