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
    procs as _procs,
)
from ..reporting import OutputEnvelope
from . import (
    validate as _validate,
)
from .root import commands as _commands


def run(
    risk: Optional[str] = None,
    acr: Optional[float] = None,
    level: Optional[float] = None,
    width: Optional[float] = None,
    beta: Optional[float] = None,
    preliminary_rate: Optional[float] = None,
    two_stage: bool = False,
    pilot_width: Optional[float] = None,
    pilot_n: Optional[int] = None,
    pilot_d: Optional[int] = None
) -> OutputEnvelope:
    return _procs.run_plan(
        risk=risk,
        acr=acr,
        level=level,
        width=width,
        beta=beta,
        preliminary_rate=preliminary_rate,
        two_stage=two_stage,
        pilot_width=pilot_width,
        pilot_n=pilot_n,
        pilot_d=pilot_d,
    )


parser = _commands.add_parser(
    'plan',
    help='selects the method and the sample size of an inspection.'
)
_validate.add_risk_arguments(parser)
_validate.add_level_argument(parser)
parser.add_argument(
    '--w',
    dest='width',
    metavar='WIDTH',
    type=_validate.positive_float,
    help=f'the desired width of the interval (defaults to {_defaults.WIDTH}).'
)
parser.add_argument(
    '--beta',
    dest='beta',
    metavar='BETA',
    type=_validate.probability,
    help=f'the type II error probability of the test (defaults to {_defaults.BETA}).'
)
parser.add_argument(
    '--fp',
    dest='preliminary_rate',
    metavar='RATE',
    type=_validate.probability,
    help='a preliminary estimate of the conformity rate, if available.'
)
parser.add_argument(
    '--two-stage',
    dest='two_stage',
    action='store_true',
    help='plans a wide-interval pilot first, from which the preliminary rate is taken.'
)
parser.add_argument(
    '--pilot-w',
    dest='pilot_width',
    metavar='WIDTH',
    type=_validate.positive_float,
    help=f'the interval width of the pilot (defaults to {_defaults.PILOT_WIDTH}).'
)
parser.add_argument(
    '--pilot-n',
    dest='pilot_n',
    metavar='N',
    type=_validate.positive_int,
    help='the size of a completed pilot; finalizes the plan together with --pilot-d.'
)
parser.add_argument(
    '--pilot-d',
    dest='pilot_d',
    metavar='D',
    type=_validate.nonnegative_int,
    help='the non-conforming count of a completed pilot.'
)
parser.set_defaults(func=run)
