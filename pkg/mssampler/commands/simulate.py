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
    metric: str,
    n: int,
    true_rate: Optional[float] = None,
    risk: Optional[str] = None,
    acr: Optional[float] = None,
    level: Optional[float] = None,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
    use_continuity: bool = True
) -> OutputEnvelope:
    return _procs.run_validate(
        metric,
        n,
        true_rate=true_rate,
        risk=risk,
        acr=acr,
        level=level,
        trials=trials,
        seed=seed,
        threads=threads,
        use_continuity=use_continuity,
    )


parser = _commands.add_parser(
    'validate',
    help='checks the coverage or the error rates by Monte Carlo simulation against the exact binomial values.'
)
parser.add_argument(
    '--metric',
    dest='metric',
    choices=('coverage', 'type1', 'power'),
    required=True,
    help='coverage of the lower bound, type I error at the ACR, or power below the ACR.'
)
parser.add_argument(
    '--n',
    dest='n',
    metavar='N',
    type=_validate.positive_int,
    required=True,
    help='the sample size.'
)
parser.add_argument(
    '--fr',
    dest='true_rate',
    metavar='RATE',
    type=_validate.probability,
    help='the real conformity rate of the simulated population.'
)
_validate.add_risk_arguments(parser)
_validate.add_level_argument(parser)
parser.add_argument(
    '--trials',
    dest='trials',
    metavar='COUNT',
    type=_validate.positive_int,
    help=f'the number of simulated inspections (defaults to {_defaults.MC_TRIALS}).'
)
parser.add_argument(
    '--seed',
    dest='seed',
    metavar='SEED',
    type=_validate.seed,
    help=f'the seed of the random streams (defaults to {_defaults.MC_SEED}).'
)
parser.add_argument(
    '--threads',
    dest='threads',
    metavar='COUNT',
    type=_validate.positive_int,
    help=f'the number of worker threads; does not change the result (defaults to {_defaults.MC_THREADS}).'
)
parser.add_argument(
    '--no-continuity',
    dest='use_continuity',
    action='store_false',
    help='omit the 1/(2n) continuity correction from the threshold.'
)
parser.set_defaults(func=run, use_continuity=True)
