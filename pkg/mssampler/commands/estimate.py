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
    procs as _procs,
)
from ..reporting import OutputEnvelope
from . import (
    validate as _validate,
)
from .root import commands as _commands


def run(
    n: int,
    d: int,
    level: Optional[float] = None
) -> OutputEnvelope:
    return _procs.run_estimate(n, d, level=level)


parser = _commands.add_parser(
    'estimate',
    help='point estimate and one-sided lower confidence bound of the conformity rate.'
)
parser.add_argument(
    '--n',
    dest='n',
    metavar='N',
    type=_validate.positive_int,
    required=True,
    help='the number of inspected items.'
)
parser.add_argument(
    '--d',
    dest='d',
    metavar='D',
    type=_validate.nonnegative_int,
    required=True,
    help='the number of non-conforming items found.'
)
_validate.add_level_argument(parser)
parser.set_defaults(func=run)
