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

"""argument types and checks shared by the sub-commands."""

from argparse import ArgumentParser, ArgumentTypeError
from typing import Optional
import sys as _sys

from .. import (
    defaults as _defaults,
)


def probability(text: str) -> float:
    """a decimal in [0, 1]. percent signs are refused so that '80' and
    '0.80' cannot be confused."""
    if '%' in text:
        raise ArgumentTypeError(
            f"percent signs are not accepted: give '{text}' as a decimal in [0, 1]"
        )
    try:
        value = float(text)
    except ValueError:
        raise ArgumentTypeError(f"not a number: '{text}'")
    if not (0.0 <= value <= 1.0):
        raise ArgumentTypeError(f"expected a probability in [0, 1], got {text}")
    return value


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ArgumentTypeError(f"not an integer: '{text}'")
    if value < 1:
        raise ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ArgumentTypeError(f"not an integer: '{text}'")
    if value < 0:
        raise ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ArgumentTypeError(f"not a number: '{text}'")
    if not (value > 0):
        raise ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def seed(text: str) -> int:
    value = nonnegative_int(text)
    if value >= 2 ** 64:
        raise ArgumentTypeError(f"seed must fit in 64 bits, got {text}")
    return value


def add_level_argument(parser: ArgumentParser):
    parser.add_argument(
        '--lc',
        dest='level',
        metavar='LEVEL',
        type=probability,
        help=f'the level of confidence, as a decimal (defaults to {_defaults.CONFIDENCE_LEVEL}).'
    )


def add_risk_arguments(parser: ArgumentParser):
    parser.add_argument(
        '--risk',
        dest='risk',
        metavar='CLASS',
        type=str.lower,
        choices=tuple(_defaults.RISK_ACR.keys()),
        help=f"the product-risk class: one of {', '.join(_defaults.RISK_ACR)} (defaults to '{_defaults.RISK_NAME}')."
    )
    parser.add_argument(
        '--acr',
        dest='acr',
        metavar='RATE',
        type=probability,
        help='an explicit acceptable conformity rate; overrides --risk.'
    )


def abort(msg: str, code: int = 2, stream: Optional[object] = None) -> int:
    """prints a one-line diagnostic, and returns the exit code."""
    if stream is None:
        stream = _sys.stderr
    print(f"***{msg}", file=stream, flush=True)
    return code
