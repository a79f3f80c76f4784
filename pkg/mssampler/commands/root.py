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

from argparse import ArgumentParser as _ArgumentParser
import sys as _sys


class _Parser(_ArgumentParser):
    """reports argument errors as a single line and exits with code 2."""

    def error(self, message: str):
        print(f"***{self.prog}: {message}", file=_sys.stderr, flush=True)
        raise SystemExit(2)


parser = _Parser(
    'mssampler',
    description='sample sizes, conformity-rate estimates and decision tests for market surveillance.'
)
parser.add_argument(
    '-v',
    '--verbose',
    dest='verbose',
    action='store_true',
    help='log the details of the computation to the error stream.'
)
commands = parser.add_subparsers()
