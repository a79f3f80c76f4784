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

from typing import Optional, Sequence
import logging as _logging
import sys as _sys
import warnings as _warnings

from .. import (
    hypothesis as _hypothesis,
)
from ..reporting import (
    OutputEnvelope,
    emit,
)
from . import (  # noqa: F401
    validate,
    root,
    plan,
    estimate,
    size,
    decide,
    power,
    curve,
    simulate,
    tables,
)

parser = root.parser

EXIT_OK        = 0
EXIT_INVALID   = 2
EXIT_UNBOUNDED = 3
EXIT_IO        = 4


def configure_logging(verbose: bool = False):
    _logging.basicConfig(
        stream=_sys.stderr,
        level=_logging.DEBUG if verbose else _logging.WARNING,
        format="[%(levelname)s] %(name)s: %(message)s",
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    """parses ``argv`` (the process arguments if None), runs the
    sub-command, and returns the exit code."""
    try:
        parsed = vars(parser.parse_args(argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID
    configure_logging(parsed.pop('verbose', False))
    fn = parsed.pop('func', None)
    if fn is None:
        parser.print_help(file=_sys.stderr)
        return EXIT_INVALID

    with _warnings.catch_warnings(record=True) as caught:
        _warnings.simplefilter('always')
        try:
            payload = fn(**parsed)
        except _hypothesis.UnboundedSampleSizeError as e:
            return validate.abort(str(e), code=EXIT_UNBOUNDED)
        except OSError as e:
            return validate.abort(f"failed to write the output: {e}", code=EXIT_IO)
        except ValueError as e:
            return validate.abort(str(e), code=EXIT_INVALID)

    messages = [str(warning.message) for warning in caught]
    if isinstance(payload, OutputEnvelope):
        payload.warnings.extend(messages)
    else:
        for msg in messages:
            print(f"***warning: {msg}", file=_sys.stderr, flush=True)
    emit(payload)
    return EXIT_OK


def main():
    _sys.exit(run())
