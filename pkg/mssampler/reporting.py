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

"""the output envelope of the commands, and its JSON / CSV writers."""

from pathlib import Path
from typing import Dict, Any, List, Optional, TextIO, Union
import dataclasses as _dataclasses
import json as _json
import sys as _sys

import numpy as _np
import pandas as _pd

from . import (
    defaults as _defaults,
)
from .typing import (
    PathLike,
)


@_dataclasses.dataclass
class OutputEnvelope:
    command: str
    inputs: Dict[str, Any]
    result: Dict[str, Any]
    warnings: List[str] = _dataclasses.field(default_factory=list)
    schema_version: str = _defaults.ENVELOPE_SCHEMA_VERSION

    def to_dict(self) -> Dict[str, Any]:
        # the field order is part of the output format
        return {
            'schema_version': self.schema_version,
            'command': self.command,
            'inputs': self.inputs,
            'result': self.result,
            'warnings': list(self.warnings),
        }

    def to_json(self) -> str:
        return _json.dumps(self.to_dict(), indent=2, default=_to_builtin) + "\n"


def _to_builtin(value: Any) -> Any:
    if isinstance(value, _np.integer):
        return int(value)
    elif isinstance(value, _np.floating):
        return float(value)
    elif isinstance(value, _np.bool_):
        return bool(value)
    elif isinstance(value, _np.ndarray):
        return value.tolist()
    elif isinstance(value, Path):
        return str(value)
    raise TypeError(f"not serializable: {type(value).__name__}")


def frame_to_csv(frame: _pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n")


def write_csv(frame: _pd.DataFrame, outpath: PathLike) -> Path:
    """writes ``frame`` with a header row; creates the parent directory
    if not existent."""
    outpath = Path(outpath)
    if not outpath.parent.exists():
        outpath.parent.mkdir(parents=True)
    with open(outpath, 'w', newline='') as out:
        out.write(frame_to_csv(frame))
    return outpath


def emit(
    payload: Union[OutputEnvelope, _pd.DataFrame],
    stream: Optional[TextIO] = None
):
    if stream is None:
        stream = _sys.stdout
    if isinstance(payload, OutputEnvelope):
        stream.write(payload.to_json())
    else:
        stream.write(frame_to_csv(payload))
    stream.flush()
