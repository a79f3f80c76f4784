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

from typing import Optional, Union

import pandas as _pd

from .. import (
    defaults as _defaults,
    procs as _procs,
    tables as _tables,
)
from ..normal import confidence_spec
from ..reporting import (
    OutputEnvelope,
    write_csv,
)
from ..typing import (
    OutputFormat,
)
from . import (
    validate as _validate,
)
from .root import commands as _commands


def run(
    figure: int,
    risk: Optional[str] = None,
    acr: Optional[float] = None,
    level: Optional[float] = None,
    width: Optional[float] = None,
    beta: Optional[float] = None,
    preliminary_rate: Optional[float] = None,
    fp_grid: Optional[str] = None,
    n_min: Optional[int] = None,
    n_max: Optional[int] = None,
    w_min: Optional[float] = None,
    w_max: Optional[float] = None,
    w_step: Optional[float] = None,
    outpath: Optional[str] = None,
    output_format: Optional[OutputFormat] = None
) -> Union[OutputEnvelope, _pd.DataFrame]:
    if output_format is None:
        output_format = _defaults.OUTPUT_FORMAT
    riskclass  = _procs.resolve_risk(risk, acr)
    confidence = confidence_spec(level)
    if width is None:
        width = _defaults.WIDTH
    if beta is None:
        beta = _defaults.BETA
    grid = _tables.parse_grid(fp_grid) if fp_grid is not None else None
    widths = None
    if (w_min is not None) or (w_max is not None) or (w_step is not None):
        if None in (w_min, w_max, w_step):
            raise ValueError("a width grid needs all of --w-min, --w-max and --w-step")
        widths = _tables.linear_grid(w_min, w_max, w_step)

    frame = _procs.run_curve(
        figure,
        riskclass,
        confidence,
        width=width,
        beta=beta,
        preliminary_rate=preliminary_rate,
        fp_grid=grid,
        n_min=n_min,
        n_max=n_max,
        widths=widths,
    )
    inputs = _procs.curve_inputs(
        figure,
        riskclass,
        confidence,
        w=width,
        beta=beta,
        fp=preliminary_rate,
        fp_grid=fp_grid,
        n_min=n_min,
        n_max=n_max,
        widths=widths,
    )
    if outpath is not None:
        path = write_csv(frame, outpath)
        return OutputEnvelope(
            command='curve',
            inputs=inputs,
            result={'file': str(path), 'rows': len(frame), 'columns': list(frame.columns)},
        )
    elif output_format == 'csv':
        return frame
    return OutputEnvelope(
        command='curve',
        inputs=inputs,
        result={'columns': list(frame.columns), 'rows': frame.to_dict(orient='records')},
    )


parser = _commands.add_parser(
    'curve',
    help='the data series behind the sample-size and the power figures.'
)
parser.add_argument(
    '--figure',
    dest='figure',
    metavar='FIGURE',
    type=int,
    choices=(1, 2, 3),
    required=True,
    help='1: sizes against the preliminary rate; 2: power against the sample size; 3: interval size against the width.'
)
_validate.add_risk_arguments(parser)
_validate.add_level_argument(parser)
parser.add_argument(
    '--w',
    dest='width',
    metavar='WIDTH',
    type=_validate.positive_float,
    help=f'the interval width for figure 1 (defaults to {_defaults.WIDTH}).'
)
parser.add_argument(
    '--beta',
    dest='beta',
    metavar='BETA',
    type=_validate.probability,
    help=f'the type II error probability for figure 1 (defaults to {_defaults.BETA}).'
)
parser.add_argument(
    '--fp',
    dest='preliminary_rate',
    metavar='RATE',
    type=_validate.probability,
    help='the (true) conformity rate for figures 2 and 3.'
)
parser.add_argument(
    '--fp-grid',
    dest='fp_grid',
    metavar='GRID',
    help='the preliminary rates of figure 1, as START:STOP:STEP or a comma-separated list.'
)
parser.add_argument(
    '--n-min',
    dest='n_min',
    metavar='N',
    type=_validate.positive_int,
    help=f'the smallest sample size of figure 2 (defaults to {_defaults.CURVE_N_MIN}).'
)
parser.add_argument(
    '--n-max',
    dest='n_max',
    metavar='N',
    type=_validate.positive_int,
    help=f'the largest sample size of figure 2 (defaults to {_defaults.CURVE_N_MAX}).'
)
parser.add_argument(
    '--w-min',
    dest='w_min',
    metavar='WIDTH',
    type=_validate.positive_float,
    help='the smallest width of figure 3.'
)
parser.add_argument(
    '--w-max',
    dest='w_max',
    metavar='WIDTH',
    type=_validate.positive_float,
    help='the largest width of figure 3.'
)
parser.add_argument(
    '--w-step',
    dest='w_step',
    metavar='STEP',
    type=_validate.positive_float,
    help='the width step of figure 3.'
)
parser.add_argument(
    '-o',
    '--out',
    dest='outpath',
    metavar='CSV-FILE',
    help='writes the series to the CSV file instead of the standard output.'
)
parser.add_argument(
    '--format',
    dest='output_format',
    choices=('json', 'csv'),
    help=f"the format on the standard output (defaults to '{_defaults.OUTPUT_FORMAT}')."
)
parser.set_defaults(func=run)
