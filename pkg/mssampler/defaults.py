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

CONFIDENCE_LEVEL = 0.80
BETA             = 0.1
WIDTH            = 0.1
PILOT_WIDTH      = 0.2
MAX_WIDTH        = 0.6
PAIRING          = 'canonical'
USE_CONTINUITY   = True

# acceptable conformity rates per product risk
RISK_ACR = {
    'low': 0.80,
    'medium': 0.85,
    'high': 0.95,
    'serious': 0.99,
}
RISK_NAME = 'medium'

CURVE_N_MIN = 10
CURVE_N_MAX = 100

MC_TRIALS     = 100_000
MC_SEED       = 0
MC_BLOCK_SIZE = 10_000
MC_THREADS    = 1

ENVELOPE_SCHEMA_VERSION = "1"
OUTPUT_FORMAT = 'json'
UNBOUNDED_LABEL = 'unbounded'

TABLE1_LEVELS = (0.70, 0.75, 0.80, 0.85, 0.90, 0.95, 0.99)
TABLE4_RATES  = (0.5, 0.6, 0.65, 0.7, 0.75, 0.8)
TABLE4_Z_ALPHA = 1.645
TABLE4_Z_BETA  = 1.282
TABLE5_POWERS = (0.7, 0.75, 0.8, 0.85, 0.9, 0.95)
TABLE5_RATE   = 0.7
TABLE6_WIDTHS = (0.1, 0.15, 0.2)
TABLE6_RATE   = 0.8

# sizes as printed in the published tables, for annotating the reproductions
PUBLISHED_TABLE4_HYPOTHESIS = (14, 26, 39, 66, 137, 498)
PUBLISHED_TABLE6 = (76, 41, 28)

TABLE_FILE_NAMES = {
    'table1': 'table1.csv',
    'table4': 'table4.csv',
    'table5': 'table5.csv',
    'table6': 'table6.csv',
}
