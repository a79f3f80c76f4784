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

from . import (  # noqa: F401
    binomial,
    simulation,
    validation,
)

BinomialSpec       = binomial.BinomialSpec
ValidationScenario = simulation.ValidationScenario
ValidationReport   = validation.ValidationReport

binom_pmf       = binomial.binom_pmf
binom_pmfs      = binomial.binom_pmfs
binom_cdf_upper = binomial.binom_cdf_upper

simulate_inspections = simulation.simulate_inspections

validate_coverage    = validation.validate_coverage
validate_test_errors = validation.validate_test_errors
exact_coverage       = validation.exact_coverage
exact_rejection_probability = validation.exact_rejection_probability
