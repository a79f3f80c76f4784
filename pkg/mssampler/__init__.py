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
    defaults,
    typing,
    normal,
    estimation,
    hypothesis,
    planning,
    oracle,
    tables,
    reporting,
    procs,
    commands,
)

# quantiles and confidence
phi     = normal.phi
phi_inv = normal.phi_inv
ConfidenceSpec  = normal.ConfidenceSpec
confidence_spec = normal.confidence_spec

# interval estimate
SampleOutcome      = estimation.SampleOutcome
ConformityEstimate = estimation.ConformityEstimate
IntervalSizingSpec = estimation.IntervalSizingSpec
point_estimate       = estimation.point_estimate
lower_bound          = estimation.lower_bound
lower_bounds         = estimation.lower_bounds
coefficient_k        = estimation.coefficient_k
sample_size_interval = estimation.sample_size_interval

# test of hypothesis
RiskClass       = hypothesis.RiskClass
DecisionResult  = hypothesis.DecisionResult
PowerSizingSpec = hypothesis.PowerSizingSpec
UnboundedSampleSizeError = hypothesis.UnboundedSampleSizeError
DegenerateTestWarning    = hypothesis.DegenerateTestWarning
risk_class        = hypothesis.risk_class
decide            = hypothesis.decide
rejection_count   = hypothesis.rejection_count
power             = hypothesis.power
power_curve       = hypothesis.power_curve
sample_size_power = hypothesis.sample_size_power

# planning
SamplingPlan = planning.SamplingPlan
TwoStagePlan = planning.TwoStagePlan
make_plan           = planning.make_plan
make_two_stage_plan = planning.make_two_stage_plan

# output
OutputEnvelope = reporting.OutputEnvelope
