import numpy as np
import numpy.testing as npt
import pytest

from mssampler import estimation
from mssampler.estimation import SampleOutcome, IntervalSizingSpec
from mssampler.normal import confidence_spec


@pytest.fixture
def lc80():
    return confidence_spec(0.80)


def test_point_estimate():
    assert estimation.point_estimate(SampleOutcome(50, 0)) == 1.0
    assert estimation.point_estimate(SampleOutcome(50, 50)) == 0.0
    npt.assert_allclose(estimation.point_estimate(SampleOutcome(93, 14)), 0.8495, atol=1e-4)


@pytest.mark.parametrize("n,d", [(0, 0), (5, 7), (10, -1), (2.5, 1)])
def test_sample_outcome_invariants(n, d):
    with pytest.raises(ValueError):
        SampleOutcome(n, d)


def test_sample_outcome_message():
    with pytest.raises(ValueError, match="d exceeds n"):
        SampleOutcome(5, 7)


def test_lower_bound_examples(lc80):
    estimate = estimation.lower_bound(SampleOutcome(50, 5), lc80)
    assert estimate.point == 0.9
    npt.assert_allclose(estimate.lower_bound, 0.847173, atol=1e-6)

    estimate = estimation.lower_bound(SampleOutcome(50, 0), lc80)
    assert estimate.point == 1.0
    npt.assert_allclose(estimate.lower_bound, 0.969549, atol=1e-6)

    estimate = estimation.lower_bound(SampleOutcome(50, 50), lc80)
    assert estimate.point == 0.0
    assert estimate.lower_bound == 0.0


def test_lower_bound_within_designed_width(lc80):
    estimate = estimation.lower_bound(SampleOutcome(93, 14), lc80)
    assert 0 < estimate.point - estimate.lower_bound <= 0.1


def test_lower_bound_below_point(lc80):
    for n in (1, 2, 5, 30, 93):
        for d in range(n + 1):
            estimate = estimation.lower_bound(SampleOutcome(n, d), lc80)
            assert 0.0 <= estimate.lower_bound < 1.0
            if d < n:
                assert estimate.lower_bound < estimate.point


def test_lower_bound_nonincreasing_in_d(lc80):
    for n in (10, 36, 93):
        bounds = [estimation.lower_bound(SampleOutcome(n, d), lc80).lower_bound for d in range(n + 1)]
        assert all(a >= b for a, b in zip(bounds, bounds[1:]))


def test_lower_bound_nondecreasing_in_n(lc80):
    for ratio in (0.0, 0.1, 0.2, 0.5):
        bounds = []
        for n in (10, 20, 40, 80, 160):
            bounds.append(estimation.lower_bound(SampleOutcome(n, int(n * ratio)), lc80).lower_bound)
        assert all(a <= b for a, b in zip(bounds, bounds[1:]))


def test_lower_bound_decreases_with_confidence():
    outcome = SampleOutcome(93, 14)
    bounds = [
        estimation.lower_bound(outcome, confidence_spec(level)).lower_bound
        for level in (0.70, 0.80, 0.90, 0.95, 0.99)
    ]
    assert all(a > b for a, b in zip(bounds, bounds[1:]))


def test_lower_bounds_vector(lc80):
    bounds = estimation.lower_bounds(50, lc80)
    assert bounds.shape == (51,)
    expected = [estimation.lower_bound(SampleOutcome(50, d), lc80).lower_bound for d in range(51)]
    npt.assert_allclose(bounds, expected, atol=1e-12)


def test_estimate_to_dict(lc80):
    record = estimation.lower_bound(SampleOutcome(50, 5), lc80).to_dict()
    assert list(record) == ['point', 'lower_bound', 'level']
    assert record['level'] == 0.80


@pytest.mark.parametrize("fp,expected", [
    (None, 1.0),
    (0.5, 1.0),
    (0.3, 1.0),
    (0.7, 1.0),
    (0.75, 0.84),
    (0.8, 0.75),
    (0.2, 4 * 0.25 * 0.75),
    (0.02, 4 * 0.1 * 0.9),
    (0.99, 4 * 0.1 * 0.9),
])
def test_coefficient_k(fp, expected):
    npt.assert_allclose(estimation.coefficient_k(0.1, fp), expected, atol=1e-12)


@pytest.mark.parametrize("width", [0.0, -0.1, 0.61, 1.0])
def test_width_out_of_range(width):
    with pytest.raises(ValueError):
        estimation.coefficient_k(width, None)
    with pytest.raises(ValueError):
        IntervalSizingSpec.create(width=width)


def test_preliminary_rate_out_of_range():
    with pytest.raises(ValueError):
        IntervalSizingSpec.create(width=0.1, preliminary_rate=1.2)


@pytest.mark.parametrize("width,fp,expected", [
    (0.1, None, 93),
    (0.1, 0.5, 93),
    (0.1, 0.6, 93),
    (0.1, 0.65, 93),
    (0.1, 0.7, 93),
    (0.1, 0.75, 82),
    (0.1, 0.8, 76),
    (0.15, 0.8, 41),
    (0.2, 0.8, 27),
    (0.2, None, 30),
])
def test_sample_size_interval(width, fp, expected):
    spec = IntervalSizingSpec.create(width=width, level=0.80, preliminary_rate=fp)
    assert estimation.sample_size_interval(spec) == expected


def test_sample_size_interval_is_ceiling():
    spec = IntervalSizingSpec.create(width=0.2, level=0.80, preliminary_rate=0.8)
    bound = estimation.interval_size_bound(spec)
    npt.assert_allclose(bound, 26.841, atol=1e-3)
    assert estimation.sample_size_interval(spec) == int(np.ceil(bound))


def test_sample_size_interval_defaults():
    spec = IntervalSizingSpec.create()
    assert spec.width == 0.1
    assert spec.confidence.level == 0.80
    assert estimation.sample_size_interval(spec) == 93


@pytest.mark.parametrize("fp", [0.5, 0.6, 0.7, 0.8, 0.9])
@pytest.mark.parametrize("width", [0.1, 0.15, 0.2])
def test_width_guarantee(fp, width, lc80):
    n = estimation.sample_size_interval(
        IntervalSizingSpec(width=width, confidence=lc80, preliminary_rate=fp)
    )
    d = int(round(n * (1 - fp)))
    estimate = estimation.lower_bound(SampleOutcome(n, d), lc80)
    assert estimate.point - estimate.lower_bound <= width + 0.005
