import warnings

import numpy.testing as npt
import pytest

from mssampler import hypothesis
from mssampler.estimation import SampleOutcome, point_estimate
from mssampler.hypothesis import RiskClass, PowerSizingSpec, UnboundedSampleSizeError
from mssampler.normal import confidence_spec


@pytest.fixture
def lc80():
    return confidence_spec(0.80)


@pytest.fixture
def medium():
    return RiskClass.from_name('medium')


@pytest.mark.parametrize("name,acr", [
    ('low', 0.80),
    ('medium', 0.85),
    ('high', 0.95),
    ('serious', 0.99),
    ('HIGH', 0.95),
    (' Serious ', 0.99),
])
def test_risk_classes(name, acr):
    risk = RiskClass.from_name(name)
    assert risk.acr == acr
    assert risk.label == name.strip().lower()


def test_risk_class_default_and_custom():
    assert hypothesis.risk_class().label == 'medium'
    custom = RiskClass.from_acr(0.9)
    assert custom.label == 'custom'
    assert custom.acr == 0.9
    with pytest.raises(ValueError):
        RiskClass.from_name('extreme')
    with pytest.raises(ValueError):
        RiskClass.from_acr(1.0)
    with pytest.raises(ValueError):
        RiskClass(name='low', acr=0.5)


def test_decide_worked_example(lc80, medium):
    result = hypothesis.decide(SampleOutcome(93, 18), medium, lc80)
    assert result.reject
    npt.assert_allclose(result.threshold, 0.81346, atol=1e-5)
    npt.assert_allclose(result.point, 0.80645, atol=1e-5)
    assert result.continuity_applied

    result = hypothesis.decide(SampleOutcome(93, 17), medium, lc80)
    assert not result.reject
    npt.assert_allclose(result.point, 0.81720, atol=1e-5)


def test_decide_no_defects(lc80):
    for name in ('low', 'medium', 'high', 'serious'):
        assert not hypothesis.decide(SampleOutcome(100, 0), RiskClass.from_name(name), lc80).reject


def test_decide_without_continuity(lc80, medium):
    with_cc = hypothesis.decide(SampleOutcome(93, 17), medium, lc80, use_continuity=True)
    without = hypothesis.decide(SampleOutcome(93, 17), medium, lc80, use_continuity=False)
    npt.assert_allclose(without.threshold - with_cc.threshold, 1 / (2 * 93))
    assert not without.continuity_applied


@pytest.mark.parametrize("n", [10, 36, 93])
def test_decision_consistent_with_threshold(n, lc80, medium):
    threshold = hypothesis.decision_threshold(n, medium, lc80)
    d_star = hypothesis.rejection_count(n, medium, lc80)
    for d in range(n + 1):
        outcome = SampleOutcome(n, d)
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', hypothesis.DegenerateTestWarning)
            result = hypothesis.decide(outcome, medium, lc80)
        assert result.reject == (point_estimate(outcome) <= threshold)
        assert result.reject == ((d_star is not None) and (d >= d_star))


def test_rejection_count_examples(lc80, medium):
    assert hypothesis.rejection_count(93, medium, lc80) == 18
    assert hypothesis.rejection_count(36, medium, lc80) == 8


def test_degenerate_threshold_warns():
    confidence = confidence_spec(0.99)
    risk = RiskClass.from_name('medium')
    with pytest.warns(hypothesis.DegenerateTestWarning):
        result = hypothesis.decide(SampleOutcome(1, 1), risk, confidence)
    assert result.threshold <= 0
    assert not result.reject
    assert hypothesis.rejection_count(1, risk, confidence) is None


def test_continuity_comparable_flag(lc80, medium):
    # 1/(2n) = 0.05 against |f - ACR| / 2 = 0.025
    assert hypothesis.decide(SampleOutcome(10, 2), medium, lc80).continuity_comparable
    assert not hypothesis.decide(SampleOutcome(100, 50), medium, lc80).continuity_comparable


@pytest.mark.parametrize("n,expected", [(13, 0.70), (21, 0.80), (36, 0.905), (50, 0.95)])
def test_power_examples(n, expected, lc80, medium):
    npt.assert_allclose(hypothesis.power(n, 0.7, medium, lc80), expected, atol=0.01)


def test_power_at_acr_is_alpha(lc80, medium):
    npt.assert_allclose(hypothesis.power(36, 0.85, medium, lc80), 0.2, atol=1e-9)
    for _, value in hypothesis.power_curve(10, 40, 0.85, medium, lc80):
        npt.assert_allclose(value, 0.2, atol=1e-9)


@pytest.mark.parametrize("f", [0.0, 1.0])
def test_power_rejects_degenerate_rate(f, lc80, medium):
    with pytest.raises(ValueError):
        hypothesis.power(36, f, medium, lc80)


def test_power_curve(lc80, medium):
    curve = hypothesis.power_curve(13, 50, 0.7, medium, lc80)
    assert [n for n, _ in curve] == list(range(13, 51))
    values = [value for _, value in curve]
    assert all(a < b for a, b in zip(values, values[1:]))
    single = hypothesis.power_curve(36, 36, 0.7, medium, lc80)
    assert len(single) == 1
    npt.assert_allclose(single[0][1], 0.905, atol=0.005)
    with pytest.raises(ValueError):
        hypothesis.power_curve(20, 10, 0.7, medium, lc80)


def _canonical(fp, alpha=0.2, beta=0.1):
    return PowerSizingSpec.create(acr=0.85, preliminary_rate=fp, alpha=alpha, beta=beta, pairing='canonical')


def test_sample_size_power_examples():
    assert hypothesis.sample_size_power(_canonical(0.7)) == 36
    assert hypothesis.sample_size_power(_canonical(0.5)) == 8
    assert hypothesis.sample_size_power(_canonical(0.8)) == 265
    printed = PowerSizingSpec.create(acr=0.85, preliminary_rate=0.8, alpha=0.05, beta=0.1, pairing='printed')
    assert hypothesis.sample_size_power(printed) == 498


@pytest.mark.parametrize("fp,expected", list(zip(
    (0.5, 0.6, 0.65, 0.7, 0.75, 0.8),
    (14, 26, 39, 66, 137, 498),
)))
def test_sample_size_power_printed_multipliers(fp, expected):
    spec = PowerSizingSpec.create(
        acr=0.85, preliminary_rate=fp, pairing='printed', z_alpha=1.645, z_beta=1.282
    )
    assert spec.z_alpha == 1.645
    assert spec.z_beta == 1.282
    assert hypothesis.sample_size_power(spec) == expected


@pytest.mark.parametrize("target,expected", list(zip(
    (0.7, 0.75, 0.8, 0.85, 0.9, 0.95),
    (13, 17, 21, 27, 36, 50),
)))
def test_sample_size_power_table(target, expected):
    assert hypothesis.sample_size_power(_canonical(0.7, beta=round(1 - target, 10))) == expected


def test_sample_size_power_matches_power_scan(lc80, medium):
    for fp in (0.5, 0.6, 0.7, 0.75):
        n = hypothesis.sample_size_power(_canonical(fp))
        scanned = next(m for m in range(1, 10_000) if hypothesis.power(m, fp, medium, lc80) >= 0.9)
        assert abs(n - scanned) <= 1


def test_sample_size_power_increases_toward_acr():
    for pairing in ('canonical', 'printed'):
        sizes = [
            hypothesis.sample_size_power(
                PowerSizingSpec.create(acr=0.85, preliminary_rate=fp, pairing=pairing)
            ) for fp in (0.5, 0.6, 0.7, 0.75, 0.8, 0.83, 0.84)
        ]
        assert all(a < b for a, b in zip(sizes, sizes[1:]))


@pytest.mark.parametrize("fp", [0.85, 0.9, 1.0])
def test_sample_size_power_unbounded(fp):
    with pytest.raises(UnboundedSampleSizeError, match="unbounded"):
        hypothesis.sample_size_power(_canonical(fp))


def test_power_sizing_defaults():
    spec = PowerSizingSpec.create(acr=0.85, preliminary_rate=0.7)
    npt.assert_allclose(spec.alpha, 0.2)
    assert spec.beta == 0.1
    assert spec.pairing == 'canonical'
    assert hypothesis.sample_size_power(spec) == 36


def test_power_sizing_invariants():
    with pytest.raises(ValueError):
        PowerSizingSpec.create(acr=0.85, preliminary_rate=0.7, pairing='swapped')
    with pytest.raises(ValueError):
        PowerSizingSpec.create(acr=0.85, preliminary_rate=0.7, beta=0.6)
    with pytest.raises(ValueError):
        PowerSizingSpec.create(acr=0.85, preliminary_rate=1.2)
