import numpy as np
import numpy.testing as npt
import pytest
from scipy import stats

from mssampler import oracle
from mssampler.normal import confidence_spec
from mssampler.hypothesis import RiskClass, rejection_count, power
from mssampler.oracle import BinomialSpec, ValidationScenario


def _standard_error(rate, trials):
    return np.sqrt(rate * (1 - rate) / trials)


# exact binomial probabilities

def test_pmf_trivial():
    assert oracle.binom_pmf(BinomialSpec(1, 0.5), 0) == 0.5
    assert oracle.binom_pmf(BinomialSpec(10, 0.0), 0) == 1.0
    assert oracle.binom_pmf(BinomialSpec(10, 0.0), 3) == 0.0
    assert oracle.binom_pmf(BinomialSpec(10, 1.0), 10) == 1.0


def test_pmf_worked_example():
    npt.assert_allclose(oracle.binom_pmf(BinomialSpec(93, 0.15), 18), 0.054747, atol=5e-6)


@pytest.mark.parametrize("n,p", [(1, 0.3), (10, 0.5), (93, 0.15), (500, 0.02), (1000, 0.7), (10000, 0.15)])
def test_pmfs_match_scipy(n, p):
    masses = oracle.binom_pmfs(BinomialSpec(n, p))
    expected = stats.binom.pmf(np.arange(n + 1), n, p)
    significant = expected > 1e-12
    npt.assert_allclose(masses[significant], expected[significant], rtol=1e-9)
    assert abs(masses.sum() - 1.0) <= 1e-9


@pytest.mark.parametrize("n,p", [(1, 0.5), (7, 0.0), (7, 1.0), (30, 0.2), (93, 0.15)])
def test_upper_tail_differences(n, p):
    spec = BinomialSpec(n, p)
    for k in range(n):
        diff = oracle.binom_cdf_upper(spec, k) - oracle.binom_cdf_upper(spec, k + 1)
        assert abs(diff - oracle.binom_pmf(spec, k)) <= 1e-12


def test_upper_tail_examples():
    assert oracle.binom_cdf_upper(BinomialSpec(5, 0.3), 0) == 1.0
    npt.assert_allclose(oracle.binom_cdf_upper(BinomialSpec(2, 0.5), 2), 0.25)
    npt.assert_allclose(oracle.binom_cdf_upper(BinomialSpec(93, 0.15), 18), 0.151329, atol=5e-6)


@pytest.mark.parametrize("n,p", [(30, 0.2), (93, 0.15), (200, 0.5), (1000, 0.01)])
def test_upper_tail_matches_scipy(n, p):
    spec = BinomialSpec(n, p)
    for k in range(1, n + 1, max(1, n // 20)):
        expected = stats.binom.sf(k - 1, n, p)
        if expected > 1e-12:
            npt.assert_allclose(oracle.binom_cdf_upper(spec, k), expected, rtol=1e-9, atol=1e-15)


@pytest.mark.parametrize("k", [-1, 11, 2.5])
def test_count_out_of_range(k):
    spec = BinomialSpec(10, 0.3)
    with pytest.raises(ValueError):
        oracle.binom_pmf(spec, k)
    with pytest.raises(ValueError):
        oracle.binom_cdf_upper(spec, k)


def test_binomial_spec_invariants():
    with pytest.raises(ValueError):
        BinomialSpec(0, 0.5)
    with pytest.raises(ValueError):
        BinomialSpec(10, 1.5)
    spec = BinomialSpec.of_nonconforming(93, 0.85)
    npt.assert_allclose(spec.p, 0.15)


# simulation

def test_simulation_degenerate_rates():
    assert (oracle.simulate_inspections(ValidationScenario(1.0, 10, trials=5, seed=3)) == 0).all()
    assert (oracle.simulate_inspections(ValidationScenario(0.0, 10, trials=5, seed=3)) == 10).all()


def test_simulation_mean():
    scenario = ValidationScenario(0.85, 93, trials=100_000, seed=42)
    d = oracle.simulate_inspections(scenario)
    assert d.shape == (100_000,)
    se = np.sqrt(0.15 * 0.85 / 93 / scenario.trials)
    assert abs(d.mean() / 93 - 0.15) <= 4 * se


def test_simulation_independent_of_threads():
    scenario = ValidationScenario(0.7, 36, trials=25_000, seed=11)
    single = oracle.simulate_inspections(scenario, threads=1)
    multi  = oracle.simulate_inspections(scenario, threads=3)
    npt.assert_array_equal(single, multi)


def test_simulation_depends_on_seed():
    first  = oracle.simulate_inspections(ValidationScenario(0.5, 50, trials=1000, seed=1))
    second = oracle.simulate_inspections(ValidationScenario(0.5, 50, trials=1000, seed=2))
    again  = oracle.simulate_inspections(ValidationScenario(0.5, 50, trials=1000, seed=1))
    npt.assert_array_equal(first, again)
    assert not np.array_equal(first, second)


def test_simulation_prefix_stable():
    # the first blocks do not depend on the total number of trials
    short = oracle.simulate_inspections(ValidationScenario(0.8, 20, trials=10_000, seed=5))
    longer = oracle.simulate_inspections(ValidationScenario(0.8, 20, trials=30_000, seed=5))
    npt.assert_array_equal(short, longer[:10_000])


def test_scenario_invariants():
    with pytest.raises(ValueError):
        ValidationScenario(1.2, 10)
    with pytest.raises(ValueError):
        ValidationScenario(0.5, 10, trials=0)
    with pytest.raises(ValueError):
        ValidationScenario(0.5, 10, seed=-1)
    with pytest.raises(ValueError):
        ValidationScenario(0.5, 10, seed=2 ** 64)


# validation reports

def test_coverage_perfect_conformity():
    confidence = confidence_spec(0.80)
    report = oracle.validate_coverage(ValidationScenario(1.0, 50, trials=1000, seed=1), confidence)
    assert report.metric == 'coverage'
    assert report.empirical_rate == 1.0
    assert report.standard_error == 0.0
    assert report.exact_rate == 1.0
    assert report.trials == 1000
    assert report.seed == 1


@pytest.mark.parametrize("n,true_rate,level", [
    (30, 0.5, 0.80),
    (30, 0.7, 0.80),
    (30, 0.85, 0.80),
    (30, 0.95, 0.80),
    (93, 0.85, 0.80),
    (200, 0.5, 0.95),
])
def test_exact_coverage_attains_level(n, true_rate, level):
    assert oracle.exact_coverage(n, true_rate, confidence_spec(level)) >= level


def test_exact_coverage_small_sample():
    npt.assert_allclose(oracle.exact_coverage(30, 0.85, confidence_spec(0.80)), 0.8486, atol=5e-4)
    npt.assert_allclose(oracle.exact_coverage(30, 0.5, confidence_spec(0.80)), 0.8192, atol=5e-4)


@pytest.mark.parametrize("n,true_rate,level,seed", [
    (93, 0.85, 0.80, 42),
    (30, 0.7, 0.80, 3),
    (200, 0.5, 0.95, 9),
])
def test_coverage_converges_to_exact(n, true_rate, level, seed):
    confidence = confidence_spec(level)
    report = oracle.validate_coverage(
        ValidationScenario(true_rate, n, trials=100_000, seed=seed), confidence
    )
    se = _standard_error(report.exact_rate, report.trials)
    assert abs(report.empirical_rate - report.exact_rate) <= 4 * se
    assert report.empirical_rate >= level - 3 * report.standard_error
    npt.assert_allclose(
        report.standard_error,
        _standard_error(report.empirical_rate, report.trials)
    )


def test_type_i_worked_example():
    confidence = confidence_spec(0.80)
    scenario = ValidationScenario(0.85, 93, trials=100_000, seed=42)
    report = oracle.validate_test_errors(scenario, 0.85, confidence)
    assert report.metric == 'type_i'
    npt.assert_allclose(report.exact_rate, 0.151329, atol=5e-6)
    assert abs(report.empirical_rate - report.exact_rate) <= 4 * _standard_error(report.exact_rate, report.trials)


def test_type_ii_worked_example():
    confidence = confidence_spec(0.80)
    scenario = ValidationScenario(0.7, 36, trials=100_000, seed=7)
    report = oracle.validate_test_errors(scenario, RiskClass.from_name('medium'), confidence)
    assert report.metric == 'type_ii'
    npt.assert_allclose(report.exact_rate, 0.1124, atol=5e-4)
    assert abs(report.empirical_rate - report.exact_rate) <= 4 * _standard_error(report.exact_rate, report.trials)


def test_type_ii_total_non_conformity():
    confidence = confidence_spec(0.80)
    scenario = ValidationScenario(0.0, 20, trials=1000, seed=0)
    report = oracle.validate_test_errors(scenario, 0.85, confidence)
    assert report.metric == 'type_ii'
    assert report.empirical_rate == 0.0
    assert report.exact_rate == 0.0


def test_test_errors_above_acr():
    with pytest.raises(ValueError):
        oracle.validate_test_errors(ValidationScenario(0.9, 20, trials=10), 0.85, confidence_spec(0.80))


def test_reports_independent_of_threads():
    confidence = confidence_spec(0.80)
    scenario = ValidationScenario(0.85, 93, trials=30_000, seed=123)
    assert oracle.validate_coverage(scenario, confidence, threads=1) == \
        oracle.validate_coverage(scenario, confidence, threads=4)
    assert oracle.validate_test_errors(scenario, 0.85, confidence, threads=1) == \
        oracle.validate_test_errors(scenario, 0.85, confidence, threads=4)


@pytest.mark.parametrize("n", [30, 50, 93, 200])
@pytest.mark.parametrize("acr", [0.80, 0.85, 0.95])
def test_exact_producers_risk_bounded(n, acr):
    confidence = confidence_spec(0.80)
    assert oracle.exact_rejection_probability(n, acr, acr, confidence) <= confidence.alpha + 0.08


@pytest.mark.parametrize("n", [30, 50, 100])
@pytest.mark.parametrize("true_rate", [0.5, 0.6, 0.7, 0.8])
def test_power_approximation_quality(n, true_rate):
    confidence = confidence_spec(0.80)
    risk = RiskClass.from_name('medium')
    exact = oracle.exact_rejection_probability(n, true_rate, risk, confidence)
    # the rule decides on integer counts: allow one lattice step around the critical count
    d_star = rejection_count(n, risk, confidence)
    masses = oracle.binom_pmfs(BinomialSpec.of_nonconforming(n, true_rate))
    step = max(masses[d_star - 1], masses[d_star])
    assert abs(power(n, true_rate, risk, confidence) - exact) <= 0.03 + step


def test_monte_carlo_within_four_standard_errors_over_seeds():
    confidence = confidence_spec(0.80)
    misses = 0
    for seed in range(20):
        report = oracle.validate_test_errors(
            ValidationScenario(0.75, 50, trials=20_000, seed=seed), 0.85, confidence
        )
        if abs(report.empirical_rate - report.exact_rate) > 4 * _standard_error(report.exact_rate, report.trials):
            misses += 1
    assert misses == 0


def test_power_approximation_worst_cell():
    confidence = confidence_spec(0.80)
    risk = RiskClass.from_name('medium')
    assert rejection_count(50, risk, confidence) == 11
    exact = oracle.exact_rejection_probability(50, 0.8, risk, confidence)
    npt.assert_allclose(exact, 0.4164, atol=5e-4)
    npt.assert_allclose(power(50, 0.8, risk, confidence), 0.5527, atol=5e-4)
