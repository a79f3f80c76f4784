import numpy.testing as npt
import pytest

from mssampler import tables
from mssampler.hypothesis import RiskClass
from mssampler.normal import confidence_spec


def test_linear_grid():
    assert tables.linear_grid(0.5, 0.7, 0.05) == (0.5, 0.55, 0.6, 0.65, 0.7)
    assert tables.linear_grid(0.1, 0.2, 0.05) == (0.1, 0.15, 0.2)
    with pytest.raises(ValueError):
        tables.linear_grid(0.5, 0.7, 0.0)
    with pytest.raises(ValueError):
        tables.linear_grid(0.7, 0.5, 0.05)


def test_parse_grid():
    assert tables.parse_grid('0.5:0.8:0.05') == (0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8)
    assert tables.parse_grid('0.5,0.7, 0.8') == (0.5, 0.7, 0.8)
    with pytest.raises(ValueError):
        tables.parse_grid('0.5:0.8')
    with pytest.raises(ValueError):
        tables.parse_grid('a,b')


def test_table1():
    frame = tables.table1()
    assert list(frame.columns) == ['level', 'alpha', 'z', 'z_rounded']
    npt.assert_allclose(frame['z_rounded'], [0.524, 0.674, 0.842, 1.036, 1.282, 1.645, 2.326], atol=1e-9)
    npt.assert_allclose(frame['alpha'] + frame['level'], 1.0)


def test_table4():
    frame = tables.table4()
    assert list(frame.columns) == ['row', 'fp', 'n', 'parameterization', 'published_n', 'note']
    assert len(frame) == 18
    interval = frame[frame['row'] == 'interval_estimate']
    assert list(interval['n']) == [93, 93, 93, 93, 82, 76]
    printed = frame[frame['parameterization'].str.startswith('printed')]
    assert list(printed['n']) == [14, 26, 39, 66, 137, 498]
    assert list(printed['n']) == list(printed['published_n'])
    canonical = frame[frame['parameterization'].str.startswith('canonical')]
    assert list(canonical['n']) == [8, 14, 21, 36, 74, 265]
    assert (canonical['note'] != '').all()
    assert interval['published_n'].isna().all()


def test_table4_unbounded_rate():
    frame = tables.table4(rates=[0.7, 0.9])
    hypothesis = frame[frame['row'] == 'hypothesis_test']
    assert list(hypothesis['n']) == [66, 'unbounded', 36, 'unbounded']


def test_table5():
    frame = tables.table5()
    assert list(frame['power']) == [0.7, 0.75, 0.8, 0.85, 0.9, 0.95]
    assert list(frame['n']) == [13, 17, 21, 27, 36, 50]
    assert (frame['achieved_power'] >= frame['power'] - 1e-6).all()
    row = frame[frame['power'] == 0.9].iloc[0]
    assert row['n'] == 36


def test_table6():
    frame = tables.table6()
    assert list(frame['w']) == [0.1, 0.15, 0.2]
    assert list(frame['n']) == [76, 41, 27]
    assert list(frame['published_n']) == [76, 41, 28]
    assert list(frame['note']) == ['', '', 'paper prints 28']


def test_figure1_curve():
    frame = tables.figure1_curve(
        RiskClass.from_name('medium'), confidence_spec(0.80), 0.1, 0.1, tables.parse_grid('0.8:0.9:0.05')
    )
    assert list(frame.columns) == ['fp', 'interval_n', 'hypothesis_n']
    assert list(frame['hypothesis_n']) == [265, 'unbounded', 'unbounded']


def test_figure2_curve():
    frame = tables.figure2_curve(13, 50, 0.7, RiskClass.from_name('medium'), confidence_spec(0.80))
    assert list(frame.columns) == ['n', 'power']
    assert list(frame['n']) == list(range(13, 51))
    npt.assert_allclose(frame.loc[frame['n'] == 21, 'power'], 0.80, atol=0.01)
    npt.assert_allclose(frame.loc[frame['n'] == 36, 'power'], 0.90, atol=0.01)


def test_figure3_curve():
    frame = tables.figure3_curve(tables.linear_grid(0.1, 0.2, 0.05), 0.8, confidence_spec(0.80))
    assert list(frame['n']) == [76, 41, 27]
    frame = tables.figure3_curve([0.1, 0.2], None, confidence_spec(0.80))
    assert list(frame['n']) == [93, 30]
