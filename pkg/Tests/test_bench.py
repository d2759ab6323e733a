import io
import math

import pytest

from dominatorColoring.bench import ScalingReport, fitLogLog, measureRuntime
from dominatorColoring.errors import DominatorColoringError
from dominatorColoring.logger import Logger


def test_fit_exact_power_law():
    slope, rSquared = fitLogLog([1, 10, 100, 1000], [3, 30, 300, 3000])
    assert slope == pytest.approx(1.0)
    assert rSquared == pytest.approx(1.0)
    slope, rSquared = fitLogLog([2, 4, 8], [4, 16, 64])
    assert slope == pytest.approx(2.0)


def test_fit_needs_two_points():
    slope, rSquared = fitLogLog([10], [5])
    assert math.isnan(slope)
    assert math.isnan(rSquared)


def test_report_sorts_samples():
    report = ScalingReport([(400, 0.004, 2400), (100, 0.001, 600), (200, 0.002, 1200)])
    assert [n for n, seconds, steps in report.samples] == [100, 200, 400]
    assert report.stepsPerVertex == pytest.approx(6.0)
    assert report.stepsSlope == pytest.approx(1.0)
    assert len(list(report.rows())) == 3
    assert set(report.asDict()) == {"samples", "loglog_slope", "r_squared", "steps_slope", "steps_r_squared", "steps_per_vertex"}


@pytest.mark.parametrize("sizes, repetitions", [
    ([], 3),
    ([1, 100], 3),
    ([100], 2),
])
def test_preconditions(sizes, repetitions):
    with pytest.raises(DominatorColoringError):
        measureRuntime(sizes, repetitions=repetitions)


def test_small_scaling_run():
    report = measureRuntime([1000, 2000, 4000, 8000], repetitions=3, seed=5)
    assert [n for n, seconds, steps in report.samples] == [1000, 2000, 4000, 8000]
    assert all(seconds > 0 for n, seconds, steps in report.samples)
    assert 0.95 <= report.stepsSlope <= 1.05
    assert report.stepsPerVertex <= 20


def test_steps_do_not_depend_on_timing():
    first = measureRuntime([500, 1500], repetitions=3, seed=9)
    second = measureRuntime([500, 1500], repetitions=3, seed=9)
    assert [steps for n, seconds, steps in first.samples] == [steps for n, seconds, steps in second.samples]


def test_logging():
    stream = io.StringIO()
    measureRuntime([100, 200], repetitions=3, logger=Logger(stream=stream))
    text = stream.getvalue()
    assert "## bench 2 sizes" in text
    assert "n=100" in text
    assert "steps slope" in text


@pytest.mark.slow
def test_linear_scaling():
    report = measureRuntime([10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6], repetitions=3, seed=0)
    assert 0.95 <= report.stepsSlope <= 1.05
    assert 0.8 <= report.loglogSlope <= 1.2
    assert report.stepsPerVertex <= 20
