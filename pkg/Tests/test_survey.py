import collections
import io

import pytest

from dominatorColoring.errors import DominatorColoringError, EnumerationLimitError, SearchLimitError
from dominatorColoring.logger import Logger
from dominatorColoring.mdcAlgorithm import runMDC
from dominatorColoring.pathModel import degreeProfile, optimalOrientation, reverse
from dominatorColoring.survey import (
    ORACLE,
    SurveyResult,
    closedFormChromaticNumber,
    countColors,
    enumerateOrientations,
    minOverOrientations,
    referenceValue,
    surveyPassed,
    surveyRange,
    verifyClosedForm,
)


@pytest.mark.parametrize("n, expected", [
    (4, 3), (5, 3), (6, 3), (7, 4), (8, 4), (9, 4), (10, 5), (11, 5), (12, 5), (13, 5), (14, 6), (20, 7),
])
def test_closed_form(n, expected):
    assert closedFormChromaticNumber(n) == expected


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_closed_form_starts_at_four(n):
    with pytest.raises(DominatorColoringError):
        closedFormChromaticNumber(n)


def test_reference_values_below_four():
    assert [referenceValue(n) for n in (1, 2, 3, 4)] == [1, 2, 2, 3]


def test_enumeration_order():
    assert [str(path) for path in enumerateOrientations(3)] == ["FF", "FB", "BF", "BB"]
    assert [path.n for path in enumerateOrientations(1)] == [1]
    assert sum(1 for path in enumerateOrientations(6)) == 32


def test_enumeration_guard():
    with pytest.raises(EnumerationLimitError):
        next(enumerateOrientations(27))
    assert next(enumerateOrientations(27, limit=None)).arcs == "F" * 26


def test_six_vertex_exception():
    result = minOverOrientations(6)
    assert result.minColors == 3
    assert result.formulaValue == 3
    assert result.agrees
    assert str(result.witness) == "FBFBF"
    assert degreeProfile(result.witness).outDegrees == (1, 0, 2, 0, 2, 0)
    assert runMDC(result.witness).numColors == 3


def test_small_survey_with_oracle():
    result = minOverOrientations(3, method=ORACLE)
    assert result.minColors == 2
    assert result.formulaValue is None
    assert result.agrees
    assert str(result.witness) == "FB"


def test_twelve_vertices():
    assert minOverOrientations(12).minColors == 5


def test_oracle_survey_guard():
    with pytest.raises(SearchLimitError):
        minOverOrientations(13, method=ORACLE)


def test_unknown_method():
    with pytest.raises(DominatorColoringError):
        minOverOrientations(4, method="guess")


def test_workers_do_not_change_the_result():
    single = minOverOrientations(11, workers=1)
    pooled = minOverOrientations(11, workers=3)
    assert (pooled.minColors, pooled.witness) == (single.minColors, single.witness)


def test_result_report():
    result = SurveyResult(8, 4, optimalOrientation(8), "fast")
    assert result.asDict() == dict(n=8, min_colors=4, witness="FBFBFBF", formula_value=4, agrees=True, method="fast")
    assert "agrees=yes" in result.reportLine()
    assert not SurveyResult(8, 5, optimalOrientation(8), "fast").agrees


def test_verify_closed_form_fast():
    results = verifyClosedForm(4, 14)
    assert [result.n for result in results] == list(range(4, 15))
    assert surveyPassed(results)


def test_verify_closed_form_range_check():
    with pytest.raises(DominatorColoringError):
        verifyClosedForm(3, 5)
    with pytest.raises(DominatorColoringError):
        verifyClosedForm(8, 6)


def test_survey_range_below_four():
    assert surveyPassed(surveyRange(1, 5))


def test_optimal_orientation_reaches_the_minimum():
    for n in range(1, 15):
        assert runMDC(optimalOrientation(n)).numColors == minOverOrientations(n).minColors, n


def test_reversal_keeps_the_minimum():
    counts = collections.Counter()
    reversedCounts = collections.Counter()
    changed = 0
    for path in enumerateOrientations(9):
        count = countColors(path)
        reversedCount = countColors(reverse(path))
        counts[count] += 1
        reversedCounts[reversedCount] += 1
        if count != reversedCount:
            changed += 1
    # single orientations may differ from their reversal, the distribution does not
    assert changed == 12
    assert counts == reversedCounts
    assert min(counts) == min(reversedCounts) == closedFormChromaticNumber(9)
    assert sum(counts.values()) == 2 ** 8


@pytest.mark.slow
def test_verify_closed_form_oracle():
    assert surveyPassed(verifyClosedForm(4, 12, method=ORACLE))


@pytest.mark.slow
def test_verify_closed_form_up_to_twenty():
    assert surveyPassed(verifyClosedForm(15, 20, workers=4))


@pytest.mark.slow
def test_optimal_orientation_up_to_twenty():
    for n in range(15, 21):
        assert runMDC(optimalOrientation(n)).numColors == closedFormChromaticNumber(n), n
    for n in range(1, 13):
        assert minOverOrientations(n, method=ORACLE).minColors == runMDC(optimalOrientation(n)).numColors, n


def test_survey_logs_each_size(tmp_path):
    logPath = tmp_path / "survey_log.txt"
    stream = io.StringIO()
    surveyRange(4, 5, logger=Logger(path=str(logPath), stream=stream))
    lines = logPath.read_text().splitlines()
    assert lines[0] == "## survey n=4..5, method fast, 1 worker(s)"
    assert lines[1] == "| n=4, 8 orientations"
    assert lines[2].startswith("| \t- n=4\tmin=3\tformula=3\tagrees=yes")
    assert lines[3] == "| n=5, 16 orientations"
    assert stream.getvalue().splitlines() == lines
