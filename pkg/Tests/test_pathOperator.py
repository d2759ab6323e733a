import gc
import json
import weakref

import pytest
from hypothesis import given

from dominatorColoring.documents import ColoringDocument
from dominatorColoring.dotExport import DOT_PALETTE, exportDot, paletteColor
from dominatorColoring.errors import ColoringSizeError, DominatorColoringError
from dominatorColoring.mdcAlgorithm import Coloring, runMDC
from dominatorColoring.pathModel import parseOrientation
from dominatorColoring.pathOperator import PathOperator, immutify, inspectMemoizeCache

from strategies import orientations


# operator

def test_operator_from_text_and_path():
    assert PathOperator("BFBF").path == parseOrientation("BFBF")
    assert PathOperator(parseOrientation("FB")).path.n == 3


def test_operator_rejects_bad_input():
    with pytest.raises(DominatorColoringError):
        PathOperator(42)
    with pytest.raises(DominatorColoringError):
        PathOperator("FB", lookahead="peek")


def test_operator_color_and_oracle():
    operator = PathOperator("BFBF")
    assert operator.color().numColors == 3
    assert operator.steps > 0
    assert operator.oracle().minColors == 3
    assert operator.agreesWithOracle()
    assert operator.validate().valid
    assert not operator.validate([1, 0, 1, 0, 1]).valid
    assert operator.predictedColorCount() == 3
    assert operator.chainDecomposition() == [(1, 3, 5)]
    assert operator.forcedSingletons() == []
    assert operator.degreeProfile().outDegrees == (0, 2, 0, 2, 0)


def test_operator_reversed():
    operator = PathOperator("FFB", lookahead="degree")
    flipped = operator.reversed()
    assert str(flipped.path) == "BBF"
    assert flipped.lookahead == "degree"


def test_oracle_limit_is_forwarded():
    with pytest.raises(DominatorColoringError):
        PathOperator("FFFFF", oracleLimit=4).oracle()


# caching

def test_immutify():
    assert immutify(10) == (10,)
    assert immutify([1, 0, 1]) == (1, 0, 1)
    assert immutify(dict(lookahead="chain", sizes=[4, 8])) == ("lookahead", ("chain",), "sizes", (4, 8))


def test_color_is_memoized():
    operator = PathOperator("BFBFBB")
    first = operator.color()
    assert operator.color() is first
    items, frequency = inspectMemoizeCache()
    name = f"{id(operator):X} color"
    assert (name, 1) in items
    assert (name, 2) in frequency
    operator.changed()
    items, frequency = inspectMemoizeCache()
    assert name not in dict(items)


def test_cache_keeps_the_operator_until_changed():
    operator = PathOperator("BFFB")
    operator.color()
    reference = weakref.ref(operator)
    del operator
    gc.collect()
    assert reference() is not None
    reference().changed()
    gc.collect()
    assert reference() is None


def test_changing_the_orientation_clears_the_cache():
    operator = PathOperator("BFBF")
    assert operator.color().numColors == 3
    operator.setOrientation("FFFF")
    assert operator.color().numColors == 5
    operator.setLookahead("degree")
    assert operator.color().numColors == 5
    operator.changed()


def test_debug_log(tmp_path, capsys):
    logPath = tmp_path / "operator_log.txt"
    operator = PathOperator("BFBF", debug=True, logPath=str(logPath))
    operator.color()
    operator.validate([1, 0, 1, 0, 1])
    operator.changed()
    text = logPath.read_text()
    assert "## BFBF" in text
    assert "\t- 5 vertices\tBFBF" in text
    assert "## color" in text
    assert "3 colors" in text
    # detail lines only go to the file
    assert "- v4 dominates no class" in text
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "## color" in captured.err
    assert "dominates no class" not in captured.err


def test_quiet_operator_has_no_logger():
    assert PathOperator("BFBF").logger is None


# documents

def test_document_fields():
    document = PathOperator("BFBF").document()
    assert document.asDict() == dict(
        n=5,
        orientation="BFBF",
        colors=3,
        assignment=[1, 0, 2, 0, 1],
        classes={"0": [2, 4], "1": [1, 5], "2": [3]},
        star_color=1,
        valid=True,
    )


def test_document_recomputes_valid():
    data = PathOperator("BFBF").document().asDict()
    data["assignment"] = [1, 0, 1, 0, 1]
    data["classes"] = {"0": [2, 4], "1": [1, 3, 5]}
    data["star_color"] = None
    document = ColoringDocument.fromJSON(json.dumps(data))
    assert not document.valid
    assert document.revalidate().dominationViolations == [2, 4]


@pytest.mark.parametrize("text", [
    "[]",
    "not json",
    '{"orientation": "BFBF"}',
    '{"orientation": "BFBF", "assignment": [1, 0, 2, 0, 1], "n": 4}',
    '{"orientation": "BFBF", "assignment": [1, 0, 2, 0, 1], "classes": {"0": [2, 4]}}',
    '{"orientation": "BXBF", "assignment": [1, 0, 2, 0, 1]}',
])
def test_document_rejects_bad_json(text):
    with pytest.raises(DominatorColoringError):
        ColoringDocument.fromJSON(text)


@given(orientations(maxVertices=60))
def test_document_round_trip(path):
    document = ColoringDocument(path, runMDC(path))
    parsed = ColoringDocument.fromJSON(document.toJSON())
    assert parsed.valid == document.valid
    assert parsed.coloring.numColors == document.coloring.numColors
    assert parsed.revalidate().valid == document.valid
    assert parsed.asDict() == document.asDict()


# dot export

def test_dot_of_alternating_path():
    text = PathOperator("BFBF").exportDot()
    assert text.startswith("digraph orientedPath {")
    assert text.count('[label="v') == 5
    assert text.count(" -> ") == 4
    assert "v2 -> v1;" in text
    assert "v4 -> v5;" in text
    fills = {line.split('fillcolor="')[1][:7] for line in text.splitlines() if "fillcolor" in line}
    assert fills == {DOT_PALETTE[0], DOT_PALETTE[1], DOT_PALETTE[2]}


def test_dot_of_single_vertex():
    text = exportDot(parseOrientation(""))
    assert text.count('[label="v') == 1
    assert " -> " not in text
    assert "fillcolor" not in text


def test_dot_is_deterministic():
    assert PathOperator("FBBFBF").exportDot() == PathOperator("FBBFBF").exportDot()


def test_dot_uncolored():
    assert "fillcolor" not in PathOperator("BFBF").exportDot(colored=False)


def test_palette_cycles():
    assert len(DOT_PALETTE) == 12
    assert paletteColor(0) == DOT_PALETTE[0]
    assert paletteColor(13) == DOT_PALETTE[1]


def test_dot_size_check():
    with pytest.raises(ColoringSizeError):
        exportDot(parseOrientation("BFBF"), Coloring([0, 1]))
