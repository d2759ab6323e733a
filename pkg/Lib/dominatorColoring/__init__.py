# coding: utf-8

from dominatorColoring.errors import (
    ColorIdError,
    ColoringSizeError,
    DominatorColoringError,
    EnumerationLimitError,
    OrientationParseError,
    PathSizeError,
    SearchLimitError,
    VertexRangeError,
)
from dominatorColoring.pathModel import (
    BACKWARD,
    FORWARD,
    DegreeProfile,
    OrientedPath,
    degreeProfile,
    formatOrientation,
    optimalOrientation,
    parseOrientation,
    randomOrientation,
    reverse,
)
from dominatorColoring.mdcAlgorithm import (
    CHAIN_LOOKAHEAD,
    DEGREE_LOOKAHEAD,
    LOOKAHEADS,
    AlgorithmState,
    Coloring,
    StepCounter,
    chainDecomposition,
    forcedSingletons,
    predictedColorCount,
    runMDC,
    safeOutDegree,
)
from dominatorColoring.validator import ValidationReport, dominatedClasses, isProper, validate
from dominatorColoring.exactOracle import OracleResult, oracleChromatic, oracleMinColoring, restrictedGrowthStrings
from dominatorColoring.survey import (
    SurveyResult,
    closedFormChromaticNumber,
    enumerateOrientations,
    minOverOrientations,
    referenceValue,
    verifyClosedForm,
)
from dominatorColoring.bench import ScalingReport, measureRuntime
from dominatorColoring.documents import ColoringDocument
from dominatorColoring.dotExport import exportDot
from dominatorColoring.pathOperator import PathOperator

try:
    from ._version import version as __version__
except ImportError:
    __version__ = "0.0.0+unknown"
