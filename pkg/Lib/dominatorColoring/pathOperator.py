# coding: utf-8

import functools

from dominatorColoring.documents import ColoringDocument
from dominatorColoring.dotExport import exportDot
from dominatorColoring.errors import DominatorColoringError
from dominatorColoring.exactOracle import DEFAULT_MAX_N, oracleMinColoring
from dominatorColoring.logger import Logger
from dominatorColoring.mdcAlgorithm import (
    CHAIN_LOOKAHEAD,
    LOOKAHEADS,
    StepCounter,
    chainDecomposition,
    forcedSingletons,
    predictedColorCount,
    runMDC,
)
from dominatorColoring.pathModel import OrientedPath, degreeProfile, parseOrientation, reverse
from dominatorColoring.validator import asColoring, validate

_memoizeCache = dict()
_memoizeStats = dict()


def immutify(obj):
    # make an immutable version of this object.
    # assert immutify(10) == (10,)
    # assert immutify([1, 0, 1]) == (1, 0, 1)
    # assert immutify(dict(lookahead="chain", sizes=[4, 8])) == ('lookahead', ('chain',), 'sizes', (4, 8))
    hashValues = []
    if isinstance(obj, dict):
        for key, value in sorted(obj.items()):
            hashValues.extend([key, immutify(value)])
    elif isinstance(obj, (list, tuple)):
        for value in obj:
            hashValues.extend(immutify(value))
    else:
        hashValues.append(obj)
    return tuple(hashValues)


def memoize(function):
    @functools.wraps(function)
    def wrapper(self, *args, **kwargs):
        immutableargs = immutify(args)
        immutablekwargs = immutify(kwargs)
        key = (function.__name__, self, immutableargs, immutablekwargs)
        if key in _memoizeCache:
            # the operator is part of the key, keeping stats keeps it alive until changed()
            _memoizeStats[key] += 1
            return _memoizeCache[key]
        result = function(self, *args, **kwargs)
        _memoizeCache[key] = result
        _memoizeStats[key] = 1
        return result
    return wrapper


def inspectMemoizeCache():
    """ Returns (entries per operator method, hits per cache key), both as sorted lists. """
    objects = {}
    frequency = []
    for key in _memoizeCache.keys():
        functionName = f"{id(key[1]):X} {key[0]}"
        objects[functionName] = objects.get(functionName, 0) + 1
    for key, called in _memoizeStats.items():
        frequency.append((f"{id(key[1]):X} {key[0]}", called))
    frequency.sort()
    return sorted(objects.items()), frequency


class PathOperator(object):
    """ One oriented path and everything that can be asked about it.

        pathOrText: an OrientedPath or an orientation string
        lookahead: 2-chain test used by runMDC, "chain" or "degree"
        oracleLimit: largest n the exact search accepts
        debug: log every operation
        logPath: optional file for the log

        Memoized results are kept in a module level cache keyed on the operator,
        so an operator stays alive until changed() is called on it.
    """

    def __init__(self, pathOrText="", lookahead=CHAIN_LOOKAHEAD, oracleLimit=DEFAULT_MAX_N, debug=False, logPath=None):
        if lookahead not in LOOKAHEADS:
            raise DominatorColoringError(f"lookahead is one of {', '.join(LOOKAHEADS)}", lookahead)
        self.lookahead = lookahead
        self.oracleLimit = oracleLimit
        self.debug = debug
        self.logPath = logPath
        self.logger = None
        self.path = self._asPath(pathOrText)
        self.steps = None
        if self.debug:
            self.logger = Logger(path=logPath)
            self.logger.time()
            self.logger.info(f"## {self.path.arcs or '(single vertex)'}")
            self.logger.infoPath(self.path)
            self.logger.info(f"\tlookahead: {self.lookahead}")
            self.logger.info(f"\toracle limit: {self.oracleLimit}")

    def _asPath(self, pathOrText):
        if isinstance(pathOrText, OrientedPath):
            return pathOrText
        if isinstance(pathOrText, str):
            return parseOrientation(pathOrText)
        raise DominatorColoringError("expected an OrientedPath or an orientation string", pathOrText)

    def __repr__(self):
        return f"<{self.__class__.__name__} {self.path.arcs or '-'} n={self.path.n} lookahead={self.lookahead}>"

    # caching
    def changed(self):
        # clears everything cached for this operator
        for key in list(_memoizeCache.keys()):
            if key[1] == self:
                del _memoizeCache[key]
                if key in _memoizeStats:
                    del _memoizeStats[key]

    def setOrientation(self, pathOrText):
        self.path = self._asPath(pathOrText)
        self.steps = None
        self.changed()
        if self.debug:
            self.logger.info(f"## orientation changed to {self.path.arcs or '(single vertex)'}")

    def setLookahead(self, lookahead):
        if lookahead not in LOOKAHEADS:
            raise DominatorColoringError(f"lookahead is one of {', '.join(LOOKAHEADS)}", lookahead)
        self.lookahead = lookahead
        self.changed()

    # structure
    def degreeProfile(self):
        return degreeProfile(self.path)

    def forcedSingletons(self):
        return forcedSingletons(self.path)

    def chainDecomposition(self):
        return chainDecomposition(self.path)

    def predictedColorCount(self):
        return predictedColorCount(self.path)

    def reversed(self):
        return self.__class__(reverse(self.path), lookahead=self.lookahead, oracleLimit=self.oracleLimit, debug=self.debug, logPath=self.logPath)

    # coloring
    @memoize
    def color(self):
        counter = StepCounter()
        coloring = runMDC(self.path, lookahead=self.lookahead, counter=counter)
        self.steps = counter.steps
        if self.debug:
            self.logger.info("## color")
            self.logger.infoItem(f"{coloring.numColors} colors in {counter.steps} steps")
            self.logger.detailItem(f"assignment {list(coloring.assignment)}")
        return coloring

    def validate(self, assignment=None):
        """ Validate assignment, or the coloring from color() when no assignment is given. """
        coloring = self.color() if assignment is None else asColoring(assignment)
        report = validate(self.path, coloring)
        if self.debug:
            self.logger.info("## validate")
            self.logger.infoItem(f"proper: {report.proper}, dominator: {report.dominator}")
            for edge in report.propernessViolations:
                self.logger.detailItem(f"edge {edge} joins two vertices of color {coloring.colorOf(edge)}")
            for v in report.dominationViolations:
                self.logger.detailItem(f"v{v} dominates no class")
        return report

    @memoize
    def oracle(self, pruneDomination=True):
        result = oracleMinColoring(self.path, maxN=self.oracleLimit, pruneDomination=pruneDomination)
        if self.debug:
            self.logger.info("## oracle")
            self.logger.infoItem(f"minimum {result.minColors}, {result.explored} nodes explored")
        return result

    def agreesWithOracle(self):
        return self.color().numColors == self.oracle().minColors

    # output
    def document(self):
        return ColoringDocument(self.path, self.color())

    def exportDot(self, colored=True, name="orientedPath"):
        coloring = self.color() if colored else None
        return exportDot(self.path, coloring=coloring, name=name)
