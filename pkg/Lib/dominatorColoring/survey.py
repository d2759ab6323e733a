# coding: utf-8

import concurrent.futures
import itertools

from dominatorColoring.errors import DominatorColoringError, EnumerationLimitError, SearchLimitError
from dominatorColoring.exactOracle import oracleChromatic
from dominatorColoring.mdcAlgorithm import CHAIN_LOOKAHEAD, runMDC
from dominatorColoring.pathModel import BACKWARD, FORWARD, OrientedPath

"""
    Survey of all orientations of P_n: the smallest dominator chromatic number over
    every orientation, compared with its closed form
            n = 4k      k + 2
            n = 4k + 1  k + 2
            n = 4k + 2  k + 3
            n = 4k + 3  k + 3
    for k >= 1, except n = 6 where the value is 3.
"""

FAST = "fast"
ORACLE = "oracle"
METHODS = (FAST, ORACLE)

ENUMERATION_LIMIT = 26
ORACLE_SURVEY_LIMIT = 12

# below the closed form, found by exhausting every orientation with the oracle
SMALL_VALUES = {1: 1, 2: 2, 3: 2}


def closedFormChromaticNumber(n):
    if not isinstance(n, int) or n < 4:
        raise DominatorColoringError("the closed form starts at n = 4", n)
    if n == 6:
        return 3
    k, r = divmod(n, 4)
    if r in (0, 1):
        return k + 2
    return k + 3


def referenceValue(n):
    if n in SMALL_VALUES:
        return SMALL_VALUES[n]
    return closedFormChromaticNumber(n)


def _checkEnumeration(n, limit):
    if not isinstance(n, int) or n < 1:
        raise DominatorColoringError("an oriented path needs at least one vertex", n)
    if limit is not None and n > limit:
        raise EnumerationLimitError(f"enumerating 2^{n - 1} orientations is above the limit of n = {limit}", n)


def enumerateOrientations(n, limit=ENUMERATION_LIMIT):
    """ Yield all 2^(n-1) orientations of P_n, lexicographic in the flags with F before B.
        limit: refuse n above it, None to lift the guard.
    """
    _checkEnumeration(n, limit)
    for flags in itertools.product((FORWARD, BACKWARD), repeat=n - 1):
        yield OrientedPath(n, "".join(flags))


class SurveyResult(object):

    def __init__(self, n, minColors, witness, method):
        self.n = n
        self.minColors = minColors
        self.witness = witness
        self.method = method
        self.formulaValue = closedFormChromaticNumber(n) if n >= 4 else None

    @property
    def agrees(self):
        return self.minColors == referenceValue(self.n)

    def asDict(self):
        return dict(
            n=self.n,
            min_colors=self.minColors,
            witness=str(self.witness),
            formula_value=self.formulaValue,
            agrees=self.agrees,
            method=self.method,
        )

    def reportLine(self):
        formula = "-" if self.formulaValue is None else str(self.formulaValue)
        agrees = "yes" if self.agrees else "NO"
        return f"n={self.n}\tmin={self.minColors}\tformula={formula}\tagrees={agrees}\twitness={self.witness}\tmethod={self.method}"

    def __repr__(self):
        return f"<SurveyResult n={self.n} min={self.minColors} witness={self.witness} agrees={self.agrees}>"


def countColors(path, method=FAST, oracleLimit=ORACLE_SURVEY_LIMIT, lookahead=CHAIN_LOOKAHEAD):
    if method == FAST:
        return runMDC(path, lookahead=lookahead).numColors
    if method == ORACLE:
        return oracleChromatic(path, maxN=oracleLimit)
    raise DominatorColoringError(f"method is one of {', '.join(METHODS)}", method)


def _surveyChunk(job):
    # worker: smallest count among the orientations starting with prefix, first one wins ties
    n, prefix, method, oracleLimit, lookahead = job
    best = None
    for tail in itertools.product((FORWARD, BACKWARD), repeat=n - 1 - len(prefix)):
        path = OrientedPath(n, prefix + "".join(tail))
        count = countColors(path, method, oracleLimit, lookahead)
        if best is None or count < best[0]:
            best = (count, path)
    return best


def _prefixes(n, workers):
    # enough prefixes to keep every worker busy, in lexicographic order
    length = 0
    while 2 ** length < 4 * workers and length < n - 1:
        length += 1
    return ["".join(flags) for flags in itertools.product((FORWARD, BACKWARD), repeat=length)]


def minOverOrientations(n, method=FAST, workers=1, oracleLimit=ORACLE_SURVEY_LIMIT, enumerationLimit=ENUMERATION_LIMIT, lookahead=CHAIN_LOOKAHEAD, logger=None):
    """ Smallest color count over every orientation of P_n, with the first orientation that reaches it.
        workers > 1 splits the orientations by flag prefix over a process pool,
        the result does not depend on the number of workers.
    """
    _checkEnumeration(n, enumerationLimit)
    if method not in METHODS:
        raise DominatorColoringError(f"method is one of {', '.join(METHODS)}", method)
    if method == ORACLE and n > oracleLimit:
        raise SearchLimitError(f"the oracle survey is limited to n = {oracleLimit}", n)
    if workers is None or workers < 1:
        workers = 1
    jobs = [(n, prefix, method, oracleLimit, lookahead) for prefix in _prefixes(n, workers)]
    if workers == 1:
        chunks = map(_surveyChunk, jobs)
        best = _reduceChunks(chunks)
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            # map keeps the chunk order
            best = _reduceChunks(executor.map(_surveyChunk, jobs))
    minColors, witness = best
    result = SurveyResult(n, minColors, witness, method)
    if logger is not None:
        logger.infoItem(result.reportLine())
    return result


def _reduceChunks(chunks):
    best = None
    for chunk in chunks:
        if best is None or chunk[0] < best[0]:
            best = chunk
    return best


def surveyRange(nLo, nHi, method=FAST, workers=1, oracleLimit=ORACLE_SURVEY_LIMIT, enumerationLimit=ENUMERATION_LIMIT, lookahead=CHAIN_LOOKAHEAD, logger=None):
    """ minOverOrientations for every n from nLo to nHi. Below 4 the results compare with SMALL_VALUES. """
    if not 1 <= nLo <= nHi:
        raise DominatorColoringError("the survey range needs 1 <= from <= to", (nLo, nHi))
    if logger is not None:
        logger.info(f"## survey n={nLo}..{nHi}, method {method}, {workers} worker(s)")
    results = []
    for n in range(nLo, nHi + 1):
        childLogger = None
        if logger is not None:
            childLogger = logger.child(f"n={n}, {2 ** (n - 1)} orientations")
        results.append(minOverOrientations(n, method=method, workers=workers, oracleLimit=oracleLimit, enumerationLimit=enumerationLimit, lookahead=lookahead, logger=childLogger))
    return results


def verifyClosedForm(nLo, nHi, method=FAST, workers=1, oracleLimit=ORACLE_SURVEY_LIMIT, enumerationLimit=ENUMERATION_LIMIT, lookahead=CHAIN_LOOKAHEAD, logger=None):
    """ Survey every n from nLo to nHi and compare with the closed form. """
    if not 4 <= nLo <= nHi:
        raise DominatorColoringError("the closed form is checked for 4 <= nLo <= nHi", (nLo, nHi))
    return surveyRange(nLo, nHi, method=method, workers=workers, oracleLimit=oracleLimit, enumerationLimit=enumerationLimit, lookahead=lookahead, logger=logger)


def surveyPassed(results):
    return all(result.agrees for result in results)
