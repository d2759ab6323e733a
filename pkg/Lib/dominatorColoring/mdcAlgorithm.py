# coding: utf-8

import collections

from dominatorColoring.errors import ColorIdError, DominatorColoringError
from dominatorColoring.pathModel import BACKWARD, FORWARD, degreeProfile

"""
    Minimum dominator coloring of an oriented path in one left-to-right pass.

    Every vertex falls in exactly one of these groups:
        sources         in-degree 0, all share color 0 (C0)
        forced          some in-neighbour has out-degree 1, that in-neighbour can only
                        dominate the class {v}, so v gets a color of its own
        free            everything else: all in-neighbours are internal sources (out-degree 2)

    Free vertices linked through internal sources form 2-chains. Inside a chain the pass
    alternates between the shared color C* and a fresh unique color, driven by the flags
        alpha   0: the next free vertex may take C*, 1: it must take a new color
        beta    0: C* does not exist yet, 1: it does

    A chain of exactly two free vertices is cheapest as a class of its own, {x1, x2} is
    precisely the out-neighbourhood of the source between them. How that case is detected
    depends on the lookahead:
        "chain"     structural test, the two free vertices get a fresh pair color.
        "degree"    d+(v_i+1) = 2 != d+(v_i+3) or n = 6, and the pair shares C*.
                    Kept for comparison: it miscounts BFBFBB and gives an invalid coloring
                    for BFFBFBF.
"""

SOURCE_COLOR = 0

CHAIN_LOOKAHEAD = "chain"
DEGREE_LOOKAHEAD = "degree"
LOOKAHEADS = (CHAIN_LOOKAHEAD, DEGREE_LOOKAHEAD)


class Coloring(collections.namedtuple("Coloring", ["assignment", "numColors", "starColor"])):
    """ A color id per vertex, vertex 1 first.
        numColors is derived from the assignment. starColor records C* when it was minted.
    """
    __slots__ = ()

    def __new__(cls, assignment, starColor=None):
        assignment = tuple(assignment)
        for colorId in assignment:
            if not isinstance(colorId, int) or isinstance(colorId, bool) or colorId < 0:
                raise ColorIdError("color ids are non-negative integers", colorId)
        if starColor is not None and starColor not in assignment:
            raise ColorIdError("the star color is not used by the assignment", starColor)
        return super().__new__(cls, assignment, len(set(assignment)), starColor)

    def __getnewargs__(self):
        return (self.assignment, self.starColor)

    @property
    def n(self):
        return len(self.assignment)

    @property
    def classes(self):
        # color id -> sorted tuple of 1-based vertex ids, in color id order
        classes = {}
        for v, colorId in enumerate(self.assignment, start=1):
            classes.setdefault(colorId, []).append(v)
        return collections.OrderedDict((colorId, tuple(classes[colorId])) for colorId in sorted(classes))

    def colorOf(self, v):
        return self.assignment[v - 1]

    def isDense(self):
        return set(self.assignment) == set(range(self.numColors))

    def singletonized(self):
        # every vertex in a class of its own, ids in vertex order
        return Coloring(range(self.n))


class StepCounter(object):
    """ Counts the primitive checks made by runMDC, one tick per vertex visit and one per degree lookup. """

    def __init__(self):
        self.steps = 0

    def tick(self, count=1):
        self.steps += count

    def reset(self):
        self.steps = 0


class AlgorithmState(object):

    def __init__(self):
        self.alpha = 0
        self.beta = 0
        self.paletteSize = 1    # C0 is in the palette from the start
        self.starColor = None
        self.pairColor = None   # pair color waiting for the second free vertex of its chain

    def newColor(self):
        colorId = self.paletteSize
        self.paletteSize += 1
        return colorId

    def __repr__(self):
        return f"<AlgorithmState alpha={self.alpha} beta={self.beta} palette={self.paletteSize}>"


def safeOutDegree(profile, i):
    # positions off the path count as out-degree 0
    if 1 <= i <= profile.n:
        return profile.outDegrees[i - 1]
    return 0


def _hasUnitInNeighbor(path, profile, i, counter):
    # is v_i the only out-neighbour of one of its in-neighbours
    counter.tick()
    if i > 1 and path.arcs[i - 2] == FORWARD and profile.outDegrees[i - 2] == 1:
        return True
    if i < path.n and path.arcs[i - 1] == BACKWARD and profile.outDegrees[i] == 1:
        return True
    return False


def _isFree(path, profile, i, counter):
    if not 1 <= i <= path.n:
        return False
    counter.tick()
    if profile.inDegrees[i - 1] == 0:
        return False
    return not _hasUnitInNeighbor(path, profile, i, counter)


def _linksForward(path, profile, i, counter):
    # free v_i and free v_i+2 share the internal source v_i+1
    counter.tick()
    return safeOutDegree(profile, i + 1) == 2 and _isFree(path, profile, i + 2, counter)


def _linksBackward(path, profile, i, counter):
    counter.tick()
    return safeOutDegree(profile, i - 1) == 2 and _isFree(path, profile, i - 2, counter)


def _startsPairChain(path, profile, i, counter):
    # v_i opens a 2-chain holding exactly two free vertices, v_i and v_i+2
    if _linksBackward(path, profile, i, counter):
        return False
    if not _linksForward(path, profile, i, counter):
        return False
    return not _linksForward(path, profile, i + 2, counter)


def _degreeRuleKeepsStar(path, profile, i, counter):
    counter.tick(2)
    if safeOutDegree(profile, i + 1) == 2 and safeOutDegree(profile, i + 3) != 2:
        return True
    return path.n == 6


def runMDC(path, lookahead=CHAIN_LOOKAHEAD, counter=None):
    """ Color the oriented path with the minimum number of colors such that the coloring is
        proper and every vertex of positive out-degree dominates a color class.

        lookahead: "chain" (exact) or "degree" (out-degree only 2-chain test, see module notes)
        counter: optional StepCounter, receives the number of primitive steps taken

        Returns a Coloring with dense color ids, color 0 on exactly the sources.
    """
    if lookahead not in LOOKAHEADS:
        raise DominatorColoringError(f"lookahead is one of {', '.join(LOOKAHEADS)}", lookahead)
    if counter is None:
        counter = StepCounter()
    profile = degreeProfile(path)
    state = AlgorithmState()
    assignment = []
    for i in range(1, path.n + 1):
        counter.tick()
        if profile.inDegrees[i - 1] == 0:
            colorId = SOURCE_COLOR
        elif _hasUnitInNeighbor(path, profile, i, counter):
            # end of a 2-chain
            colorId = state.newColor()
            state.alpha = 0
        elif state.pairColor is not None:
            colorId = state.pairColor
            state.pairColor = None
            state.alpha = 0
        elif state.alpha == 0:
            if lookahead == CHAIN_LOOKAHEAD and _startsPairChain(path, profile, i, counter):
                colorId = state.pairColor = state.newColor()
            elif state.beta == 0:
                colorId = state.starColor = state.newColor()
                if lookahead == DEGREE_LOOKAHEAD and _degreeRuleKeepsStar(path, profile, i, counter):
                    # a 2-chain of length 3 or P6
                    state.alpha = 0
                else:
                    state.alpha = 1
                state.beta = 1
            else:
                colorId = state.starColor
                state.alpha = 1
        else:
            colorId = state.newColor()
            state.alpha = 0
        assignment.append(colorId)
    return Coloring(assignment, starColor=state.starColor)


def sourceVertices(path):
    profile = degreeProfile(path)
    return [v for v in range(1, path.n + 1) if profile.inDegree(v) == 0]


def forcedSingletons(path):
    """ Vertices with an in-neighbour of out-degree 1. Every dominator coloring colors them uniquely. """
    profile = degreeProfile(path)
    counter = StepCounter()
    forced = []
    for v in range(1, path.n + 1):
        if profile.inDegree(v) and _hasUnitInNeighbor(path, profile, v, counter):
            forced.append(v)
    return forced


def chainDecomposition(path):
    """ Split the free vertices into maximal 2-chains.
        Returns a list of tuples of 1-based vertex ids, consecutive entries two apart.
    """
    profile = degreeProfile(path)
    counter = StepCounter()
    chains = []
    for v in range(1, path.n + 1):
        if not _isFree(path, profile, v, counter):
            continue
        if chains and _linksBackward(path, profile, v, counter):
            chains[-1].append(v)
        else:
            chains.append([v])
    return [tuple(chain) for chain in chains]


def predictedColorCount(path):
    """ Minimum number of colors read off the chain structure:
        C0, one color per forced singleton, one pair color per chain of two,
        m // 2 unique colors for any other chain of m free vertices, plus C* if such a chain exists.
    """
    count = 1 + len(forcedSingletons(path))
    needsStar = False
    for chain in chainDecomposition(path):
        if len(chain) == 2:
            count += 1
        else:
            count += len(chain) // 2
            needsStar = True
    if needsStar:
        count += 1
    return count
