# coding: utf-8

from dominatorColoring.errors import DominatorColoringError, SearchLimitError
from dominatorColoring.mdcAlgorithm import Coloring
from dominatorColoring.validator import validate

"""
    Exact minimum dominator coloring by exhaustive search, for small paths only.

    Colorings are enumerated as restricted growth strings: vertex i may use any color
    up to 1 + the largest color used before it, so every partition of the vertices
    into classes is visited exactly once. For palette size t = 1, 2, ... the search
    places colors vertex by vertex, skips colors equal to the left neighbour, and
    accepts the first complete assignment that validates.

    With pruneDomination a vertex is checked as soon as all its out-neighbours carry a
    color: one of their classes must still lie inside N+(v). Classes only grow as the
    search goes on, so a vertex that fails this test can never recover.
"""

DEFAULT_MAX_N = 16


class OracleResult(object):

    def __init__(self, minColors, witness, explored):
        self.minColors = minColors
        self.witness = witness
        # search nodes: color placements tried over all palette sizes
        self.explored = explored

    def asDict(self):
        return dict(
            min_colors=self.minColors,
            witness=list(self.witness.assignment),
            explored=self.explored,
        )

    def __repr__(self):
        return f"<OracleResult min={self.minColors} explored={self.explored}>"


def restrictedGrowthStrings(n, colorLimit=None, path=None):
    """ Yield every restricted growth string of length n as a tuple.
        colorLimit: only strings using at most this many colors
        path: when given, neighbours on the path never share a color
    """
    prefix = []

    def extend(maxUsed):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        top = maxUsed + 1
        if colorLimit is not None:
            top = min(top, colorLimit - 1)
        for colorId in range(top + 1):
            if path is not None and prefix and prefix[-1] == colorId:
                continue
            prefix.append(colorId)
            yield from extend(max(maxUsed, colorId))
            prefix.pop()

    yield from extend(-1)


class _DominationSearch(object):

    def __init__(self, path, pruneDomination=True):
        self.path = path
        self.n = path.n
        self.pruneDomination = pruneDomination
        # 0-based from here on
        self.outNeighbors = [tuple(u - 1 for u in path.outNeighbors(v)) for v in range(1, self.n + 1)]
        self.outMasks = [sum(1 << u for u in outs) for outs in self.outNeighbors]
        # closedUpTo[i]: vertices whose out-neighbours all sit at index <= i
        self.closedUpTo = []
        for i in range(self.n):
            self.closedUpTo.append([v for v, outs in enumerate(self.outNeighbors) if outs and max(outs) <= i])
        self.explored = 0
        self.colors = []
        self.members = []

    def search(self, paletteSize):
        self.colors = [-1] * self.n
        self.members = [0] * paletteSize
        return self._place(0, -1, paletteSize)

    def _stillDominating(self, i):
        colors = self.colors
        members = self.members
        for v in self.closedUpTo[i]:
            outside = ~self.outMasks[v]
            for u in self.outNeighbors[v]:
                if not members[colors[u]] & outside:
                    break
            else:
                return False
        return True

    def _place(self, i, maxUsed, paletteSize):
        if i == self.n:
            return validate(self.path, self.colors).valid
        top = min(maxUsed + 1, paletteSize - 1)
        bit = 1 << i
        for colorId in range(top + 1):
            if i and self.colors[i - 1] == colorId:
                continue
            self.explored += 1
            self.colors[i] = colorId
            self.members[colorId] |= bit
            if not self.pruneDomination or self._stillDominating(i):
                if self._place(i + 1, max(maxUsed, colorId), paletteSize):
                    return True
            self.members[colorId] &= ~bit
        self.colors[i] = -1
        return False


def oracleMinColoring(path, maxN=DEFAULT_MAX_N, pruneDomination=True):
    """ Exact minimum dominator coloring of path.
        The witness is the first valid assignment in restricted growth order.
    """
    if path.n > maxN:
        raise SearchLimitError(f"exact search is limited to {maxN} vertices", path.n)
    search = _DominationSearch(path, pruneDomination=pruneDomination)
    for paletteSize in range(1, path.n + 1):
        if search.search(paletteSize):
            return OracleResult(paletteSize, Coloring(search.colors), search.explored)
    # the all-singleton coloring is always valid
    raise DominatorColoringError("no dominator coloring found", str(path))


def oracleChromatic(path, maxN=DEFAULT_MAX_N):
    return oracleMinColoring(path, maxN=maxN).minColors
