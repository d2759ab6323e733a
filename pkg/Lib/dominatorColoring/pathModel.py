# coding: utf-8

import collections
import random

from dominatorColoring.errors import OrientationParseError, PathSizeError, VertexRangeError

"""
    Oriented paths.

    The underlying graph is always v1 - v2 - ... - vn. An orientation is one flag per edge:
        F   edge i points forward,  v_i -> v_i+1
        B   edge i points backward, v_i+1 -> v_i
    Vertices are 1-based in everything that takes or returns a vertex id.
"""

FORWARD = "F"
BACKWARD = "B"

# accepted on input, never written
_flagAliases = {
    FORWARD: FORWARD,
    BACKWARD: BACKWARD,
    ">": FORWARD,
    "<": BACKWARD,
}

_flipped = {FORWARD: BACKWARD, BACKWARD: FORWARD}


class OrientedPath(collections.namedtuple("OrientedPath", ["n", "arcs"])):
    """ An orientation of the path P_n.
        n: vertex count, at least 1
        arcs: string of n-1 flags, arcs[i-1] is the direction of edge (v_i, v_i+1)
    """
    __slots__ = ()

    def __new__(cls, n, arcs=""):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise PathSizeError("an oriented path needs at least one vertex", n)
        arcs = "".join(arcs)
        if len(arcs) != n - 1:
            raise PathSizeError(f"a path with {n} vertices has {n - 1} arcs, got {len(arcs)}", arcs)
        for flag in arcs:
            if flag not in _flipped:
                raise PathSizeError("arc flags are F or B", flag)
        return super().__new__(cls, n, arcs)

    def __str__(self):
        return self.arcs

    def checkVertex(self, v):
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= self.n:
            raise VertexRangeError(f"vertex ids run from 1 to {self.n}", v)

    def outNeighbors(self, v):
        # the (at most two) heads of arcs leaving v
        self.checkVertex(v)
        neighbors = []
        if v > 1 and self.arcs[v - 2] == BACKWARD:
            neighbors.append(v - 1)
        if v < self.n and self.arcs[v - 1] == FORWARD:
            neighbors.append(v + 1)
        return tuple(neighbors)

    def inNeighbors(self, v):
        # the (at most two) tails of arcs entering v
        self.checkVertex(v)
        neighbors = []
        if v > 1 and self.arcs[v - 2] == FORWARD:
            neighbors.append(v - 1)
        if v < self.n and self.arcs[v - 1] == BACKWARD:
            neighbors.append(v + 1)
        return tuple(neighbors)

    def underlyingDegree(self, v):
        self.checkVertex(v)
        if self.n == 1:
            return 0
        if v in (1, self.n):
            return 1
        return 2

    def arcList(self):
        # list of (tail, head) pairs in edge order
        arcs = []
        for i, flag in enumerate(self.arcs, start=1):
            if flag == FORWARD:
                arcs.append((i, i + 1))
            else:
                arcs.append((i + 1, i))
        return arcs


class DegreeProfile(collections.namedtuple("DegreeProfile", ["inDegrees", "outDegrees"])):
    """ In- and out-degrees of every vertex, stored 0-based.
        Use inDegree(v) / outDegree(v) for 1-based lookups.
    """
    __slots__ = ()

    @property
    def n(self):
        return len(self.inDegrees)

    def inDegree(self, v):
        return self.inDegrees[v - 1]

    def outDegree(self, v):
        return self.outDegrees[v - 1]


def parseOrientation(text):
    """ Make an OrientedPath from a flag string. The empty string is the single vertex path.
        '>' and '<' are read as 'F' and 'B'.
    """
    flags = []
    for position, character in enumerate(text, start=1):
        flag = _flagAliases.get(character)
        if flag is None:
            raise OrientationParseError(text, position)
        flags.append(flag)
    return OrientedPath(len(flags) + 1, "".join(flags))


def formatOrientation(path):
    return path.arcs


def degreeProfile(path):
    inDegrees = [0] * path.n
    outDegrees = [0] * path.n
    for i, flag in enumerate(path.arcs):
        # edge between index i and i+1, 0-based
        if flag == FORWARD:
            outDegrees[i] += 1
            inDegrees[i + 1] += 1
        else:
            outDegrees[i + 1] += 1
            inDegrees[i] += 1
    return DegreeProfile(tuple(inDegrees), tuple(outDegrees))


def reverse(path):
    # flip every arc in place, the vertices keep their labels
    return OrientedPath(path.n, "".join(_flipped[flag] for flag in path.arcs))


def randomOrientation(n, seed):
    """ Uniform random orientation of P_n. The flags are drawn in edge order
        from a generator seeded with seed, so (n, seed) is a prefix of (m, seed) for m > n.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise PathSizeError("an oriented path needs at least one vertex", n)
    rng = random.Random(seed)
    flags = [FORWARD if rng.random() < 0.5 else BACKWARD for i in range(n - 1)]
    return OrientedPath(n, "".join(flags))


def _alternating(first, length):
    second = _flipped[first]
    return "".join(first if i % 2 == 0 else second for i in range(length))


def optimalOrientation(n):
    """ An orientation of P_n whose dominator chromatic number is the smallest over all orientations.
            n odd           BFBF...BF   sinks on the odd positions
            n = 4k          FBFB...F    out-degrees 1,0,2,0,...,2,0
            n = 4k+2        BFBF...B    alternating, last vertex a source of out-degree 1
            n = 6           FBFBF       out-degrees 1,0,2,0,2,0
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise PathSizeError("an oriented path needs at least one vertex", n)
    if n == 6:
        return OrientedPath(6, "FBFBF")
    if n % 2 == 1:
        return OrientedPath(n, _alternating(BACKWARD, n - 1))
    if n % 4 == 0:
        return OrientedPath(n, _alternating(FORWARD, n - 1))
    return OrientedPath(n, _alternating(BACKWARD, n - 1))
