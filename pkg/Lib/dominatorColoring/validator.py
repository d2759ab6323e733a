# coding: utf-8

from dominatorColoring.errors import ColoringSizeError
from dominatorColoring.mdcAlgorithm import Coloring

"""
    Check a coloring of an oriented path.

    proper      the two ends of every edge have different colors
    dominator   every vertex v with out-degree >= 1 dominates a class C, meaning C is a
                subset of the open out-neighbourhood N+(v). Sinks have nothing to dominate.
"""


class ValidationReport(object):

    def __init__(self, propernessViolations, dominationViolations):
        # edge i joins v_i and v_i+1
        self.propernessViolations = list(propernessViolations)
        # vertices of positive out-degree that dominate no class
        self.dominationViolations = list(dominationViolations)

    @property
    def proper(self):
        return not self.propernessViolations

    @property
    def dominator(self):
        return not self.dominationViolations

    @property
    def valid(self):
        return self.proper and self.dominator

    def asDict(self):
        return dict(
            proper=self.proper,
            dominator=self.dominator,
            valid=self.valid,
            properness_violations=self.propernessViolations,
            domination_violations=self.dominationViolations,
        )

    def __repr__(self):
        return f"<ValidationReport valid={self.valid} edges={self.propernessViolations} vertices={self.dominationViolations}>"


def asColoring(coloring):
    # accept a Coloring or a plain sequence of color ids
    if isinstance(coloring, Coloring):
        return coloring
    return Coloring(coloring)


def _checkSize(path, coloring):
    if coloring.n != path.n:
        raise ColoringSizeError(f"the path has {path.n} vertices, the coloring covers {coloring.n}", coloring.assignment)


def _classSizes(coloring):
    sizes = {}
    for colorId in coloring.assignment:
        sizes[colorId] = sizes.get(colorId, 0) + 1
    return sizes


def _dominated(path, coloring, sizes, v):
    # a class inside N+(v) has a member in N+(v), so only the colors found there are candidates
    outNeighbors = path.outNeighbors(v)
    found = set()
    for u in outNeighbors:
        colorId = coloring.assignment[u - 1]
        if colorId in found:
            continue
        inside = sum(1 for w in outNeighbors if coloring.assignment[w - 1] == colorId)
        if inside == sizes[colorId]:
            found.add(colorId)
    return found


def isProper(path, coloring):
    coloring = asColoring(coloring)
    _checkSize(path, coloring)
    assignment = coloring.assignment
    return all(assignment[i] != assignment[i + 1] for i in range(path.n - 1))


def dominatedClasses(path, coloring, v):
    """ All color ids whose whole class lies in the out-neighbourhood of v. """
    coloring = asColoring(coloring)
    _checkSize(path, coloring)
    path.checkVertex(v)
    return _dominated(path, coloring, _classSizes(coloring), v)


def validate(path, coloring):
    """ Report every properness and domination violation, not only the first. """
    coloring = asColoring(coloring)
    _checkSize(path, coloring)
    assignment = coloring.assignment
    propernessViolations = [i for i in range(1, path.n) if assignment[i - 1] == assignment[i]]
    sizes = _classSizes(coloring)
    dominationViolations = []
    for v in range(1, path.n + 1):
        if path.outNeighbors(v) and not _dominated(path, coloring, sizes, v):
            dominationViolations.append(v)
    return ValidationReport(propernessViolations, dominationViolations)
