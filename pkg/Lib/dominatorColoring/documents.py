# coding: utf-8

import json

from dominatorColoring.errors import DominatorColoringError
from dominatorColoring.mdcAlgorithm import Coloring
from dominatorColoring.pathModel import parseOrientation
from dominatorColoring.validator import validate


class ColoringDocument(object):
    """ The JSON form of a colored path, as written by the color and optimal commands.

        n               vertex count
        orientation     flag string
        colors          number of distinct colors
        assignment      color id per vertex, vertex 1 first
        classes         color id -> sorted 1-based vertex ids
        star_color      the shared color C* or null
        valid           always recomputed with the validator, never read back
    """

    def __init__(self, path, coloring):
        self.path = path
        self.coloring = coloring
        self.valid = validate(path, coloring).valid

    def asDict(self):
        return dict(
            n=self.path.n,
            orientation=str(self.path),
            colors=self.coloring.numColors,
            assignment=list(self.coloring.assignment),
            # json object keys are strings
            classes={str(colorId): list(members) for colorId, members in self.coloring.classes.items()},
            star_color=self.coloring.starColor,
            valid=self.valid,
        )

    def toJSON(self, indent=None):
        return json.dumps(self.asDict(), indent=indent)

    @classmethod
    def fromDict(cls, data):
        try:
            path = parseOrientation(data["orientation"])
            coloring = Coloring(data["assignment"], starColor=data.get("star_color"))
        except (KeyError, TypeError) as error:
            raise DominatorColoringError("not a coloring document", error)
        if "n" in data and data["n"] != path.n:
            raise DominatorColoringError("n does not match the orientation", data["n"])
        if "classes" in data:
            classes = {int(colorId): tuple(members) for colorId, members in data["classes"].items()}
            if classes != dict(coloring.classes):
                raise DominatorColoringError("classes do not match the assignment", data["classes"])
        return cls(path, coloring)

    @classmethod
    def fromJSON(cls, text):
        try:
            data = json.loads(text)
        except ValueError as error:
            raise DominatorColoringError("not a coloring document", str(error))
        if not isinstance(data, dict):
            raise DominatorColoringError("not a coloring document", data)
        return cls.fromDict(data)

    def revalidate(self):
        # fresh report from the orientation and the assignment
        return validate(self.path, self.coloring)

    def __repr__(self):
        return f"<ColoringDocument {self.path} colors={self.coloring.numColors} valid={self.valid}>"
