# coding: utf-8


class DominatorColoringError(Exception):
    def __init__(self, msg, obj=None):
        self.msg = msg
        self.obj = obj

    def __str__(self):
        if self.obj is None:
            return self.msg
        return f"{self.msg}: {self.obj!r}"


class OrientationParseError(DominatorColoringError):
    """ Raised for orientation text with a character outside the flag alphabet.
        position is 1-based, so it names the edge (v_i, v_i+1) the character would describe.
    """

    def __init__(self, text, position):
        self.text = text
        self.position = position
        self.character = text[position - 1]
        msg = f"invalid character {self.character!r} at position {position}"
        super().__init__(msg, text)


class PathSizeError(DominatorColoringError):
    pass


class ColoringSizeError(DominatorColoringError):
    pass


class ColorIdError(DominatorColoringError):
    pass


class VertexRangeError(DominatorColoringError):
    pass


class SearchLimitError(DominatorColoringError):
    pass


class EnumerationLimitError(DominatorColoringError):
    pass
