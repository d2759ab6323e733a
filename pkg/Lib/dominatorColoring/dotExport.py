# coding: utf-8

import io

from dominatorColoring.errors import ColoringSizeError

"""
    Graphviz export of an oriented path, optionally colored.
"""

# color id i uses DOT_PALETTE[i % 12], color 0 (the sources) always gets the first entry
DOT_PALETTE = (
    "#d9d9d9",
    "#e41a1c",
    "#377eb8",
    "#4daf4a",
    "#984ea3",
    "#ff7f00",
    "#ffff33",
    "#a65628",
    "#f781bf",
    "#66c2a5",
    "#8da0cb",
    "#e5c494",
)


def paletteColor(colorId):
    return DOT_PALETTE[colorId % len(DOT_PALETTE)]


def _printNode(path, v, coloring, out):
    attributes = [f'label="v{v}"']
    if coloring is not None:
        colorId = coloring.colorOf(v)
        attributes.append('style="filled"')
        attributes.append(f'fillcolor="{paletteColor(colorId)}"')
        attributes.append(f'tooltip="color {colorId}"')
    print(f'    v{v} [{", ".join(attributes)}];', file=out)


def printDot(path, out, coloring=None, name="orientedPath"):
    """ Write the DOT description of path to the stream out. Vertices in order, then arcs in edge order. """
    print(f"digraph {name} {{", file=out)
    print("    rankdir=LR;", file=out)
    print('    node [shape=circle, fontname="Helvetica"];', file=out)
    for v in range(1, path.n + 1):
        _printNode(path, v, coloring, out)
    for tail, head in path.arcList():
        print(f"    v{tail} -> v{head};", file=out)
    print("}", file=out)


def exportDot(path, coloring=None, name="orientedPath"):
    if coloring is not None and coloring.n != path.n:
        raise ColoringSizeError(f"the path has {path.n} vertices, the coloring covers {coloring.n}", coloring.assignment)
    out = io.StringIO()
    printDot(path, out, coloring=coloring, name=name)
    return out.getvalue()
