# coding: utf-8

import argparse
import json
import re
import sys

from fontTools.misc.loggingTools import Timer

from dominatorColoring.bench import DEFAULT_SIZES, measureRuntime
from dominatorColoring.dotExport import exportDot
from dominatorColoring.errors import DominatorColoringError
from dominatorColoring.exactOracle import DEFAULT_MAX_N
from dominatorColoring.logger import Logger
from dominatorColoring.mdcAlgorithm import CHAIN_LOOKAHEAD, LOOKAHEADS
from dominatorColoring.pathModel import optimalOrientation, randomOrientation
from dominatorColoring.pathOperator import PathOperator
from dominatorColoring.survey import FAST, METHODS, ORACLE_SURVEY_LIMIT, surveyPassed, surveyRange
from dominatorColoring.validator import asColoring

"""
    dominatorColoring command line.

    JSON and DOT go to stdout, diagnostics and logging to stderr.
    Exit codes
        0   success, valid coloring, agreement
        1   bad input: parse errors, size guards, malformed arguments
        2   a verdict failed: invalid coloring, oracle or closed form disagrees
"""

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERDICT = 2


class _ArgumentParser(argparse.ArgumentParser):
    # usage errors exit through main() with EXIT_INPUT
    def error(self, message):
        raise DominatorColoringError(message)


def parseAssignment(text):
    """ Color ids separated by commas or spaces, optionally in brackets: "1,0,2,0,1" or "[1, 0, 2]". """
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    parts = [part for part in re.split(r"[,\s]+", text) if part]
    try:
        return [int(part) for part in parts]
    except ValueError:
        raise DominatorColoringError("an assignment is a list of integer color ids", text)


def parseSizes(text):
    try:
        return [int(part) for part in re.split(r"[,\s]+", text.strip()) if part]
    except ValueError:
        raise DominatorColoringError("sizes are integers separated by commas", text)


def _emit(data, out):
    print(json.dumps(data, indent=2), file=out)


def _makeLogger(args):
    if args.verbose or args.log:
        return Logger(path=args.log)
    return None


def _operator(args, pathOrText):
    return PathOperator(
        pathOrText,
        lookahead=args.lookahead,
        oracleLimit=getattr(args, "max_n", DEFAULT_MAX_N),
        debug=bool(args.verbose or args.log),
        logPath=args.log,
    )


def colorCommand(args, out):
    if (args.orientation is None) == (args.random is None):
        raise DominatorColoringError("give either an orientation or --random N SEED")
    if args.random is not None:
        n, seed = args.random
        path = randomOrientation(n, seed)
    else:
        path = args.orientation
    document = _operator(args, path).document()
    _emit(document.asDict(), out)
    return EXIT_OK if document.valid else EXIT_VERDICT


def validateCommand(args, out):
    operator = _operator(args, args.orientation)
    report = operator.validate(parseAssignment(args.assignment))
    _emit(report.asDict(), out)
    return EXIT_OK if report.valid else EXIT_VERDICT


def oracleCommand(args, out):
    operator = _operator(args, args.orientation)
    result = operator.oracle()
    fastColors = operator.color().numColors
    data = result.asDict()
    data["fast_colors"] = fastColors
    data["matches_fast"] = fastColors == result.minColors
    _emit(data, out)
    return EXIT_OK if data["matches_fast"] else EXIT_VERDICT


def surveyCommand(args, out):
    logger = _makeLogger(args)
    with Timer() as timer:
        results = surveyRange(
            args.nFrom,
            args.nTo,
            method=args.method,
            workers=args.workers,
            oracleLimit=args.max_n,
            lookahead=args.lookahead,
            logger=logger,
        )
    for result in results:
        print(result.reportLine(), file=out)
    passed = surveyPassed(results)
    disagreements = [result.n for result in results if not result.agrees]
    if passed:
        print(f"summary: {len(results)} of {len(results)} agree", file=out)
    else:
        print(f"summary: disagreement at n={','.join(str(n) for n in disagreements)}", file=out)
    if logger is not None:
        logger.info(f"survey done in {timer.elapsed:.3f}s")
    return EXIT_OK if passed else EXIT_VERDICT


def optimalCommand(args, out):
    document = _operator(args, optimalOrientation(args.n)).document()
    _emit(document.asDict(), out)
    return EXIT_OK if document.valid else EXIT_VERDICT


def benchCommand(args, out):
    report = measureRuntime(
        parseSizes(args.sizes),
        repetitions=args.repetitions,
        seed=args.seed,
        lookahead=args.lookahead,
        logger=_makeLogger(args),
    )
    print("n\tseconds\tsteps\tsteps_per_vertex", file=out)
    for row in report.rows():
        print(row, file=out)
    print(f"summary: {report.summary()}", file=out)
    return EXIT_OK


def exportDotCommand(args, out):
    operator = _operator(args, args.orientation)
    if args.assignment is not None and args.uncolored:
        raise DominatorColoringError("--assignment and --uncolored exclude each other")
    if args.assignment is not None:
        text = exportDot(operator.path, coloring=asColoring(parseAssignment(args.assignment)))
    else:
        text = operator.exportDot(colored=not args.uncolored)
    out.write(text)
    return EXIT_OK


def buildParser():
    common = _ArgumentParser(add_help=False)
    common.add_argument("--lookahead", choices=LOOKAHEADS, default=CHAIN_LOOKAHEAD, help="2-chain test used by the coloring pass")
    common.add_argument("--verbose", action="store_true", help="log progress to stderr")
    common.add_argument("--log", metavar="PATH", default=None, help="also write the log to this file")

    parser = _ArgumentParser(prog="dominatorColoring", description="Minimum dominator colorings of oriented paths.")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    color = commands.add_parser("color", parents=[common], help="color an orientation")
    color.add_argument("orientation", nargs="?", default=None, help="flags over F and B, one per edge")
    color.add_argument("--random", nargs=2, type=int, metavar=("N", "SEED"), default=None, help="color a seeded random orientation of P_N")
    color.set_defaults(run=colorCommand)

    validate = commands.add_parser("validate", parents=[common], help="check a coloring")
    validate.add_argument("orientation")
    validate.add_argument("assignment", help='color ids in vertex order, e.g. "1,0,2,0,1"')
    validate.set_defaults(run=validateCommand)

    oracle = commands.add_parser("oracle", parents=[common], help="exact minimum by exhaustive search")
    oracle.add_argument("orientation")
    oracle.add_argument("--max-n", dest="max_n", type=int, default=DEFAULT_MAX_N, help="largest path the search accepts")
    oracle.set_defaults(run=oracleCommand)

    survey = commands.add_parser("survey", parents=[common], help="minimum over all orientations of P_n")
    survey.add_argument("--from", dest="nFrom", type=int, required=True)
    survey.add_argument("--to", dest="nTo", type=int, required=True)
    survey.add_argument("--method", choices=METHODS, default=FAST)
    survey.add_argument("--workers", type=int, default=1)
    survey.add_argument("--max-n", dest="max_n", type=int, default=ORACLE_SURVEY_LIMIT, help="largest n surveyed with the oracle")
    survey.set_defaults(run=surveyCommand)

    optimal = commands.add_parser("optimal", parents=[common], help="an orientation reaching the minimum, colored")
    optimal.add_argument("n", type=int)
    optimal.set_defaults(run=optimalCommand)

    bench = commands.add_parser("bench", parents=[common], help="runtime scaling of the coloring pass")
    bench.add_argument("--sizes", default=",".join(str(n) for n in DEFAULT_SIZES))
    bench.add_argument("--repetitions", type=int, default=3)
    bench.add_argument("--seed", type=int, default=0)
    bench.set_defaults(run=benchCommand)

    exportDot = commands.add_parser("export-dot", parents=[common], help="graphviz DOT of an orientation")
    exportDot.add_argument("orientation")
    exportDot.add_argument("--assignment", default=None, help="color with this assignment instead of the coloring pass")
    exportDot.add_argument("--uncolored", action="store_true")
    exportDot.set_defaults(run=exportDotCommand)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = buildParser().parse_args(argv)
        return args.run(args, out)
    except DominatorColoringError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
