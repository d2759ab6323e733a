# coding: utf-8

import numpy
from fontTools.misc.loggingTools import Timer

from dominatorColoring.errors import DominatorColoringError
from dominatorColoring.mdcAlgorithm import CHAIN_LOOKAHEAD, StepCounter, runMDC
from dominatorColoring.pathModel import randomOrientation

"""
    Runtime scaling of runMDC.

    Two measurements per size: the wall time (median over the repetitions, after one
    discarded warm-up run) and the step count from a StepCounter, which does not depend
    on the machine. Both are fitted on log-log axes, a slope near 1 means linear time.
"""

DEFAULT_SIZES = (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6)


class ScalingReport(object):

    def __init__(self, samples, lookahead=CHAIN_LOOKAHEAD):
        # (n, median seconds, steps), sorted by n
        self.samples = sorted(samples)
        self.lookahead = lookahead
        sizes = [n for n, seconds, steps in self.samples]
        self.loglogSlope, self.rSquared = fitLogLog(sizes, [seconds for n, seconds, steps in self.samples])
        self.stepsSlope, self.stepsRSquared = fitLogLog(sizes, [steps for n, seconds, steps in self.samples])

    @property
    def stepsPerVertex(self):
        return max(steps / n for n, seconds, steps in self.samples)

    def rows(self):
        for n, seconds, steps in self.samples:
            yield f"{n}\t{seconds:.6f}\t{steps}\t{steps / n:.3f}"

    def summary(self):
        return (f"time slope {self.loglogSlope:.3f} (r2 {self.rSquared:.4f})\t"
                f"steps slope {self.stepsSlope:.3f} (r2 {self.stepsRSquared:.4f})\t"
                f"steps per vertex <= {self.stepsPerVertex:.3f}")

    def asDict(self):
        return dict(
            samples=[dict(n=n, seconds=seconds, steps=steps) for n, seconds, steps in self.samples],
            loglog_slope=self.loglogSlope,
            r_squared=self.rSquared,
            steps_slope=self.stepsSlope,
            steps_r_squared=self.stepsRSquared,
            steps_per_vertex=self.stepsPerVertex,
        )

    def __repr__(self):
        return f"<ScalingReport sizes={[n for n, seconds, steps in self.samples]} slope={self.loglogSlope:.3f}>"


def fitLogLog(xs, ys):
    """ Least squares line through (log x, log y). Returns (slope, r squared).
        A single point has no slope, that gives (nan, nan).
    """
    x = numpy.log(numpy.asarray(xs, dtype=float))
    y = numpy.log(numpy.asarray(ys, dtype=float))
    if len(x) < 2:
        return float("nan"), float("nan")
    slope, intercept = numpy.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    total = numpy.sum((y - numpy.mean(y)) ** 2)
    if total == 0:
        return float(slope), 1.0
    return float(slope), float(1 - numpy.sum(residual ** 2) / total)


def measureRuntime(sizes=DEFAULT_SIZES, repetitions=3, seed=0, lookahead=CHAIN_LOOKAHEAD, logger=None):
    """ Time runMDC on random orientations, the i-th size uses randomOrientation(n, seed + i). """
    sizes = list(sizes)
    if not sizes:
        raise DominatorColoringError("no sizes to measure")
    for n in sizes:
        if not isinstance(n, int) or n < 2:
            raise DominatorColoringError("benchmark sizes are at least 2", n)
    if repetitions < 3:
        raise DominatorColoringError("at least 3 repetitions are needed for a median", repetitions)
    if logger is not None:
        logger.info(f"## bench {len(sizes)} sizes, {repetitions} repetitions, seed {seed}")
    samples = []
    for i, n in enumerate(sizes):
        path = randomOrientation(n, seed + i)
        # warm-up
        runMDC(path, lookahead=lookahead)
        times = []
        steps = None
        for repetition in range(repetitions):
            counter = StepCounter()
            with Timer() as timer:
                runMDC(path, lookahead=lookahead, counter=counter)
            times.append(timer.elapsed)
            steps = counter.steps
        seconds = float(numpy.median(times))
        samples.append((n, seconds, steps))
        if logger is not None:
            logger.infoItem(f"n={n}\t{seconds:.6f}s\t{steps} steps")
    report = ScalingReport(samples, lookahead=lookahead)
    if logger is not None:
        logger.info(report.summary())
    return report
