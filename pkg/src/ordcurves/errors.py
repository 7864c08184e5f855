"""Exception hierarchy.

Every error raised by the library derives from :class:`OrdCurvesError`.
:class:`Anomaly` marks failures of searches that are mathematically guaranteed
to succeed; those are never swallowed, the CLI maps them to exit code 5.
"""


class OrdCurvesError(Exception):
    pass


class ZeroVector(OrdCurvesError, ValueError):
    pass


class EqualPoints(OrdCurvesError, ValueError):
    pass


class EqualLines(OrdCurvesError, ValueError):
    pass


class TooFewPoints(OrdCurvesError, ValueError):
    pass


class TooFewLines(OrdCurvesError, ValueError):
    pass


class UnsupportedDegree(OrdCurvesError, ValueError):
    pass


class ZeroPolynomial(OrdCurvesError, ValueError):
    pass


class WrongDegree(OrdCurvesError, ValueError):
    pass


class BadBase(OrdCurvesError, ValueError):
    pass


class PointInBase(OrdCurvesError, ValueError):
    pass


class NoCondition(OrdCurvesError, ValueError):
    pass


class ForcedPoint(OrdCurvesError, ValueError):
    def __init__(self, point):
        super().__init__(f"every member of the family vanishes at {tuple(point)}")
        self.point = point


class AllCollinear(OrdCurvesError, ValueError):
    pass


class AllConcurrent(OrdCurvesError, ValueError):
    pass


class OutOfRange(OrdCurvesError, ValueError):
    pass


class BadSubsetSize(OrdCurvesError, ValueError):
    pass


class WrongSize(OrdCurvesError, ValueError):
    pass


class BudgetExceeded(OrdCurvesError):
    pass


class SpecInvalid(OrdCurvesError, ValueError):
    pass


class ContainedInCurve(OrdCurvesError):
    """The point set lies on a curve of the requested degree."""

    def __init__(self, degree, curve):
        super().__init__(f"point set is contained in a curve of degree {degree}")
        self.degree = degree
        self.curve = curve


class ContainedInConic(ContainedInCurve):
    def __init__(self, curve):
        super().__init__(2, curve)


class ContainedInCubic(ContainedInCurve):
    def __init__(self, curve):
        super().__init__(3, curve)


class SelectionFailed(OrdCurvesError):
    """Base-set selection gave up.

    ``anomalous`` is true when the input is large enough that success was
    guaranteed, i.e. the failure points at a bug or a mathematical surprise.
    """

    def __init__(self, stage, anomalous=False):
        super().__init__(f"base selection failed at {stage}" + (" (anomalous)" if anomalous else ""))
        self.stage = stage
        self.anomalous = anomalous


class Anomaly(OrdCurvesError):
    pass


class NoOrdinaryPoint(Anomaly):
    pass


class NotFound(Anomaly):
    pass


class CounterexampleFound(OrdCurvesError):
    """Exhaustive search found no ordinary curve although the hypothesis holds."""

    def __init__(self, degree, n):
        super().__init__(f"no ordinary curve of degree {degree} among {n} points")
        self.degree = degree
        self.n = n


class ParseError(OrdCurvesError, ValueError):
    def __init__(self, line, msg="cannot parse point"):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class DuplicatePoint(ParseError):
    def __init__(self, line, first):
        super().__init__(line, f"duplicate of the point on line {first}")
        self.first = first


class FormatError(OrdCurvesError, ValueError):
    pass
