"""Exact points and lines of the real projective plane.

Points and lines are stored as primitive integer triples whose first nonzero
entry is positive, so equality and hashing are plain tuple operations and
the tuple order is the global order used for every tie-break.
"""

from fractions import Fraction
from math import lcm

from ordcurves import kernels
from ordcurves.errors import (
    DuplicatePoint,
    EqualLines,
    EqualPoints,
    TooFewLines,
    TooFewPoints,
    ZeroVector,
)


def _integer_triple(raw):
    vals = [Fraction(v) for v in raw]
    if len(vals) != 3:
        raise ValueError("expected three homogeneous coordinates")
    den = lcm(*(v.denominator for v in vals))
    return [int(v * den) for v in vals]


class _Triple(tuple):
    __slots__ = ()

    def __new__(cls, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) == 2:
            coords = (coords[0], coords[1], 1)
        v = kernels.primitive(_integer_triple(coords))
        if v is None:
            raise ZeroVector(f"{cls.__name__} with all coordinates zero")
        return tuple.__new__(cls, v)

    @classmethod
    def _make(cls, normalized):
        # caller guarantees `normalized` is already primitive and sign-normalized
        return tuple.__new__(cls, normalized)

    def __repr__(self):
        return f"{type(self).__name__}{tuple.__repr__(self)}"

    @property
    def coords(self):
        return tuple(self)


class ProjPoint(_Triple):
    """A point (x : y : z). Two coordinates are read as the affine point (x, y, 1)."""

    __slots__ = ()


class ProjLine(_Triple):
    """A line a*x + b*y + c*z = 0 given by its dual coordinates (a, b, c)."""

    __slots__ = ()


def normalize_point(raw):
    """Primitive sign-normalized representative of the projective point ``raw``.

    >>> normalize_point((Fraction(1, 2), Fraction(1, 3), 0))
    ProjPoint(3, 2, 0)
    """
    return ProjPoint(*raw)


def join(p, q):
    """The line through two distinct points."""
    c = kernels.primitive(kernels.cross(p, q))
    if c is None:
        raise EqualPoints(f"{p} and {q} are the same point")
    return ProjLine._make(c)


def meet(l1, l2):
    """The intersection point of two distinct lines."""
    c = kernels.primitive(kernels.cross(l1, l2))
    if c is None:
        raise EqualLines(f"{l1} and {l2} are the same line")
    return ProjPoint._make(c)


def incident(p, l):
    return p[0] * l[0] + p[1] * l[1] + p[2] * l[2] == 0


def collinear(p, q, r):
    return (
        p[0] * (q[1] * r[2] - q[2] * r[1])
        - p[1] * (q[0] * r[2] - q[2] * r[0])
        + p[2] * (q[0] * r[1] - q[1] * r[0])
    ) == 0


class PointSet:
    """An ordered list of distinct projective points.

    Indices are stable: certificates and selections refer to points by their
    position here.
    """

    __slots__ = ("points", "_index")

    def __init__(self, points=()):
        pts = tuple(p if isinstance(p, ProjPoint) else ProjPoint(*p) for p in points)
        index = {}
        for i, p in enumerate(pts):
            if p in index:
                raise DuplicatePoint(i + 1, index[p] + 1)
            index[p] = i
        self.points = pts
        self._index = index

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PointSet({list(map(tuple, self.points))})"

    def __contains__(self, p):
        return p in self._index

    def index(self, p):
        return self._index[p]

    def subset(self, indices):
        return PointSet(self.points[i] for i in indices)


def lines_spanned(S):
    """Every line through at least two points of ``S`` with the sorted indices on it.

    The result is sorted by line.
    """
    pts = S.points if isinstance(S, PointSet) else tuple(S)
    if len(pts) < 2:
        raise TooFewPoints("need at least two points to span a line")
    groups = kernels.pair_groups(pts)
    return [(ProjLine._make(k), v) for k, v in sorted(groups.items())]


def common_point(lines):
    """The point on every line, or None if the lines are not concurrent."""
    lines = list(lines)
    if len(lines) < 2:
        raise TooFewLines("need at least two lines")
    first = lines[0]
    p = None
    for l in lines[1:]:
        c = kernels.primitive(kernels.cross(first, l))
        if c is not None:
            p = ProjPoint._make(c)
            break
    if p is None:
        raise TooFewLines("need at least two distinct lines")
    for l in lines:
        if not incident(p, l):
            return None
    return p
