"""Spaces of curves through a point set and the map to lines in a parameter plane.

``vanishing_subspace(A, d)`` is the vector space of degree-d forms vanishing
on A, with a canonical echelon basis. When it is three-dimensional its
projectivization is a plane, and each further point x cuts out the line of
curves that also pass through x; ``phi_map`` returns that line in dual
coordinates relative to the canonical basis.
"""

import enum
import itertools
import os
from dataclasses import dataclass
from math import gcd

from ordcurves import kernels
from ordcurves.curves import HomPoly, combine, monomial_basis, ordinary_count
from ordcurves.errors import BadBase, ForcedPoint, NoCondition, OutOfRange, PointInBase
from ordcurves.projective import ProjLine, lines_spanned

# Re-verify every computed kernel against its matrix; the test suite turns this on.
CHECK_EXACT = bool(os.environ.get("ORDCURVES_CHECK_EXACT"))


@dataclass(frozen=True)
class CurveSubspace:
    degree: int
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    def evaluations(self, points):
        """Rows (f_1(p), ..., f_k(p)) for each point p."""
        rows = kernels.monomial_rows(monomial_basis(self.degree), [tuple(p) for p in points])
        return kernels.dot_rows([f.coeffs for f in self.basis], rows)


def evaluation_matrix(points, d):
    return kernels.monomial_rows(monomial_basis(d), [tuple(p) for p in points])


def vanishing_subspace(A, d):
    """Degree-d forms vanishing on every point of A, canonical basis."""
    exps = monomial_basis(d)
    rows = kernels.monomial_rows(exps, [tuple(p) for p in A])
    ns = kernels.nullspace(rows, len(exps))
    if CHECK_EXACT:
        for v in ns:
            for r in rows:
                assert sum(a * b for a, b in zip(r, v)) == 0, "nullspace vector does not annihilate"
    return CurveSubspace(d, tuple(HomPoly(d, v) for v in ns))


def param_dim(A, d):
    """Projective dimension of the family of degree-d curves through A (-1 if none)."""
    return vanishing_subspace(A, d).dim - 1


def containing_curve(A, d):
    """Some degree-d curve through all of A, or None."""
    S = vanishing_subspace(A, d)
    return S.basis[0] if S.dim else None


class DefectReason(str, enum.Enum):
    COLLINEAR = "CollinearDPlus2"
    CONIC = "ConicFull2dPlus2"


def max_collinear_count(points):
    if len(points) < 2:
        return len(points)
    return max(len(ix) for _, ix in lines_spanned(points))


def expected_dim_defect(A, d):
    """Excess of the actual over the expected dimension, with the reason.

    Valid for at most 2d+2 points, where a positive defect happens exactly
    when d+2 points are collinear, or there are 2d+2 points on a conic.
    """
    n = len(A)
    if n > 2 * d + 2:
        raise OutOfRange(f"{n} points exceed 2d+2 = {2 * d + 2}")
    defect = param_dim(A, d) - max(ordinary_count(d) - n, -1)
    if defect <= 0:
        return defect, None
    if max_collinear_count(A) >= d + 2:
        return defect, DefectReason.COLLINEAR
    if n == 2 * d + 2 and param_dim(A, 2) >= 0:
        return defect, DefectReason.CONIC
    return defect, None


@dataclass(frozen=True)
class PhiLine:
    dual_coords: ProjLine
    preimages: tuple


def _plane_basis(B, d):
    S = vanishing_subspace(B, d)
    if S.dim != 3:
        raise BadBase(f"curves of degree {d} through the base form a space of dimension {S.dim - 1}, not 2")
    return S


def phi_map(B, x, d, _space=None):
    """The line of curves through B and x, in the plane of curves through B."""
    if x in B:
        raise PointInBase(f"{tuple(x)} belongs to the base set")
    S = _space or _plane_basis(B, d)
    v = kernels.primitive(S.evaluations([x])[0])
    if v is None:
        raise NoCondition(f"every curve through the base passes through {tuple(x)}")
    return PhiLine(ProjLine._make(v), (0,))


def phi_image(B, rest, d, _space=None):
    """Deduplicated images of ``rest``; preimages index into ``rest``."""
    S = _space or _plane_basis(B, d)
    rest = list(rest)
    base = set(B)
    for x in rest:
        if x in base:
            raise PointInBase(f"{tuple(x)} belongs to the base set")
    groups = {}
    for i, row in enumerate(S.evaluations(rest)):
        v = kernels.primitive(row)
        if v is None:
            raise NoCondition(f"every curve through the base passes through {tuple(rest[i])}")
        groups.setdefault(v, []).append(i)
    return [PhiLine(ProjLine._make(k), tuple(groups[k])) for k in sorted(groups)]


# -- choosing a member of a linear family ---------------------------------------


def _value_rank(v, h):
    # within shell h: h, -h, h-1, -(h-1), ..., 1, -1, 0
    if v == 0:
        return 2 * h
    return 2 * (h - abs(v)) + (v < 0)


def coefficient_shells(k):
    """Primitive integer k-vectors, first nonzero entry positive, by growing max-norm.

    For k = 2 the order starts (1,0), (0,1), (1,1), (1,-1), (2,1), (2,-1), ...
    """
    h = 1
    while True:
        shell = []
        for c in itertools.product(range(-h, h + 1), repeat=k):
            if max(map(abs, c)) != h:
                continue
            lead = next(a for a in c if a)
            if lead < 0:
                continue
            g = 0
            for a in c:
                g = gcd(g, a)
            if g != 1:
                continue
            shell.append(c)
        shell.sort(key=lambda c: (sum(1 for a in c if a), [_value_rank(a, h) for a in c]))
        yield from shell
        h += 1


def member_avoiding(space, avoid):
    """First combination of the basis (in shell order) nonzero at every avoid point.

    Raises ForcedPoint when some avoid point lies on every member.
    """
    avoid = list(avoid)
    rows = space.evaluations(avoid) if avoid else []
    for p, r in zip(avoid, rows):
        if not any(r):
            raise ForcedPoint(p)
    for c in coefficient_shells(space.dim):
        if all(sum(a * b for a, b in zip(c, r)) for r in rows):
            return combine(c, space.basis).normalized()
    raise AssertionError("unreachable")


def pencil_member_avoiding(pencil, avoid):
    """A curve of the pencil missing every point of ``avoid``."""
    if pencil.dim != 2:
        raise ValueError(f"expected a pencil, got a family of dimension {pencil.dim - 1}")
    return member_avoiding(pencil, avoid)


def dual_point_curve(space, z):
    """The curve with coordinates z in the basis of ``space``."""
    return combine(tuple(z), space.basis).normalized()

