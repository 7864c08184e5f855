"""Ordinary lines, ordinary points of line families, and anchor points.

All searches are exhaustive over pairs and break ties by the global order
(tuple order of normalized coordinates, or index order for points of a set),
so results do not depend on scheduling.
"""

from ordcurves import kernels
from ordcurves.errors import AllCollinear, AllConcurrent, NoOrdinaryPoint, NotFound, TooFewLines
from ordcurves.projective import ProjLine, ProjPoint, common_point, incident, lines_spanned


def find_ordinary_line(A):
    """First spanned line (in line order) carrying exactly two points of A.

    Returns ``(line, (i, j))``.
    """
    spanned = lines_spanned(A)
    if len(spanned) == 1:
        raise AllCollinear(f"all {len(A)} points lie on {spanned[0][0]}")
    for line, ix in spanned:
        if len(ix) == 2:
            return line, tuple(ix)
    raise NotFound("no ordinary line although the points are not collinear")


def find_dual_sg_point(lines, forbidden=None):
    """Smallest point on exactly two of ``lines`` and off ``forbidden``.

    Returns ``(point, (i, j))`` with i < j indexing ``lines``.
    """
    lines = [tuple(l) for l in lines]
    if len(lines) < 2:
        raise TooFewLines("need at least two lines")
    if len(set(lines)) != len(lines):
        raise ValueError("lines must be distinct")
    if forbidden is not None and tuple(forbidden) in set(lines):
        raise ValueError("the forbidden line belongs to the family")
    best = None
    for p, ix in kernels.pair_groups(lines).items():
        if len(ix) != 2:
            continue
        if forbidden is not None and incident(p, forbidden):
            continue
        if best is None or p < best[0]:
            best = (p, ix)
    if best is None:
        if common_point(lines) is not None:
            raise AllConcurrent("the lines pass through one point")
        raise NoOrdinaryPoint("no point on exactly two lines off the forbidden line")
    return ProjPoint._make(best[0]), tuple(best[1])


def find_anchor_point(A):
    """A point of A on two spanned lines that each carry two or three points of A.

    Returns ``(index, L1, L2)``, the first such index and its first two
    qualifying lines in line order.
    """
    spanned = lines_spanned(A)
    if len(spanned) == 1:
        raise AllCollinear(f"all {len(A)} points lie on {spanned[0][0]}")
    small = {}
    for line, ix in spanned:
        if 2 <= len(ix) <= 3:
            for i in ix:
                small.setdefault(i, []).append(line)
    for i in range(len(A)):
        ls = small.get(i, ())
        if len(ls) >= 2:
            return i, ProjLine._make(ls[0]), ProjLine._make(ls[1])
    raise NotFound("no point lies on two lines with two or three points")
