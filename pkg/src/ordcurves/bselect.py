"""Choosing the base set B.

Conics use a three-point base, cubics a seven-point base. A base is good
when the images of the remaining points in the plane of curves through B
have at most one line with many preimages (more than one for conics, more
than two for cubics) and the other lines are not all concurrent; every
returned selection is checked for exactly that before it is handed out.

Candidates are always scanned in ascending index order.
"""

import itertools
from dataclasses import dataclass, field

from ordcurves.curves import Irreducible, TwoRealLines, classify_conic, evaluate
from ordcurves.errors import ContainedInConic, ContainedInCubic, SelectionFailed, TooFewPoints
from ordcurves.paramspace import (
    dual_point_curve,
    param_dim,
    phi_image,
    vanishing_subspace,
)
from ordcurves.projective import PointSet, common_point, incident, join, lines_spanned
from ordcurves.sg import find_anchor_point, find_ordinary_line

# Thresholds of the cubic case split.
HEAVY_LINE = 14
HEAVY_CONIC = 19
# Below this size the cubic selection carries no guarantee.
GUARANTEED_SIZE = 250

CONIC_TAGS = ("Conic-Main", "Conic-ReChoiceIrreducible", "Conic-ReChoiceReducible")
CUBIC_TAGS = ("Cubic-1", "Cubic-2", "Cubic-3a", "Cubic-3b", "Cubic-3c")


@dataclass
class BSelection:
    b_indices: tuple
    case_tag: str
    notes: list = field(default_factory=list)


def max_collinear(S):
    """Largest number of points of S on one line, with the first such line."""
    spanned = lines_spanned(S)
    line, ix = max(spanned, key=lambda t: len(t[1]))
    return len(ix), line


def coconic_count(S, six):
    """True when the six indexed points of S lie on a common conic."""
    return vanishing_subspace([S[i] for i in six], 2).dim >= 1


def _split(image, limit):
    heavy = [l for l in image if len(l.preimages) > limit]
    light = [l for l in image if len(l.preimages) <= limit]
    return heavy, light


def _check_base(A, b, d, limit):
    """Verify a base; returns (ok, concurrency point or None, space, image, rest)."""
    B = [A[i] for i in b]
    S = vanishing_subspace(B, d)
    if S.dim != 3:
        return False, None, S, None, None
    bset = set(b)
    rest = [i for i in range(len(A)) if i not in bset]
    image = phi_image(B, [A[i] for i in rest], d, _space=S)
    heavy, light = _split(image, limit)
    if len(heavy) > 1 or len(light) < 2:
        return False, None, S, image, rest
    z = common_point([l.dual_coords for l in light])
    return z is None, z, S, image, rest


# -- conics -------------------------------------------------------------------


def select_b_conic(A):
    """Three base points for the ordinary-conic search."""
    if len(A) < 6:
        raise TooFewPoints("need at least six points")
    if param_dim(A, 2) >= 0:
        raise ContainedInConic(vanishing_subspace(A, 2).basis[0])
    x0, L1, L2 = find_anchor_point(A)
    x1 = next(i for i in range(len(A)) if i != x0 and incident(A[i], L1))
    x2 = next(i for i in range(len(A)) if i != x0 and incident(A[i], L2))
    b = tuple(sorted((x0, x1, x2)))
    ok, z, S, image, _ = _check_base(A, b, 2, 1)
    notes = [f"anchor {x0} on {tuple(L1)} and {tuple(L2)}"]
    if ok:
        return BSelection(b, "Conic-Main", notes)
    if z is None:
        raise SelectionFailed("conic-anchor", anomalous=True)

    L = join(A[x1], A[x2])
    C = dual_point_curve(S, z)
    kind = classify_conic(C)
    notes.append(f"single-preimage lines concurrent; conic {C}")
    on_L = [i for i in range(len(A)) if incident(A[i], L)]
    y0 = next((i for i in on_L if evaluate(C, A[i]) != 0), None)
    if y0 is None:
        raise SelectionFailed("conic-rechoice-y0", anomalous=True)
    if isinstance(kind, Irreducible):
        tag = "Conic-ReChoiceIrreducible"
        pool = [i for i in range(len(A)) if evaluate(C, A[i]) == 0 and not incident(A[i], L)]
        if len(pool) < 2:
            raise SelectionFailed("conic-rechoice-irreducible", anomalous=True)
        y1, y2 = pool[0], pool[1]
    elif isinstance(kind, TwoRealLines) and kind.lines is not None:
        tag = "Conic-ReChoiceReducible"
        M1, M2 = kind.lines

        def first_on(M, other):
            return next(
                (
                    i
                    for i in range(len(A))
                    if incident(A[i], M) and not incident(A[i], L) and not incident(A[i], other)
                ),
                None,
            )

        y1, y2 = first_on(M1, M2), first_on(M2, M1)
        if y1 is None or y2 is None:
            raise SelectionFailed("conic-rechoice-reducible", anomalous=True)
    else:
        raise SelectionFailed(f"conic-rechoice-{type(kind).__name__}", anomalous=True)
    b = tuple(sorted((y0, y1, y2)))
    ok, _, _, _, _ = _check_base(A, b, 2, 1)
    if not ok:
        raise SelectionFailed(tag, anomalous=True)
    return BSelection(b, tag, notes)


# -- cubics -------------------------------------------------------------------


def _unique_conic(pts):
    S = vanishing_subspace(pts, 2)
    return S.basis[0] if S.dim == 1 else None


class _Blockers:
    """Lines and conics spanned by the chosen points that a new point must avoid."""

    def __init__(self, A, chosen, skip_line=None, lines=True, conics=True):
        pts = [A[i] for i in chosen]
        self.lines = []
        if lines:
            seen = set()
            for p, q in itertools.combinations(pts, 2):
                l = join(p, q)
                if l != skip_line and l not in seen:
                    seen.add(l)
                    self.lines.append(l)
        self.conics = []
        self.forced = False
        if conics and len(pts) >= 5:
            for five in itertools.combinations(pts, 5):
                c = _unique_conic(list(five))
                if c is None:
                    # five points with four collinear: every sixth point is co-conic
                    self.forced = True
                else:
                    self.conics.append(c)

    def blocks(self, p):
        if self.forced:
            return True
        return any(incident(p, l) for l in self.lines) or any(evaluate(c, p) == 0 for c in self.conics)


def _choose(A, candidates, chosen, blockers, extra=()):
    taken = set(chosen) | set(extra)
    for i in candidates:
        if i not in taken and not blockers.blocks(A[i]):
            return i
    return None


def _on_curve_count(A, f):
    return sum(1 for p in A if evaluate(f, p) == 0)


class _Dispatch(Exception):
    def __init__(self, kind, curve, count):
        super().__init__(kind)
        self.kind = kind
        self.curve = curve
        self.count = count


def _case1(A, notes):
    n = len(A)
    chosen = []
    for step in range(1, 8):
        bl = _Blockers(A, chosen)
        for c in bl.conics:
            k = _on_curve_count(A, c)
            if k >= HEAVY_CONIC:
                raise _Dispatch("conic", c, k)
        if step == 7:
            notes.append(f"y7 avoids {len(bl.lines)} lines and {len(bl.conics)} conics")
        y = _choose(A, range(n), chosen, bl)
        if y is None:
            for l in bl.lines:
                k = sum(1 for p in A if incident(p, l))
                if k >= HEAVY_LINE:
                    raise _Dispatch("line", l, k)
            for c in bl.conics:
                k = _on_curve_count(A, c)
                if k >= HEAVY_CONIC:
                    raise _Dispatch("conic", c, k)
            raise SelectionFailed(f"case1-y{step}", anomalous=n >= GUARANTEED_SIZE)
        chosen.append(y)
    return chosen


def _case2(A, C, notes):
    n = len(A)
    on = [i for i in range(n) if evaluate(C, A[i]) == 0]
    off = [i for i in range(n) if evaluate(C, A[i]) != 0]
    notes.append(f"heavy conic {C} with {len(on)} points")
    guaranteed = n >= GUARANTEED_SIZE and len(on) >= HEAVY_CONIC
    if len(off) < 2:
        raise SelectionFailed("case2-y1", anomalous=guaranteed)
    chosen = off[:2]
    for step in range(3, 8):
        y = _choose(A, on, chosen, _Blockers(A, chosen))
        if y is None:
            raise SelectionFailed(f"case2-y{step}", anomalous=guaranteed)
        chosen.append(y)
    return chosen


def _case3a_tail(A, L, first4, on_L, avoid):
    pts = [A[i] for i in first4]
    x1 = set()
    for p, q in itertools.combinations(pts, 2):
        x1.add(join(p, q))
    blocked = set(avoid)
    for i in on_L:
        if any(incident(A[i], l) for l in x1):
            blocked.add(i)
    y5 = next((i for i in on_L if i not in blocked), None)
    if y5 is None:
        return None, "case3a-y5"
    q1 = _unique_conic(pts + [A[y5]])
    blocked |= {i for i in on_L if evaluate(q1, A[i]) == 0}
    y6 = next((i for i in on_L if i not in blocked and i != y5), None)
    if y6 is None:
        return None, "case3a-y6"
    q3 = _unique_conic(pts + [A[y6]])
    blocked |= {i for i in on_L if evaluate(q3, A[i]) == 0}
    y7 = next((i for i in on_L if i not in blocked and i not in (y5, y6)), None)
    if y7 is None:
        return None, "case3a-y7"
    return [y5, y6, y7], None


def _case3(A, L, notes):
    n = len(A)
    guaranteed = n >= GUARANTEED_SIZE
    on_L = [i for i in range(n) if incident(A[i], L)]
    off = [i for i in range(n) if not incident(A[i], L)]
    notes.append(f"heavy line {tuple(L)} with {len(on_L)} points")
    if len(off) >= 10:
        sub = PointSet(A[i] for i in off)
        _, (a, b) = find_ordinary_line(sub)
        y1, y2 = off[a], off[b]
        y3 = next(i for i in off if i not in (y1, y2))
        bl = _Blockers(A, [y1, y2, y3], conics=False)
        y4 = _choose(A, off, [y1, y2, y3], bl)
        if y4 is None:
            raise SelectionFailed("case3a-y4", anomalous=guaranteed)
        first4 = [y1, y2, y3, y4]
        tail, stage = _case3a_tail(A, L, first4, on_L, ())
        if tail is None:
            raise SelectionFailed(stage, anomalous=guaranteed)
        chosen = first4 + tail
        ok, z, S, _, _ = _check_base(A, tuple(sorted(chosen)), 3, 2)
        if not ok and z is not None:
            D = dual_point_curve(S, z)
            on_D = [i for i in on_L if evaluate(D, A[i]) == 0]
            notes.append(f"light lines concurrent; rechoosing off cubic {D} ({len(on_D)} points of L)")
            tail, stage = _case3a_tail(A, L, first4, on_L, on_D)
            if tail is None:
                raise SelectionFailed(stage + "-rechoice", anomalous=guaranteed)
            chosen = first4 + tail
        return chosen, "Cubic-3a"

    sub = PointSet(A[i] for i in off)
    k_off, L2 = max_collinear(sub) if len(off) >= 2 else (len(off), None)
    if k_off >= 3:
        tag = "Cubic-3b"
        rest = [i for i in off if not incident(A[i], L2)]
        on_L2 = [i for i in off if incident(A[i], L2)]
        if len(rest) < 3:
            raise SelectionFailed("case3b-y1", anomalous=guaranteed)
        y1, y2 = rest[0], rest[1]
        y3 = next((i for i in rest[2:] if not incident(A[i], join(A[y1], A[y2]))), None)
        if y3 is None:
            raise SelectionFailed("case3b-y3", anomalous=guaranteed)
        M = None
        if len(rest) >= 4:
            k_r, M_r = max_collinear(PointSet(A[i] for i in rest))
            if k_r >= 4:
                M = M_r
        usable = [i for i in on_L2 if M is None or not incident(A[i], M)]
        if len(usable) < 2:
            raise SelectionFailed("case3b-y4", anomalous=guaranteed)
        chosen = [y1, y2, y3, usable[0], usable[1]]
    else:
        tag = "Cubic-3c"
        if len(off) < 5:
            raise SelectionFailed("case3c-y1", anomalous=guaranteed)
        chosen = off[:5]
    for step in (6, 7):
        y = _choose(A, on_L, chosen, _Blockers(A, chosen))
        if y is None:
            raise SelectionFailed(f"{tag.lower()}-y{step}".replace("cubic-", "case"), anomalous=guaranteed)
        chosen.append(y)
    return chosen, tag


def select_b_cubic(A):
    """Seven base points for the ordinary-cubic search."""
    n = len(A)
    if n < 10:
        raise TooFewPoints("need at least ten points")
    if param_dim(A, 3) >= 0:
        raise ContainedInCubic(vanishing_subspace(A, 3).basis[0])
    guaranteed = n >= GUARANTEED_SIZE
    notes = []
    k, L = max_collinear(A)
    if k >= HEAVY_LINE:
        chosen, tag = _case3(A, L, notes)
    else:
        try:
            chosen, tag = _case1(A, notes), "Cubic-1"
        except _Dispatch as hit:
            notes.append(f"case 1 blocked by a heavy {hit.kind} with {hit.count} points")
            if hit.kind == "line":
                chosen, tag = _case3(A, hit.curve, notes)
            elif isinstance(classify_conic(hit.curve), Irreducible):
                chosen, tag = _case2(A, hit.curve, notes), "Cubic-2"
            else:
                raise SelectionFailed("case1-reducible-blocker", anomalous=guaranteed)
    b = tuple(sorted(chosen))
    B = [A[i] for i in b]
    if max_collinear(B)[0] > 4 or param_dim(B, 2) >= 0:
        raise SelectionFailed(f"{tag}-genericity", anomalous=guaranteed)
    ok, _, _, _, _ = _check_base(A, b, 3, 2)
    if not ok:
        raise SelectionFailed(f"{tag}-verification", anomalous=guaranteed)
    return BSelection(b, tag, notes)
