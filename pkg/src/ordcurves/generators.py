"""Deterministic point-set generators for every branch of the cubic case split.

Structured points always come first (the heavy line, conic or cubic), then
the extra points. Every generator re-checks its structural promise before
returning and draws again from the same stream if a draw broke it, so the
output is a pure function of the :class:`GeneratorSpec`.
"""

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Optional

from ordcurves.curves import HomPoly, Irreducible, classify_conic, evaluate
from ordcurves.errors import SpecInvalid
from ordcurves.paramspace import max_collinear_count, param_dim
from ordcurves.prng import XorShift64Star
from ordcurves.projective import PointSet, ProjLine, ProjPoint, collinear, incident

KINDS = ("random", "heavy-line", "heavy-conic", "on-cubic", "grid", "case3b", "case3c")

# x^2 + y^2 - z^2
UNIT_CIRCLE = HomPoly(2, (1, 0, 0, 1, 0, -1))
# y^2 z - x^2 (x + z), a nodal cubic parametrized by t -> (t^2 - 1, t(t^2 - 1), 1)
NODAL_CUBIC = HomPoly.from_terms(3, {(0, 2, 1): 1, (3, 0, 0): -1, (2, 0, 1): -1})

_ATTEMPTS = 64


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int
    seed: int = 0
    bound: int = 1000
    on_line: Optional[int] = None
    on_conic: Optional[int] = None
    on_cubic: Optional[int] = None
    off_collinear: int = 3


def _affine(rng, bound):
    return ProjPoint(rng.randint(-bound, bound), rng.randint(-bound, bound), 1)


def _extend(rng, pts, count, bound, ok=lambda p: True):
    seen = set(pts)
    tries = 0
    while count:
        p = _affine(rng, bound)
        tries += 1
        if tries > 10000 * (count + 10):
            raise SpecInvalid("could not place the requested points; raise --bound")
        if p in seen or not ok(p):
            continue
        seen.add(p)
        pts.append(p)
        count -= 1
    return pts


def _random_line(rng, bound):
    while True:
        a, b = rng.randint(-5, 5), rng.randint(1, 5)
        c = rng.randint(-bound // 4, bound // 4)
        if gcd(a, b) == 1:
            # a*x - b*y + c = 0
            return ProjLine(a, -b, c)


def _points_on_line(rng, L, count, bound):
    a, b, c = L  # b != 0 by construction, y = (a*x + c) / -b
    pts = []
    seen = set()
    if 2 * bound + 1 < count:
        raise SpecInvalid("bound too small for the requested points on a line")
    while len(pts) < count:
        x = rng.randint(-bound, bound)
        p = ProjPoint(-b * x, a * x + c, -b)
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return pts


def _circle_points(rng, count, bound):
    pts = []
    seen = set()
    if bound < 2 or count > 2 * bound * bound:
        raise SpecInvalid("bound too small for the requested points on the conic")
    while len(pts) < count:
        p, q = rng.randint(-bound, bound), rng.randint(1, bound)
        if gcd(p, q) != 1:
            continue
        pt = ProjPoint(q * q - p * p, 2 * p * q, q * q + p * p)
        if pt not in seen:
            seen.add(pt)
            pts.append(pt)
    return pts


def _cubic_points(rng, count, bound):
    pts = []
    seen = set()
    while len(pts) < count:
        p, q = rng.randint(-bound, bound), rng.randint(1, bound)
        if gcd(p, q) != 1 or p * p == q * q:
            continue
        pt = ProjPoint(q * (p * p - q * q), p * (p * p - q * q), q**3)
        if pt not in seen:
            seen.add(pt)
            pts.append(pt)
    return pts


def _general_position_ok(current):
    def ok(p):
        return not any(
            collinear(current[i], current[j], p) for i in range(len(current)) for j in range(i)
        )

    return ok


def _not_in_cubic(pts):
    return len(pts) < 10 or param_dim(pts, 3) == -1


def _build(spec, rng):
    kind, n, b = spec.kind, spec.n, spec.bound
    if kind == "random":
        return _extend(rng, [], n, b)
    if kind == "grid":
        side = isqrt(n)
        if side * side != n:
            raise SpecInvalid("grid needs a square number of points")
        return [ProjPoint(i, j, 1) for i in range(side) for j in range(side)]
    if kind == "heavy-line":
        k = spec.on_line if spec.on_line is not None else n - 20
        if not 2 <= k <= n:
            raise SpecInvalid("on-line count out of range")
        L = _random_line(rng, b)
        pts = _points_on_line(rng, L, k, b)
        return _extend(rng, pts, n - k, b, lambda p: not incident(p, L))
    if kind == "heavy-conic":
        k = spec.on_conic if spec.on_conic is not None else n - 10
        if not 0 <= k <= n:
            raise SpecInvalid("on-conic count out of range")
        pts = _circle_points(rng, k, b)
        return _extend(rng, pts, n - k, b, lambda p: evaluate(UNIT_CIRCLE, p) != 0)
    if kind == "on-cubic":
        k = spec.on_cubic if spec.on_cubic is not None else n
        if not 0 <= k <= n:
            raise SpecInvalid("on-cubic count out of range")
        pts = _cubic_points(rng, k, b)
        return _extend(rng, pts, n - k, b, lambda p: evaluate(NODAL_CUBIC, p) != 0)
    if kind in ("case3b", "case3c"):
        k = spec.on_line if spec.on_line is not None else n - 7
        off = n - k
        if k < 2 or off < 6:
            raise SpecInvalid("case3b/case3c need at least six points off the line")
        L = _random_line(rng, b)
        pts = _points_on_line(rng, L, k, b)
        extra = []
        if kind == "case3b":
            m = spec.off_collinear
            if not 3 <= m <= off - 3:
                raise SpecInvalid("off-collinear count out of range")
            while True:
                L2 = _random_line(rng, b)
                if L2 != L:
                    break
            seen = set(pts)
            for p in _points_on_line(rng, L2, m + 1, b):
                if p not in seen and not incident(p, L) and len(extra) < m:
                    extra.append(p)
            if len(extra) < m:
                return None

            def ok(p):
                return not incident(p, L) and not incident(p, L2) and p not in extra

            _extend(rng, extra, off - m, b, lambda p: ok(p) and p not in seen)
        else:
            seen = set(pts)
            while len(extra) < off:
                gp = _general_position_ok(extra)
                _extend(rng, extra, 1, b, lambda p: not incident(p, L) and p not in seen and gp(p))
        return pts + extra
    raise SpecInvalid(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def _promise_holds(spec, pts):
    kind, n = spec.kind, spec.n
    if len(pts) != n or len(set(pts)) != n:
        return False
    if kind == "heavy-line":
        k = spec.on_line if spec.on_line is not None else n - 20
        return max_collinear_count(pts) >= k and _not_in_cubic(pts)
    if kind == "heavy-conic":
        k = spec.on_conic if spec.on_conic is not None else n - 10
        on = sum(1 for p in pts if evaluate(UNIT_CIRCLE, p) == 0)
        return on >= k and isinstance(classify_conic(UNIT_CIRCLE), Irreducible) and _not_in_cubic(pts)
    if kind == "on-cubic":
        k = spec.on_cubic if spec.on_cubic is not None else n
        return sum(1 for p in pts if evaluate(NODAL_CUBIC, p) == 0) >= k
    if kind in ("case3b", "case3c"):
        k = spec.on_line if spec.on_line is not None else n - 7
        off = pts[k:]
        if max_collinear_count(pts) < k or not _not_in_cubic(pts):
            return False
        if kind == "case3b":
            return max_collinear_count(off) >= 3
        return max_collinear_count(off) <= 2
    return True


def generate(spec):
    """Point set for ``spec``; same spec, same points."""
    if spec.n < 0 or spec.bound < 1:
        raise SpecInvalid("n must be nonnegative and bound positive")
    rng = XorShift64Star(spec.seed)
    for _ in range(_ATTEMPTS):
        pts = _build(spec, rng)
        if pts is not None and _promise_holds(spec, pts):
            return PointSet(pts)
    raise SpecInvalid(f"could not satisfy the {spec.kind} promise in {_ATTEMPTS} attempts")
