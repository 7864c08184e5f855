"""Exhaustive ground truth for ordinary curves.

For a subset T of the right size, the degree-d curves through T form the
space V. Some member of V misses every other point unless one of those
points lies on every member of V, since finitely many proper subspaces
cannot cover V. Enumerating all subsets therefore decides the existence
question exactly.
"""

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from ordcurves import kernels
from ordcurves.curves import HomPoly, evaluate, monomial_basis, ordinary_count
from ordcurves.errors import Anomaly, BadSubsetSize, BudgetExceeded, WrongSize
from ordcurves.paramspace import CurveSubspace, member_avoiding, param_dim, vanishing_subspace
from ordcurves.projective import ProjLine, lines_spanned

DEFAULT_BUDGET = 10**7


def _member_for(rows_all, T, d, pts):
    exps = monomial_basis(d)
    ns = kernels.nullspace([rows_all[i] for i in T], len(exps))
    if not ns:
        return None
    tset = set(T)
    others = [i for i in range(len(pts)) if i not in tset]
    for i in others:
        r = rows_all[i]
        if not any(sum(a * b for a, b in zip(v, r)) for v in ns):
            return None
    V = CurveSubspace(d, tuple(HomPoly(d, v) for v in ns))
    return member_avoiding(V, [pts[i] for i in others])


def ordinary_on_subset(A, T, d):
    """A curve through exactly the points T of A, or None if none exists."""
    T = tuple(T)
    if len(T) != ordinary_count(d) or len(set(T)) != len(T):
        raise BadSubsetSize(f"need {ordinary_count(d)} distinct indices, got {T}")
    pts = [tuple(p) for p in A]
    rows = kernels.monomial_rows(monomial_basis(d), pts)
    return _member_for(rows, T, d, pts)


def _scan_block(args):
    rows, pts, d, lead, mode = args
    n = len(pts)
    k = ordinary_count(d)
    out = []
    for tail in itertools.combinations(range(lead + 1, n), k - 1):
        T = (lead,) + tail
        f = _member_for(rows, T, d, pts)
        if f is not None:
            out.append((T, f))
            if mode == "first":
                break
    return out


def brute_force_ordinary(A, d, mode="all", budget=None, threads=1):
    """All (or the first) subsets carrying an ordinary degree-d curve, lexicographically.

    Work is split by the leading index of the subset; blocks are merged in
    order, so the result does not depend on ``threads``.
    """
    if mode not in ("first", "all"):
        raise ValueError(f"unknown mode {mode!r}")
    n = len(A)
    k = ordinary_count(d)
    if d >= 4 and (mode != "first" or budget is None):
        raise BudgetExceeded("degree 4 and above needs mode='first' and an explicit budget")
    limit = DEFAULT_BUDGET if budget is None else budget
    total = math.comb(n, k)
    if total > limit:
        raise BudgetExceeded(f"C({n}, {k}) = {total} subsets exceed the budget {limit}")
    pts = [tuple(p) for p in A]
    rows = kernels.monomial_rows(monomial_basis(d), pts)
    jobs = [(rows, pts, d, lead, mode) for lead in range(n - k + 1)]
    results = []
    if threads > 1 and len(jobs) > 1:
        # in "first" mode, stop after the first window of blocks with a hit
        window = threads if mode == "first" else len(jobs)
        with ProcessPoolExecutor(max_workers=threads) as ex:
            for start in range(0, len(jobs), window):
                for block in ex.map(_scan_block, jobs[start : start + window]):
                    results.extend(block)
                if mode == "first" and results:
                    break
    else:
        for job in jobs:
            results.extend(_scan_block(job))
            if mode == "first" and results:
                break
    return results[:1] if mode == "first" else results


@dataclass(frozen=True)
class SixOnLine:
    line: ProjLine
    indices: tuple


@dataclass(frozen=True)
class NineOnConic:
    conic: HomPoly
    indices: tuple


@dataclass(frozen=True)
class TenPointReport:
    dim: int
    witness: Optional[object]


def check_lemma_tenpoints(B):
    """Dimension of the cubics through ten points, with the structure that explains a pencil."""
    if len(B) != 10:
        raise WrongSize(f"expected ten points, got {len(B)}")
    dim = param_dim(B, 3)
    if dim != 1:
        return TenPointReport(dim, None)
    for line, ix in lines_spanned(B):
        if len(ix) >= 6:
            return TenPointReport(dim, SixOnLine(line, tuple(ix)))
    seen = set()
    for five in itertools.combinations(range(10), 5):
        S = vanishing_subspace([B[i] for i in five], 2)
        if S.dim != 1:
            continue
        c = S.basis[0].normalized()
        if c in seen:
            continue
        seen.add(c)
        on = tuple(i for i in range(10) if evaluate(c, B[i]) == 0)
        if len(on) >= 9:
            return TenPointReport(dim, NineOnConic(c, on))
    raise Anomaly("ten points with a pencil of cubics but neither six on a line nor nine on a conic")
