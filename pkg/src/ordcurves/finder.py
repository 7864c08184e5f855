"""Finding ordinary curves and checking the results.

A :class:`Certificate` names the curve, the exact set of input points on it,
and how it was found (base set, selection case, optional witness point in
the parameter plane). :func:`verify_certificate` re-checks a certificate
from scratch against the point set.
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional

from ordcurves.bselect import select_b_conic, select_b_cubic
from ordcurves.curves import HomPoly, basis_size, combine, evaluate, ordinary_count
from ordcurves.errors import (
    Anomaly,
    ContainedInConic,
    ContainedInCubic,
    CounterexampleFound,
    SelectionFailed,
    TooFewPoints,
)
from ordcurves.paramspace import (
    dual_point_curve,
    param_dim,
    pencil_member_avoiding,
    phi_image,
    vanishing_subspace,
)
from ordcurves.sg import find_dual_sg_point, find_ordinary_line

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Certificate:
    degree: int
    coeffs: tuple
    incident: tuple
    base: tuple = ()
    case: str = "oracle"
    method: str = "pipeline"
    dual_witness: Optional[tuple] = None

    @property
    def curve(self):
        return HomPoly(self.degree, self.coeffs)


class Verdict(NamedTuple):
    ok: bool
    reason: str

    def __bool__(self):
        return self.ok


def incident_indices(A, f):
    return tuple(i for i, p in enumerate(A) if evaluate(f, p) == 0)


def _certify(A, f, expected, **kw):
    f = f.normalized()
    got = incident_indices(A, f)
    if got != tuple(sorted(expected)):
        raise Anomaly(f"curve {f} meets the points {got}, expected {tuple(sorted(expected))}")
    return Certificate(f.degree, f.coeffs, got, **kw)


def find_ordinary_line_cert(A):
    """Degree-one certificate from an ordinary line."""
    line, ij = find_ordinary_line(A)
    return _certify(A, HomPoly(1, tuple(line)), ij, case="Line")


def _dual_sg_curve(A, S, image, rest, limit):
    singles = [l for l in image if len(l.preimages) == 1]
    multi = [l for l in image if len(l.preimages) > limit]
    forbidden = multi[0].dual_coords if multi else None
    z, (i, j) = find_dual_sg_point([l.dual_coords for l in singles], forbidden)
    extra = (rest[singles[i].preimages[0]], rest[singles[j].preimages[0]])
    return dual_point_curve(S, z), extra, tuple(z)


def find_ordinary_conic(A):
    """A conic through exactly five points of A."""
    if len(A) < 6:
        raise TooFewPoints("need at least six points")
    if param_dim(A, 2) >= 0:
        raise ContainedInConic(vanishing_subspace(A, 2).basis[0])
    sel = select_b_conic(A)
    b = sel.b_indices
    S = vanishing_subspace([A[i] for i in b], 2)
    rest = [i for i in range(len(A)) if i not in b]
    image = phi_image([A[i] for i in b], [A[i] for i in rest], 2, _space=S)
    f, extra, z = _dual_sg_curve(A, S, image, rest, 1)
    return _certify(
        A, f, b + extra, base=b, case=sel.case_tag, method="pipeline", dual_witness=z
    )


def find_ordinary_cubic(A, allow_oracle_fallback=True, threads=1):
    """A cubic through exactly nine points of A.

    Runs the base-selection pipeline; when selection gives up on a small
    input and the fallback is allowed, the exhaustive oracle answers instead.
    """
    if len(A) < 10:
        raise TooFewPoints("need at least ten points")
    if param_dim(A, 3) >= 0:
        raise ContainedInCubic(vanishing_subspace(A, 3).basis[0])
    try:
        sel = select_b_cubic(A)
    except SelectionFailed as exc:
        if exc.anomalous or not allow_oracle_fallback:
            raise
        log.info("selection failed at %s; falling back to the oracle", exc.stage)
        return oracle_certificate(A, 3, threads=threads)
    b = sel.b_indices
    B = [A[i] for i in b]
    S = vanishing_subspace(B, 3)
    rest = [i for i in range(len(A)) if i not in b]
    image = phi_image(B, [A[i] for i in rest], 3, _space=S)
    pair = next((l for l in image if len(l.preimages) == 2), None)
    if pair is not None:
        extra = tuple(rest[k] for k in pair.preimages)
        nine = b + extra
        pencil = vanishing_subspace([A[i] for i in nine], 3)
        taken = set(nine)
        f = pencil_member_avoiding(pencil, [A[i] for i in range(len(A)) if i not in taken])
        return _certify(A, f, nine, base=b, case=sel.case_tag, method="pipeline")
    f, extra, z = _dual_sg_curve(A, S, image, rest, 2)
    return _certify(A, f, b + extra, base=b, case=sel.case_tag, method="pipeline", dual_witness=z)


def oracle_certificate(A, d, threads=1):
    from ordcurves.oracle import brute_force_ordinary

    found = brute_force_ordinary(A, d, mode="first", threads=threads)
    if not found:
        raise CounterexampleFound(d, len(A))
    T, f = found[0]
    return _certify(A, f, T, base=(), case="oracle", method="oracle")


def find_ordinary(A, d, allow_oracle_fallback=True, threads=1):
    if d == 1:
        return find_ordinary_line_cert(A)
    if d == 2:
        return find_ordinary_conic(A)
    if d == 3:
        return find_ordinary_cubic(A, allow_oracle_fallback, threads)
    raise ValueError(f"no finder for degree {d}")


def verify_certificate(A, cert):
    """Independent re-check of a certificate against the full point set."""
    d = cert.degree
    if len(cert.coeffs) != basis_size(d):
        return Verdict(False, "bad-length")
    if not any(cert.coeffs):
        return Verdict(False, "zero-polynomial")
    if any(not 0 <= i < len(A) for i in cert.incident):
        return Verdict(False, "index-out-of-range")
    f = HomPoly(d, cert.coeffs)
    on = incident_indices(A, f)
    if on != tuple(sorted(set(cert.incident))) or len(on) != len(cert.incident):
        return Verdict(False, "incidence-mismatch")
    if len(on) != ordinary_count(d):
        return Verdict(False, "wrong-count")
    if not set(cert.base) <= set(on):
        return Verdict(False, "base-not-on-curve")
    if cert.dual_witness is not None:
        S = vanishing_subspace([A[i] for i in cert.base], d)
        if S.dim != 3 or combine(cert.dual_witness, S.basis).normalized() != f.normalized():
            return Verdict(False, "witness-mismatch")
    return Verdict(True, "ok")
