"""Homogeneous polynomials in x, y, z and exact conic classification.

Coefficients are always listed in graded-lexicographic descending order of
the exponent triple (a, b, c) of x^a y^b z^c; for degree 2 that is
x^2, xy, xz, y^2, yz, z^2. Files and certificates rely on this order.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from ordcurves import kernels
from ordcurves.errors import UnsupportedDegree, WrongDegree, ZeroPolynomial
from ordcurves.projective import ProjLine, ProjPoint

MAX_DEGREE = 6


def basis_size(d):
    return d * (d + 3) // 2 + 1


def ordinary_count(d):
    """Number of points on an ordinary curve of degree d: 2, 5, 9, 14, ..."""
    return d * (d + 3) // 2


@lru_cache(maxsize=None)
def monomial_basis(d):
    """Exponent triples of the degree-d monomials in graded-lex order."""
    if not 1 <= d <= MAX_DEGREE:
        raise UnsupportedDegree(f"degree {d} outside 1..{MAX_DEGREE}")
    return tuple((a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1))


def monomial_name(e):
    parts = []
    for var, k in zip("xyz", e):
        if k == 1:
            parts.append(var)
        elif k > 1:
            parts.append(f"{var}^{k}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class HomPoly:
    degree: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != basis_size(self.degree):
            raise ValueError(
                f"degree {self.degree} needs {basis_size(self.degree)} coefficients, got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def from_terms(cls, d, terms):
        """Build from a mapping {(a, b, c): coefficient}."""
        idx = {e: i for i, e in enumerate(monomial_basis(d))}
        coeffs = [0] * len(idx)
        for e, c in terms.items():
            coeffs[idx[tuple(e)]] += c
        return cls(d, tuple(coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def normalized(self):
        """Primitive, sign-normalized copy; the canonical form of a curve."""
        c = kernels.primitive(self.coeffs)
        if c is None:
            raise ZeroPolynomial("the zero polynomial is not a curve")
        return HomPoly(self.degree, c)

    def __call__(self, p):
        return evaluate(self, p)

    def __str__(self):
        out = ""
        for c, e in zip(self.coeffs, monomial_basis(self.degree)):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            out += f" {sign} " if out else ("-" if c < 0 else "")
            out += monomial_name(e) if abs(c) == 1 else f"{abs(c)}*{monomial_name(e)}"
        return out or "0"


def combine(coeffs, polys):
    """Integer linear combination sum(c_i * polys[i])."""
    d = polys[0].degree
    out = [0] * basis_size(d)
    for c, f in zip(coeffs, polys):
        if c:
            for k, a in enumerate(f.coeffs):
                out[k] += c * a
    return HomPoly(d, tuple(out))


def evaluate(f, p):
    """Value of f at the stored integer representative of p.

    Only zero-ness is intrinsic; scaling p by t scales the value by t^d.
    """
    row = kernels.monomial_rows(monomial_basis(f.degree), [tuple(p)])[0]
    return sum(a * b for a, b in zip(f.coeffs, row))


def on_curve(p, f):
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial is not a curve")
    return evaluate(f, p) == 0


# -- conics -------------------------------------------------------------------


@dataclass(frozen=True)
class Irreducible:
    pass


@dataclass(frozen=True)
class TwoRealLines:
    """Two distinct real lines.

    ``lines`` holds both lines exactly when they are rational; otherwise it
    is None and the pair is described by its crossing point and the
    (non-square) discriminant of the restriction to a transversal line.
    """

    singular_point: ProjPoint
    discriminant: int
    lines: tuple = None

    def contains(self, p, f):
        if self.lines is not None:
            return any(p[0] * l[0] + p[1] * l[1] + p[2] * l[2] == 0 for l in self.lines)
        return evaluate(f, p) == 0


@dataclass(frozen=True)
class DoubleLine:
    line: ProjLine


@dataclass(frozen=True)
class DegeneratePointOrEmpty:
    """Rank 2 with complex conjugate lines: the only real point is the crossing."""

    singular_point: ProjPoint


def conic_matrix(f):
    """Twice the symmetric matrix of the quadratic form, as integers."""
    a, b, c, d, e, g = f.coeffs
    return ((2 * a, b, c), (b, 2 * d, e), (c, e, 2 * g))


def classify_conic(f):
    """Exact real classification of a conic by the rank of its matrix."""
    if f.degree != 2:
        raise WrongDegree(f"expected a conic, got degree {f.degree}")
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial is not a conic")
    m = conic_matrix(f)
    rank = len(kernels.echelon(m, 3))
    if rank == 3:
        return Irreducible()
    if rank == 1:
        row = next(r for r in m if any(r))
        return DoubleLine(ProjLine(row))
    s = ProjPoint(kernels.nullspace(m, 3)[0])
    # a coordinate line missing the singular point; x_i = 0 misses s iff s_i != 0
    i = next(k for k in range(3) if s[k])
    L = ProjLine(tuple(1 if k == i else 0 for k in range(3)))
    P, Q = line_parametrization(L)
    al, be, ga = restrict_to_line(f, L, (P, Q))
    disc = be * be - 4 * al * ga
    if disc < 0:
        return DegeneratePointOrEmpty(s)
    assert disc > 0, "rank-2 conic with a double root on a transversal"
    r = isqrt(disc)
    if r * r != disc:
        return TwoRealLines(s, disc, None)
    if al != 0:
        roots = [(-be + r, 2 * al), (-be - r, 2 * al)]
    else:
        roots = [(1, 0), (ga, -be)]
    lines = []
    for u, v in roots:
        R = ProjPoint(tuple(u * pc + v * qc for pc, qc in zip(P, Q)))
        lines.append(ProjLine(kernels.cross(s, R)))
    return TwoRealLines(s, disc, tuple(sorted(lines)))


# -- restriction to a line ------------------------------------------------------


def line_parametrization(L):
    """Two points spanning L: the canonical kernel basis of its equation."""
    basis = kernels.nullspace([tuple(L)], 3)
    return ProjPoint._make(kernels.primitive(basis[0])), ProjPoint._make(kernels.primitive(basis[1]))


def _binary_mul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def restrict_to_line(f, L, params=None):
    """Coefficients of g(s, t) = f(s*P + t*Q), listed s^d, s^(d-1) t, ..., t^d.

    P and Q come from :func:`line_parametrization` unless given. g is
    identically zero exactly when L is a component of f.
    """
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial is not a curve")
    P, Q = params if params is not None else line_parametrization(L)
    lin = [(P[k], Q[k]) for k in range(3)]
    powers = []
    for k in range(3):
        pw = [[1]]
        for _ in range(f.degree):
            pw.append(_binary_mul(pw[-1], lin[k]))
        powers.append(pw)
    out = [0] * (f.degree + 1)
    for c, (a, b, e) in zip(f.coeffs, monomial_basis(f.degree)):
        if c:
            term = _binary_mul(_binary_mul(powers[0][a], powers[1][b]), powers[2][e])
            for k, v in enumerate(term):
                out[k] += c * v
    return tuple(out)


def line_as_curve(L):
    return HomPoly(1, tuple(L))


def line_product(lines):
    """The product of linear forms as a HomPoly (used to build reducible curves)."""
    acc = {(0, 0, 0): 1}
    for L in lines:
        nxt = {}
        for e, c in acc.items():
            for k in range(3):
                if L[k]:
                    e2 = list(e)
                    e2[k] += 1
                    e2 = tuple(e2)
                    nxt[e2] = nxt.get(e2, 0) + c * L[k]
        acc = nxt
    return HomPoly.from_terms(len(lines), acc)
