"""Point files and certificate files.

Point file: one point per line, ``x y`` (affine, read as (x, y, 1)) or
``x y z`` (homogeneous); entries are integers or fractions ``p/q``; ``#``
starts a comment. Certificate file: fixed-order ``key value`` lines, see
:data:`CERT_KEYS`.
"""

from fractions import Fraction

from ordcurves.curves import basis_size
from ordcurves.errors import DuplicatePoint, FormatError, ParseError, ZeroVector
from ordcurves.finder import Certificate
from ordcurves.projective import PointSet, ProjPoint

CERT_KEYS = ("degree", "monomial-order", "coeffs", "incident", "base", "case", "method", "dual-witness")
MONOMIAL_ORDER = "graded-lex"


def parse_points(text):
    pts = []
    where = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) not in (2, 3):
            raise ParseError(lineno, f"expected 2 or 3 fields, got {len(fields)}")
        try:
            vals = [Fraction(f) for f in fields]
        except (ValueError, ZeroDivisionError):
            raise ParseError(lineno, f"bad number in {line!r}") from None
        try:
            p = ProjPoint(*vals)
        except ZeroVector:
            err = ZeroVector(f"line {lineno}: all coordinates are zero")
            err.line = lineno
            raise err from None
        if p in where:
            raise DuplicatePoint(lineno, where[p])
        where[p] = lineno
        pts.append(p)
    return PointSet(pts)


def read_points(path):
    with open(path, encoding="utf-8") as fh:
        return parse_points(fh.read())


def format_points(A):
    return "".join(f"{x} {y} {z}\n" for x, y, z in A)


def _ints(s):
    return " ".join(str(v) for v in s) if s else "-"


def write_certificate(cert):
    vals = [
        str(cert.degree),
        MONOMIAL_ORDER,
        " ".join(str(c) for c in cert.coeffs),
        _ints(cert.incident),
        _ints(cert.base),
        cert.case,
        cert.method,
        _ints(cert.dual_witness),
    ]
    return "".join(f"{k} {v}\n" for k, v in zip(CERT_KEYS, vals))


def _parse_ints(key, value, allow_dash=True):
    if allow_dash and value == "-":
        return ()
    try:
        return tuple(int(v) for v in value.split())
    except ValueError:
        raise FormatError(f"{key}: expected integers, got {value!r}") from None


def read_certificate(text):
    lines = [l for l in text.splitlines() if l.strip()]
    if len(lines) != len(CERT_KEYS):
        raise FormatError(f"expected {len(CERT_KEYS)} lines, got {len(lines)}")
    vals = {}
    for expected, line in zip(CERT_KEYS, lines):
        key, _, value = line.partition(" ")
        if key not in CERT_KEYS:
            raise FormatError(f"unknown key {key!r}")
        if key != expected:
            raise FormatError(f"expected key {expected!r}, got {key!r}")
        vals[key] = value.strip()
    try:
        degree = int(vals["degree"])
    except ValueError:
        raise FormatError("degree must be an integer") from None
    if degree < 1:
        raise FormatError("degree must be positive")
    if vals["monomial-order"] != MONOMIAL_ORDER:
        raise FormatError(f"unsupported monomial order {vals['monomial-order']!r}")
    coeffs = _parse_ints("coeffs", vals["coeffs"], allow_dash=False)
    if len(coeffs) != basis_size(degree):
        raise FormatError(f"degree {degree} needs {basis_size(degree)} coefficients, got {len(coeffs)}")
    witness = _parse_ints("dual-witness", vals["dual-witness"])
    if witness and len(witness) != 3:
        raise FormatError("dual-witness must be a triple")
    if vals["method"] not in ("pipeline", "oracle"):
        raise FormatError(f"unknown method {vals['method']!r}")
    return Certificate(
        degree=degree,
        coeffs=coeffs,
        incident=_parse_ints("incident", vals["incident"]),
        base=_parse_ints("base", vals["base"]),
        case=vals["case"],
        method=vals["method"],
        dual_witness=witness or None,
    )
