"""Exact search for ordinary lines, conics and cubics in planar point sets.

A degree-d curve is ordinary for a finite set A if it passes through exactly
d(d+3)/2 points of A. Everything here works over the integers and rationals.
"""

__version__ = "0.1.0"

from ordcurves.curves import HomPoly, classify_conic, evaluate, monomial_basis
from ordcurves.errors import OrdCurvesError
from ordcurves.finder import (
    Certificate,
    find_ordinary,
    find_ordinary_conic,
    find_ordinary_cubic,
    find_ordinary_line_cert,
    verify_certificate,
)
from ordcurves.generators import GeneratorSpec, generate
from ordcurves.oracle import brute_force_ordinary
from ordcurves.paramspace import expected_dim_defect, param_dim, vanishing_subspace
from ordcurves.projective import PointSet, ProjLine, ProjPoint, join, meet

__all__ = [
    "Certificate",
    "GeneratorSpec",
    "HomPoly",
    "OrdCurvesError",
    "PointSet",
    "ProjLine",
    "ProjPoint",
    "brute_force_ordinary",
    "classify_conic",
    "evaluate",
    "expected_dim_defect",
    "find_ordinary",
    "find_ordinary_conic",
    "find_ordinary_cubic",
    "find_ordinary_line_cert",
    "generate",
    "join",
    "meet",
    "monomial_basis",
    "param_dim",
    "vanishing_subspace",
    "verify_certificate",
]
