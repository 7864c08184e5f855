import pytest

from ordcurves.bselect import max_collinear
from ordcurves.curves import Irreducible, classify_conic, evaluate
from ordcurves.errors import SpecInvalid
from ordcurves.fileio import format_points
from ordcurves.generators import KINDS, NODAL_CUBIC, UNIT_CIRCLE, GeneratorSpec, generate
from ordcurves.paramspace import max_collinear_count, param_dim


def test_random_deterministic():
    spec = GeneratorSpec("random", 12, seed=7, bound=50)
    A = generate(spec)
    assert len(A) == 12
    assert format_points(A) == format_points(generate(spec))
    assert list(map(tuple, A))[:3] == [(27, 44, 1), (27, -32, -1), (14, -11, 1)]
    assert format_points(generate(GeneratorSpec("random", 12, seed=8, bound=50))) != format_points(A)


def test_heavy_line():
    A = generate(GeneratorSpec("heavy-line", 250, seed=1, on_line=230))
    assert len(A) == 250 and max_collinear(A)[0] >= 230


def test_heavy_conic():
    A = generate(GeneratorSpec("heavy-conic", 250, seed=1, on_conic=240))
    assert sum(evaluate(UNIT_CIRCLE, p) == 0 for p in A) >= 240
    assert isinstance(classify_conic(UNIT_CIRCLE), Irreducible)
    assert param_dim(A, 3) < 0


def test_on_cubic():
    A = generate(GeneratorSpec("on-cubic", 20, seed=2, bound=100))
    assert all(evaluate(NODAL_CUBIC, p) == 0 for p in A)


def test_grid():
    A = generate(GeneratorSpec("grid", 9))
    assert sorted(map(tuple, A)) == sorted((i, j, 1) for i in range(3) for j in range(3))
    with pytest.raises(SpecInvalid):
        generate(GeneratorSpec("grid", 10))


@pytest.mark.parametrize("kind, want_off_max", [("case3b", 3), ("case3c", 2)])
def test_case3_kinds(kind, want_off_max):
    A = generate(GeneratorSpec(kind, 250, seed=5, on_line=243))
    assert max_collinear(A)[0] >= 243
    off = A.points[243:]
    if want_off_max == 3:
        assert max_collinear_count(off) >= 3
    else:
        assert max_collinear_count(off) == 2


def test_invalid_specs():
    with pytest.raises(SpecInvalid):
        generate(GeneratorSpec("spiral", 10))
    with pytest.raises(SpecInvalid):
        generate(GeneratorSpec("heavy-line", 10, on_line=11))
    with pytest.raises(SpecInvalid):
        generate(GeneratorSpec("random", 5, bound=0))


@pytest.mark.parametrize("kind", [k for k in KINDS if k != "grid"])
def test_every_kind_deterministic(kind):
    spec = GeneratorSpec(kind, 40, seed=3, bound=200)
    assert format_points(generate(spec)) == format_points(generate(spec))
