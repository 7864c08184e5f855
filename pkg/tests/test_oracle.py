import pytest

from _builders import random_points
from ordcurves.curves import HomPoly
from ordcurves.errors import BadSubsetSize, BudgetExceeded, WrongSize
from ordcurves.generators import GeneratorSpec, generate
from ordcurves.oracle import (
    NineOnConic,
    SixOnLine,
    brute_force_ordinary,
    check_lemma_tenpoints,
    ordinary_on_subset,
)
from ordcurves.paramspace import param_dim
from ordcurves.projective import PointSet, ProjLine, ProjPoint

SIX = PointSet([(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2)])
GRID = PointSet([(x, y) for x in range(3) for y in range(3)] + [(3, 3)])


def test_six_points_all_subsets_frozen():
    got = [(T, f.coeffs) for T, f in brute_force_ordinary(SIX, 2)]
    assert got == [
        ((0, 1, 2, 3, 4), (0, 0, 0, 1, -1, 0)),
        ((0, 1, 2, 3, 5), (1, 0, -1, 0, 0, 0)),
        ((0, 1, 2, 4, 5), (1, -1, -1, 1, -1, 0)),
        ((0, 1, 3, 4, 5), (1, -2, -1, 0, 2, 0)),
        ((0, 2, 3, 4, 5), (0, 2, -2, -1, 1, 0)),
        ((1, 2, 3, 4, 5), (0, 1, -1, 0, -1, 1)),
    ]
    assert brute_force_ordinary(SIX, 2, mode="first") == brute_force_ordinary(SIX, 2)[:1]


def test_subset_on_conic():
    parab = [ProjPoint(t * t, t, 1) for t in range(5)]
    A = PointSet(parab + [ProjPoint(1, 1, 2)])
    f = ordinary_on_subset(A, range(5), 2)
    assert str(f) == "x*z - y^2"


def test_subset_four_collinear():
    A = PointSet([(t, 0) for t in range(5)] + [(0, 1), (7, 3)])
    assert ordinary_on_subset(A, (0, 1, 2, 3, 5), 2) is None


def test_subset_grid():
    f = ordinary_on_subset(GRID, range(9), 3)
    assert f.coeffs == (1, 0, -3, 0, 0, 2, 0, 0, 0, 0)
    assert brute_force_ordinary(GRID, 3) == [(tuple(range(9)), f)]


def test_subset_size_checked():
    with pytest.raises(BadSubsetSize):
        ordinary_on_subset(SIX, range(4), 2)
    with pytest.raises(BadSubsetSize):
        ordinary_on_subset(SIX, (0, 0, 1, 2, 3), 2)


def test_on_conic_gives_empty():
    A = PointSet([(t * t, t, 1) for t in range(7)])
    assert brute_force_ordinary(A, 2) == []


def test_generic_ten_nonempty():
    A = generate(GeneratorSpec("random", 10, seed=4, bound=100))
    assert brute_force_ordinary(A, 3, mode="first")


def test_budget(rng):
    A = PointSet(random_points(rng, 30))
    with pytest.raises(BudgetExceeded):
        brute_force_ordinary(A, 3, budget=1000)
    with pytest.raises(BudgetExceeded):
        brute_force_ordinary(A, 4)
    with pytest.raises(ValueError):
        brute_force_ordinary(A, 2, mode="some")


def test_degree_four_probe(rng):
    A = PointSet(random_points(rng, 16, 50))
    T, f = brute_force_ordinary(A, 4, mode="first", budget=200)[0]
    assert len(T) == 14 and f.degree == 4


def test_threads_do_not_change_results():
    A = generate(GeneratorSpec("random", 11, seed=9, bound=40))
    one = brute_force_ordinary(A, 3, threads=1)
    two = brute_force_ordinary(A, 3, threads=2)
    assert one == two
    assert brute_force_ordinary(A, 3, mode="first", threads=2) == one[:1]


def test_tenpoints_six_on_line(rng):
    six = [ProjPoint(t, 0, 1) for t in range(6)]
    B = six + random_points(rng, 4, 100, avoid=six)
    rep = check_lemma_tenpoints(B)
    assert rep.dim == 1
    assert rep.witness == SixOnLine(ProjLine(0, 1, 0), tuple(range(6)))


def test_tenpoints_nine_on_conic(rng):
    nine = [ProjPoint(t * t, t, 1) for t in range(9)]
    B = nine + random_points(rng, 1, 100, avoid=nine)
    rep = check_lemma_tenpoints(B)
    assert rep.dim == 1 and isinstance(rep.witness, NineOnConic)
    assert rep.witness.indices == tuple(range(9))


def test_tenpoints_generic(rng):
    B = random_points(rng, 10, 1000)
    assert param_dim(B, 3) == -1
    assert check_lemma_tenpoints(B).dim == -1 and check_lemma_tenpoints(B).witness is None
    with pytest.raises(WrongSize):
        check_lemma_tenpoints(B[:9])


