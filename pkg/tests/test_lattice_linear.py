"""Exact integer/rational linear algebra, LP feasibility and fiber enumeration."""

from fractions import Fraction
from itertools import product

import sympy
from hypothesis import given
from hypothesis import strategies as st

from toricsing.lattice import det, enumerate_fiber, in_semigroup, integer_kernel, inverse, rank
from toricsing.linear import (
    fm_strictly_positive_solution,
    fourier_motzkin,
    is_strict_solution,
    lp_max,
    strictly_positive_solution,
)

small_matrix = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n))
points = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.tuples(*[st.integers(0, 3)] * n).filter(any), min_size=1, max_size=6, unique=True))


@given(small_matrix)
def test_det_matches_sympy(m):
    assert det(m) == sympy.Matrix(m).det()


@given(small_matrix)
def test_rank_and_inverse(m):
    M = sympy.Matrix(m)
    assert rank(m) == M.rank()
    if M.det() != 0:
        inv = inverse(m)
        assert sympy.Matrix(inv) == M.inv()


@given(points)
def test_integer_kernel(pts):
    K = integer_kernel(pts)
    N = len(pts)
    assert len(K) == N - rank(pts)
    for u in K:
        assert all(sum(u[i] * pts[i][j] for i in range(N)) == 0 for j in range(len(pts[0])))
    if K:
        # lattice basis: the sympy nullspace vectors must be integer combinations
        B = sympy.Matrix(K).T
        for v in sympy.Matrix([list(p) for p in pts]).T.nullspace():
            v = v * sympy.ilcm(*[x.q for x in v])
            sol = B.gauss_jordan_solve(v)[0]
            free = sol.free_symbols
            sol = sol.subs({s: 0 for s in free})
            g = sympy.gcd(list(v))
            assert all(x.is_integer for x in (sol / g))


def test_kernel_examples():
    assert integer_kernel([(3, 0), (0, 3), (1, 1)]) in ([(1, 1, -3)], [(-1, -1, 3)])
    assert integer_kernel([tuple(int(i == j) for j in range(8)) for i in range(8)]) == []


@given(points, st.data())
def test_fiber_complete_against_brute_force(pts, data):
    n = len(pts[0])
    b = data.draw(st.tuples(*[st.integers(0, 6)] * n))
    top = max(b)
    brute = {p for p in product(range(top + 1), repeat=len(pts))
             if all(sum(p[i] * pts[i][j] for i in range(len(pts))) == b[j] for j in range(n))}
    got = list(enumerate_fiber(pts, b))
    assert len(got) == len(set(got))
    assert set(got) == brute
    assert in_semigroup(pts, b) == bool(brute)


def test_lp_examples():
    r = lp_max([1, 1], [[1, 2], [3, 1]], [4, 6])
    assert r.status == "optimal" and r.value == Fraction(14, 5)
    assert lp_max([1], [[-1]], [-2], [[1]], [1]).status == "infeasible"
    assert lp_max([1, 0], [[0, 1]], [1]).status == "unbounded"


rows = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=5))


@given(rows)
def test_strict_solvers_agree(R):
    n = len(R[0])
    w = strictly_positive_solution(R, n)
    w2 = fm_strictly_positive_solution(R, n)
    assert (w is None) == (w2 is None)
    if w is not None:
        assert is_strict_solution(R, w) and is_strict_solution(R, w2)


def test_fourier_motzkin_point():
    x = fourier_motzkin([((1, 1), 2), ((-1, 0), 0), ((0, -1), -1)], 2)
    assert x is not None and x[0] + x[1] <= 2 and x[0] >= 0 and x[1] >= 1
    assert fourier_motzkin([((1,), 0), ((-1,), -1)], 1) is None
