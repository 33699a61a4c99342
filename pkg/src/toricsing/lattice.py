"""Exact integer linear algebra and fiber enumeration for point configurations."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Sequence

from .errors import BudgetExceeded


def det(matrix: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def inverse(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(matrix)
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        m[c] = [v / pv for v in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def columns(points: Sequence[Sequence[int]]) -> list[list[int]]:
    """Point list (one per variable) -> n x N matrix."""
    if not points:
        return []
    return [[p[j] for p in points] for j in range(len(points[0]))]


def integer_kernel(points: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Lattice basis of ``{u in Z^N : sum_i u_i a_i = 0}``.

    Column-style Hermite reduction of the n x N matrix while tracking the
    unimodular transform; the trailing columns of the transform span the kernel.
    A greedy pairwise size reduction keeps entries small afterwards.
    """
    N = len(points)
    if N == 0:
        return []
    A = columns(points)
    n = len(A)
    A = [row[:] for row in A]
    U = [[int(i == j) for j in range(N)] for i in range(N)]  # columns are transforms

    def col_op(dst: int, src: int, f: int) -> None:  # col_dst -= f * col_src
        if f == 0:
            return
        for row in A:
            row[dst] -= f * row[src]
        for row in U:
            row[dst] -= f * row[src]

    def col_swap(i: int, j: int) -> None:
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in U:
            row[i], row[j] = row[j], row[i]

    k = 0
    for r in range(n):
        if k >= N:
            break
        while True:
            nz = [c for c in range(k, N) if A[r][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda c: abs(A[r][c]))
            if piv != k:
                col_swap(piv, k)
            done = True
            for c in range(k + 1, N):
                if A[r][c] != 0:
                    col_op(c, k, A[r][c] // A[r][k])
                    if A[r][c] != 0:
                        done = False
            if done:
                break
        if any(A[r][c] != 0 for c in range(k, N)):
            k += 1
    basis = [tuple(U[i][c] for i in range(N)) for c in range(k, N)]
    return size_reduce(basis)


def _norm2(v):
    return sum(x * x for x in v)


def size_reduce(basis: list[tuple[int, ...]], rounds: int = 50) -> list[tuple[int, ...]]:
    """Greedy pairwise reduction; the span (as a lattice) is unchanged."""
    basis = [list(v) for v in basis]
    for _ in range(rounds):
        changed = False
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i == j:
                    continue
                vj = basis[j]
                nj = _norm2(vj)
                if nj == 0:
                    continue
                dot = sum(x * y for x, y in zip(basis[i], vj))
                f = (2 * dot + nj) // (2 * nj)  # round(dot / nj)
                if f:
                    cand = [x - f * y for x, y in zip(basis[i], vj)]
                    if _norm2(cand) < _norm2(basis[i]):
                        basis[i] = cand
                        changed = True
        if not changed:
            break
    out = []
    for v in basis:
        first = next((x for x in v if x), 0)
        out.append(tuple(-x for x in v) if first < 0 else tuple(v))
    return sorted(out, key=lambda v: (_norm2(v), v))


def enumerate_fiber(points: Sequence[Sequence[int]], b: Sequence[int],
                    limit: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """All ``p in N^N`` with ``sum p_i a_i = b`` for nonnegative points ``a_i``.

    Depth-first over the variables in order, largest multiplicity first, with a
    suffix-support feasibility prune.  Raises :class:`BudgetExceeded` when more
    than ``limit`` search nodes are visited.
    """
    N = len(points)
    n = len(b)
    b = list(b)
    if any(v < 0 for v in b):
        return
    pts = [tuple(p) for p in points]
    # coordinates coverable by variables i..N-1
    suffix = [0] * (N + 1)
    for i in range(N - 1, -1, -1):
        mask = 0
        for j, v in enumerate(pts[i]):
            if v:
                mask |= 1 << j
        suffix[i] = suffix[i + 1] | mask
    visited = [0]
    cur = [0] * N

    def rec(i: int, rem: list[int]):
        visited[0] += 1
        if limit is not None and visited[0] > limit:
            raise BudgetExceeded(f"fiber search exceeded {limit} nodes")
        rmask = 0
        for j in range(n):
            if rem[j]:
                rmask |= 1 << j
        if rmask == 0:
            yield tuple(cur)
            return
        if i == N or rmask & ~suffix[i]:
            return
        a = pts[i]
        top = None
        for j in range(n):
            if a[j]:
                q = rem[j] // a[j]
                top = q if top is None or q < top else top
        if top is None:
            top = 0
        for k in range(top, -1, -1):
            cur[i] = k
            nxt = [r - k * v for r, v in zip(rem, a)] if k else rem
            yield from rec(i + 1, nxt)
        cur[i] = 0

    yield from rec(0, b)


def in_semigroup(points: Sequence[Sequence[int]], b: Sequence[int], limit: Optional[int] = None) -> bool:
    for _ in enumerate_fiber(points, b, limit):
        return True
    return False


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else tuple(v)
