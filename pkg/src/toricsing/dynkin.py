"""ADE resolution graphs, incidence matrices and their Lipman configurations.

Vertex numbering (1-based, fixed):

* ``A_n``: the path 1-2-...-n.
* ``D_n``: vertex 2 is the trivalent node, joined to the two short arms 1 and
  n and to the long arm 3-4-...-(n-1).  With this numbering the closed-form
  configurations of the D family (index sets J, J^c) come out literally.
* ``E_n``: see ``_E_EDGES``; chosen so that the Lipman configuration equals
  the closed-form E6/E7/E8 point sets coordinate for coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .errors import BoundInsufficient, InvalidInput
from .lattice import det, enumerate_fiber, inverse, rank


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    weights: tuple[int, ...]
    edges: frozenset  # of (i, j) with 1 <= i < j <= n

    def __post_init__(self) -> None:
        if len(self.weights) != self.n:
            raise ValueError("one weight per vertex")
        if any(w < 2 for w in self.weights):
            raise ValueError("vertex weights must be >= 2")
        edges = frozenset(tuple(sorted(e)) for e in self.edges)
        for i, j in edges:
            if i == j:
                raise ValueError("self-loops are not allowed")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {(i, j)} out of range")
        object.__setattr__(self, "edges", edges)

    def neighbours(self, v: int) -> list[int]:
        return sorted([j for i, j in self.edges if i == v] + [i for i, j in self.edges if j == v])

    def is_tree(self) -> bool:
        if len(self.edges) != self.n - 1:
            return False
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for u in self.neighbours(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n


# E-type trees in the numbering that reproduces the closed-form point sets.
_E_EDGES = {
    6: ((1, 2), (2, 3), (3, 4), (4, 5), (3, 6)),
    7: ((1, 2), (2, 3), (3, 6), (6, 5), (5, 7), (3, 4)),
    8: ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 8)),
}


def ade_graph(kind: str, n: int) -> WeightedGraph:
    kind = kind.upper()
    if kind == "A":
        if n < 1:
            raise InvalidInput("A_n needs n >= 1")
        edges = [(i, i + 1) for i in range(1, n)]
    elif kind == "D":
        if n < 4:
            raise InvalidInput("D_n needs n >= 4")
        edges = [(1, 2), (2, n)] + [(i, i + 1) for i in range(2, n - 1)]
    elif kind == "E":
        if n not in _E_EDGES:
            raise InvalidInput("E_n needs n in {6, 7, 8}")
        edges = list(_E_EDGES[n])
    else:
        raise InvalidInput(f"unknown ADE kind {kind!r}")
    return WeightedGraph(n, (2,) * n, frozenset(edges))


def incidence_matrix(g: WeightedGraph) -> tuple[tuple[int, ...], ...]:
    m = [[0] * g.n for _ in range(g.n)]
    for i in range(g.n):
        m[i][i] = -g.weights[i]
    for i, j in g.edges:
        m[i - 1][j - 1] += 1
        m[j - 1][i - 1] += 1
    return tuple(tuple(r) for r in m)


def is_negative_definite(m: Sequence[Sequence[int]]) -> bool:
    """Sylvester's criterion: ``(-1)^k * minor_k > 0`` for every leading minor."""
    n = len(m)
    if any(m[i][j] != m[j][i] for i in range(n) for j in range(n)):
        return False
    for k in range(1, n + 1):
        minor = det([row[:k] for row in m[:k]])
        if (-1) ** k * minor <= 0:
            return False
    return True


# --------------------------------------------------------------------------
# configurations


@dataclass(frozen=True)
class Configuration:
    """``N`` lattice points in ``Z^n``; point ``i`` is the degree of variable ``i``."""

    points: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        pts = tuple(tuple(int(v) for v in p) for p in self.points)
        names = tuple(self.names) if self.names else tuple(f"x{i + 1}" for i in range(len(pts)))
        if len(names) != len(pts):
            raise ValueError("one name per point")
        if len(set(pts)) != len(pts):
            raise ValueError("configuration points must be distinct")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if pts and len({len(p) for p in pts}) != 1:
            raise ValueError("points of different dimension")
        for p in pts:
            if any(v < 0 for v in p):
                raise ValueError(f"negative coordinate in {p}")
            if not any(p):
                raise ValueError("the zero vector is not allowed")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "names", names)

    @property
    def N(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points[0]) if self.points else 0

    def index(self, name: str) -> int:
        return self.names.index(name)

    def point_set(self) -> frozenset:
        return frozenset(self.points)

    def grading(self) -> tuple[int, ...]:
        """Strictly positive grading every A-homogeneous ideal respects."""
        return tuple(sum(p) for p in self.points)

    def restricted(self, keep: Sequence[int]) -> "Configuration":
        return Configuration(tuple(self.points[i] for i in keep), tuple(self.names[i] for i in keep))

    def monomial(self, **exps: int) -> tuple[int, ...]:
        m = [0] * self.N
        for name, e in exps.items():
            m[self.index(name)] += e
        return tuple(m)


def lattice_membership(m: Sequence[Sequence[int]]):
    """Predicate for ``d in (-M) Z^n``, i.e. ``M C = -d`` has an integer solution."""
    inv = inverse(m)

    def member(d: Sequence[int]) -> bool:
        for row in inv:
            s = sum((c * v for c, v in zip(row, d) if v), Fraction(0))
            if s.denominator != 1:
                return False
        return True

    return member


def integral_cycle(m: Sequence[Sequence[int]], d: Sequence[int]) -> Optional[tuple[int, ...]]:
    """The integer cycle ``C`` with ``M C = -d``, or None if not integral."""
    inv = inverse(m)
    c = [-sum((a * v for a, v in zip(row, d)), Fraction(0)) for row in inv]
    if any(x.denominator != 1 for x in c):
        return None
    return tuple(int(x) for x in c)


def _minimal_lattice_points(member, n: int, bound: int) -> tuple[list[tuple[int, ...]], bool]:
    """Minimal nonzero lattice points of ``N^n`` inside ``[0, bound]^n``.

    Walks the down-closed set of vectors that dominate no lattice point, level
    by level in total degree.  The second return value reports whether that
    set reached the box boundary (in which case minimal points may be missed).
    """
    zero = (0,) * n
    free = {zero}  # vectors dominating no nonzero lattice point
    level = [zero]
    found: list[tuple[int, ...]] = []
    truncated = False
    while level:
        candidates = set()
        for v in level:
            for i in range(n):
                if v[i] == bound:
                    truncated = True
                    continue
                w = v[:i] + (v[i] + 1,) + v[i + 1:]
                candidates.add(w)
        nxt = []
        for w in sorted(candidates):
            # every predecessor must be free, else w dominates a lattice point
            if any(w[i] and (w[:i] + (w[i] - 1,) + w[i + 1:]) not in free for i in range(n)):
                continue
            if member(w):
                found.append(w)
            else:
                free.add(w)
                nxt.append(w)
        level = nxt
    return found, truncated


def _canonical_point_order(points):
    return sorted(points, key=lambda p: (-sum(p), tuple(-v for v in p)))


def default_bound(n: int) -> int:
    return 2 * (n + 1)


def lipman_configuration(m: Sequence[Sequence[int]], bound: Optional[int] = None) -> Configuration:
    """Hilbert basis of ``N^n ∩ (-M) Z^n`` for a negative definite ``M``.

    The search is repeated in the doubled box; any disagreement means the
    first box was too small and raises :class:`BoundInsufficient`.
    """
    if not is_negative_definite(m):
        raise InvalidInput("incidence matrix is not negative definite")
    n = len(m)
    bound = default_bound(n) if bound is None else bound
    if bound < 1:
        raise InvalidInput("bound must be >= 1")
    member = lattice_membership(m)
    first, _ = _minimal_lattice_points(member, n, bound)
    second, truncated = _minimal_lattice_points(member, n, 2 * bound)
    if set(first) != set(second) or truncated:
        raise BoundInsufficient(f"box bound {bound} is insufficient; try {2 * bound}")
    pts = _canonical_point_order(first)
    return Configuration(tuple(pts), tuple(f"x{i + 1}" for i in range(len(pts))))


def ade_configuration(kind: str, n: int, bound: Optional[int] = None) -> Configuration:
    return lipman_configuration(incidence_matrix(ade_graph(kind, n)), bound)


# --------------------------------------------------------------------------
# closed forms


def _e(n: int, *coeffs: tuple[int, int]) -> tuple[int, ...]:
    v = [0] * n
    for idx, c in coeffs:
        v[idx - 1] += c
    return tuple(v)


def index_sets(n: int) -> tuple[list[int], list[int]]:
    """``(J, J^c)`` for D_n."""
    if n % 2 == 0:
        return list(range(3, n, 2)), list(range(2, n - 1, 2))
    return list(range(2, n, 2)), list(range(3, n - 1, 2))


def colex_pairs(J: Sequence[int]) -> list[tuple[int, int]]:
    """Pairs ``j < k`` ordered by larger index first, then smaller."""
    return sorted(combinations(J, 2), key=lambda p: (p[1], p[0]))


def closed_form_configuration(kind: str, n: int) -> Configuration:
    kind = kind.upper()
    if kind == "D":
        if n < 4:
            raise InvalidInput("D_n needs n >= 4")
        return _d_even(n) if n % 2 == 0 else _d_odd(n)
    if kind == "E":
        if n == 6:
            pts = [_e(6, (1, 3)), _e(6, (2, 3)), _e(6, (3, 1)), _e(6, (4, 3)), _e(6, (5, 3)), _e(6, (6, 1)),
                   _e(6, (1, 1), (2, 1)), _e(6, (1, 1), (5, 1)), _e(6, (2, 1), (4, 1)), _e(6, (4, 1), (5, 1)),
                   _e(6, (2, 2), (5, 1)), _e(6, (2, 1), (5, 2)), _e(6, (1, 2), (4, 1)), _e(6, (1, 1), (4, 2))]
        elif n == 7:
            pts = [_e(7, (1, 1)), _e(7, (2, 1)), _e(7, (3, 1)), _e(7, (4, 2)), _e(7, (5, 1)), _e(7, (6, 2)),
                   _e(7, (7, 2)), _e(7, (4, 1), (6, 1)), _e(7, (4, 1), (7, 1)), _e(7, (6, 1), (7, 1))]
        elif n == 8:
            pts = [_e(8, (i, 1)) for i in range(1, 9)]
        else:
            raise InvalidInput("E_n needs n in {6, 7, 8}")
        return Configuration(tuple(pts), tuple(f"x_{i + 1}" for i in range(len(pts))))
    raise InvalidInput(f"no closed form for kind {kind!r}")


def _d_even(n: int) -> Configuration:
    J, Jc = index_sets(n)
    pts, names = [], []
    for i in range(1, n + 1):
        if i in (1, n) or i in J:
            pts.append(_e(n, (i, 2)))
        else:
            pts.append(_e(n, (i, 1)))
        names.append(f"x_{i}")
    for k, l in colex_pairs(J):
        pts.append(_e(n, (k, 1), (l, 1)))
        names.append(f"x_{{{k},{l}}}")
    for i in J:
        pts.append(_e(n, (i, 1), (1, 1), (n, 1)))
        names.append(f"y_{i}")
    return Configuration(tuple(pts), tuple(names))


def _d_odd(n: int) -> Configuration:
    J, Jc = index_sets(n)
    pts, names = [], []
    for i in range(1, n + 1):
        if i in (1, n):
            pts.append(_e(n, (i, 4)))
        elif i in J:
            pts.append(_e(n, (i, 2)))
        else:
            pts.append(_e(n, (i, 1)))
        names.append(f"x_{i}")
    for k, l in colex_pairs(J):
        pts.append(_e(n, (k, 1), (l, 1)))
        names.append(f"x_{{{k},{l}}}")
    pts.append(_e(n, (1, 1), (n, 1)))
    names.append(f"x_{{1,{n}}}")
    for i in J:
        pts.append(_e(n, (i, 1), (1, 2)))
        names.append(f"x_{{{i},1}}")
    for i in J:
        pts.append(_e(n, (i, 1), (n, 2)))
        names.append(f"x_{{{i},{n}}}")
    for i in J:
        pts.append(_e(n, (i, 1), (1, 3), (n, 1)))
        names.append(f"y_{{{i},1}}")
    for i in J:
        pts.append(_e(n, (i, 1), (1, 1), (n, 3)))
        names.append(f"y_{{{i},{n}}}")
    return Configuration(tuple(pts), tuple(names))


def dimensions(c: Configuration) -> tuple[int, int]:
    """``(dim, codim)`` of the toric variety: rank of the points and ``N - rank``."""
    d = rank(c.points)
    return d, c.N - d


def remark_dimensions(kind: str, n: int) -> tuple[int, int]:
    """Closed-form ``(dim, codim)`` for the D families."""
    if kind.upper() != "D" or n < 4:
        raise InvalidInput("closed-form dimensions exist for D_n, n >= 4")
    if n % 2 == 0:
        m = n // 2
        return 2 * m, m - 1 + comb(m - 1, 2)
    m = (n - 1) // 2
    return 2 * m + 1, 2 * m + 1 + comb(m, 2)


# --------------------------------------------------------------------------
# Hilbert-basis certificates


def decomposes(points: Sequence[Sequence[int]], d: Sequence[int], exclude: Optional[int] = None) -> bool:
    """Is ``d`` a nonnegative integer combination of ``points`` (optionally without one)?"""
    pts = [p for i, p in enumerate(points) if i != exclude]
    for _ in enumerate_fiber(pts, d):
        return True
    return False


def is_hilbert_minimal(c: Configuration) -> bool:
    """No point is a nonnegative combination of the others."""
    return all(not decomposes(c.points, p, exclude=i) for i, p in enumerate(c.points))


def generates_box(c: Configuration, m: Sequence[Sequence[int]], bound: int) -> bool:
    """Every semigroup element of ``[0, bound]^n`` decomposes over the points."""
    member = lattice_membership(m)
    n = len(m)

    def rec(prefix):
        if len(prefix) == n:
            d = tuple(prefix)
            if any(d) and member(d) and not decomposes(c.points, d):
                return False
            return True
        return all(rec(prefix + [v]) for v in range(bound + 1))

    return rec([])
