"""Groebner fans of toric ideals: facet-flip traversal and random-weight sampling.

A reduced Groebner basis ``G`` determines the closed cone of weights ``w`` with
``w . (lead - trail) >= 0`` for every element.  Toric ideals are homogeneous
for a strictly positive grading, so every cone can be explored with positive
weights and the cones cover the whole weight space.  Crossing a facet at a
point ``w`` of its relative interior in direction ``-v`` (``v`` the facet's
inner normal) lands in exactly one neighbouring cone, whose reduced basis is
the one for the matrix order ``(w, -v, lex)``.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import lcm
from typing import Callable, Optional, Sequence

from .algebra import (
    MarkedBasis,
    Monomial,
    TermOrder,
    buchberger,
    is_squarefree,
    minimal_monomials,
)
from .dynkin import Configuration
from .errors import BudgetExceeded
from .lattice import inverse
from .serialize import _vec, basis_from_dict, basis_to_dict
from .linear import lp_max, strictly_positive_solution
from .toric import ToricIdeal, toric_ideal

log = logging.getLogger(__name__)

DEFAULT_CONE_CAP = 5000
DEFAULT_WEIGHT_BOX = (1, 10**4)


@dataclass(frozen=True)
class FanResult:
    initial_ideals: tuple[tuple[Monomial, ...], ...]
    gb_per_cone: tuple[MarkedBasis, ...]
    adjacency: tuple[tuple[int, int], ...]
    complete: bool
    witnesses: tuple[tuple[int, ...], ...] = field(default=())

    def __len__(self) -> int:
        return len(self.initial_ideals)

    def neighbours(self, i: int) -> list[int]:
        return sorted({b for a, b in self.adjacency if a == i} | {a for a, b in self.adjacency if b == i})

    def to_dict(self, names: Optional[Sequence[str]] = None) -> dict:
        return {
            "complete": self.complete,
            "initial_ideals": [[list(m) for m in ideal] for ideal in self.initial_ideals],
            "adjacency": [list(e) for e in self.adjacency],
            "witnesses": [list(w) for w in self.witnesses],
            "squarefree": squarefree_initials(self),
            "bases": [basis_to_dict(b) for b in self.gb_per_cone],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FanResult":
        return cls(
            tuple(tuple(_vec(m) for m in ideal) for ideal in d["initial_ideals"]),
            tuple(basis_from_dict(b) for b in d.get("bases", ())),
            tuple(tuple(e) for e in d["adjacency"]),
            bool(d["complete"]),
            tuple(_vec(w) for w in d.get("witnesses", ())),
        )

    def dot(self, names: Optional[Sequence[str]] = None) -> str:
        """Adjacency graph of the cones in Graphviz syntax."""
        sq = set(squarefree_initials(self))
        lines = ["graph fan {"]
        for i, ideal in enumerate(self.initial_ideals):
            style = ", style=filled" if i in sq else ""
            lines.append(f'  c{i} [label="{i} ({len(ideal)})"{style}];')
        for a, b in self.adjacency:
            lines.append(f"  c{a} -- c{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _canonical(basis: MarkedBasis) -> tuple[Monomial, ...]:
    return tuple(sorted(minimal_monomials(b.lead for b in basis)))


def _normals(basis: MarkedBasis) -> list[tuple[int, ...]]:
    return [tuple(a - b for a, b in zip(g.lead, g.trail)) for g in basis]


def _integral(vec: Sequence[Fraction]) -> tuple[int, ...]:
    den = 1
    for v in vec:
        den = lcm(den, Fraction(v).denominator)
    return tuple(int(Fraction(v) * den) for v in vec)


def _parallel(u: Sequence[int], v: Sequence[int]) -> bool:
    """``u`` is a positive multiple of ``v``."""
    i = next(k for k, x in enumerate(v) if x)
    if u[i] * v[i] <= 0:
        return False
    return all(a * v[i] == b * u[i] for a, b in zip(u, v))


def facet_point(normals: Sequence[Sequence[int]], k: int) -> Optional[tuple[int, ...]]:
    """Positive integer ``w`` with ``normals[k].w = 0`` and every other (non-parallel) normal positive.

    Such a point exists iff the inequality ``normals[k].w >= 0`` defines a facet
    of the (full-dimensional) cone.  Solved exactly: ``w = 1 + y`` with
    ``y >= 0``, strict inequalities scaled to ``>= 1``.
    """
    n = len(normals[k])
    v = normals[k]
    eq = [v] + [u for j, u in enumerate(normals) if j != k and _parallel(u, v)]
    strict = [u for j, u in enumerate(normals) if j != k and not _parallel(u, v)]
    A_eq = [list(u) for u in eq]
    b_eq = [-sum(u) for u in eq]
    A_ub = [[-x for x in u] for u in strict]
    b_ub = [sum(u) - 1 for u in strict]
    res = lp_max([0] * n, A_ub, b_ub, A_eq, b_eq)
    if res.status != "optimal":
        return None
    return _integral([1 + y for y in res.x])


def interior_point(basis: MarkedBasis) -> tuple[int, ...]:
    """Positive integer weight strictly inside the Groebner cone of ``basis``."""
    w = strictly_positive_solution(_normals(basis), basis.nvars)
    if w is None:  # a reduced Groebner basis always has a nonempty open cone
        raise RuntimeError("Groebner cone has empty interior")
    return w


def facets(basis: MarkedBasis) -> list[tuple[int, tuple[int, ...]]]:
    """``(element index, relative-interior point)`` for one element per facet."""
    normals = _normals(basis)
    out = []
    seen: list[tuple[int, ...]] = []
    for k, v in enumerate(normals):
        if any(_parallel(v, u) for u in seen):
            continue
        w = facet_point(normals, k)
        if w is not None:
            seen.append(v)
            out.append((k, w))
    return out


def flip(I: ToricIdeal, basis: MarkedBasis, k: int, w: Sequence[int],
         max_steps: Optional[int] = None) -> MarkedBasis:
    """Reduced basis of the cone across the facet of ``basis`` with normal ``k`` at ``w``."""
    v = _normals(basis)[k]
    order = TermOrder.weight(tuple(w), None, tuple(-x for x in v))
    return buchberger(list(basis), order, max_steps, I.config.names)


def _flip_task(args):
    I, basis, k, w, max_steps = args
    return flip(I, basis, k, w, max_steps)


def groebner_fan(I: ToricIdeal, cone_cap: int = DEFAULT_CONE_CAP,
                 max_steps: Optional[int] = None, jobs: int = 1) -> FanResult:
    """All initial ideals of ``I`` by breadth-first facet flipping.

    With ``jobs > 1`` the flips of each cone run in worker processes; results
    are merged in facet order, so the output does not depend on ``jobs``.
    """
    if I.is_zero:
        return FanResult(((),), (I.reduced_gb,), (), True, (tuple([1] * I.config.N),))
    start = I.reduced_gb
    index = {_canonical(start): 0}
    bases = [start]
    witnesses = [interior_point(start)]
    edges: set[tuple[int, int]] = set()
    queue = deque([0])
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        while queue:
            i = queue.popleft()
            tasks = [(I, bases[i], k, w, max_steps) for k, w in facets(bases[i])]
            flipped = pool.map(_flip_task, tasks) if pool is not None else map(_flip_task, tasks)
            for nb in flipped:
                _merge(nb, i, index, bases, witnesses, edges, queue, cone_cap)
    finally:
        if pool is not None:
            pool.shutdown()
    return FanResult(tuple(_canonical(b) for b in bases), tuple(bases), tuple(sorted(edges)), True,
                     tuple(witnesses))


def _merge(nb: MarkedBasis, i: int, index: dict, bases: list, witnesses: list, edges: set,
           queue: deque, cone_cap: int) -> None:
    """Record the neighbour ``nb`` of cone ``i``, queueing it when new."""
    key = _canonical(nb)
    j = index.get(key)
    if j is None:
        if len(bases) >= cone_cap:
            raise BudgetExceeded(f"Groebner fan has more than {cone_cap} cones")
        j = index[key] = len(bases)
        bases.append(nb)
        witnesses.append(interior_point(nb))
        queue.append(j)
    if j != i:
        edges.add((min(i, j), max(i, j)))


def sample_initial_ideals(I: ToricIdeal, samples: int = 100, seed: int = 0,
                          box: tuple[int, int] = DEFAULT_WEIGHT_BOX,
                          max_steps: Optional[int] = None) -> FanResult:
    """Initial ideals reached from random integer weights (refined by lex)."""
    if samples < 1:
        raise ValueError("samples must be positive")
    if I.is_zero:
        return FanResult(((),), (I.reduced_gb,), (), False, (tuple([1] * I.config.N),))
    rng = random.Random(seed)
    lo, hi = box
    index: dict = {}
    bases: list[MarkedBasis] = []
    witnesses: list[tuple[int, ...]] = []
    current = I.reduced_gb
    for _ in range(samples):
        w = tuple(rng.randint(lo, hi) for _ in range(I.config.N))
        gb = buchberger(list(current), TermOrder.weight(w), max_steps, I.config.names)
        key = _canonical(gb)
        if key not in index:
            index[key] = len(bases)
            bases.append(gb)
            witnesses.append(w)
        current = gb
    return FanResult(tuple(_canonical(b) for b in bases), tuple(bases), (), False, tuple(witnesses))


def squarefree_initials(r: FanResult) -> list[int]:
    return [i for i, ideal in enumerate(r.initial_ideals) if is_squarefree(ideal)]


def is_connected(r: FanResult) -> bool:
    if not r.initial_ideals:
        return True
    seen = {0}
    stack = [0]
    nbrs: dict[int, set] = {}
    for a, b in r.adjacency:
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)
    while stack:
        for j in nbrs.get(stack.pop(), ()):
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(r.initial_ideals)


# ---------------------------------------------------------------------------
# numbering conventions for the A_n lex experiments


def _conventions() -> dict[str, Callable[[tuple[int, ...]], tuple]]:
    return {
        "native": None,  # Hilbert-basis enumeration order as produced
        "lex": lambda p: p,
        "revlex": lambda p: tuple(-x for x in p),
        "colex": lambda p: p[::-1],
        "rev-colex": lambda p: tuple(-x for x in p[::-1]),
        "degree-lex": lambda p: (sum(p),) + p,
        "degree-revlex": lambda p: (sum(p),) + tuple(-x for x in p),
        "degree-colex": lambda p: (sum(p),) + p[::-1],
        "rev-degree-lex": lambda p: (-sum(p),) + p,
        "rev-degree-revlex": lambda p: (-sum(p),) + tuple(-x for x in p),
        "rev-degree-colex": lambda p: (-sum(p),) + p[::-1],
    }


def cycle_coordinates(matrix: Sequence[Sequence[int]]) -> Callable[[tuple[int, ...]], tuple]:
    """Map a point ``p = -M u`` back to its cycle coefficients ``u`` (exact rationals)."""
    inv = inverse([[-v for v in row] for row in matrix])
    return lambda p: tuple(sum(r[j] * p[j] for j in range(len(p))) for r in inv)


def numbered(c: Configuration, convention: str, matrix: Optional[Sequence[Sequence[int]]] = None) -> Configuration:
    """``c`` with its points renumbered by sorting under ``convention`` (x1 = first).

    Conventions prefixed ``cycle:`` sort by the cycle coefficients of each
    point (requires the incidence ``matrix``) instead of its coordinates.
    """
    name = convention
    coords: Callable = lambda p: p
    if convention.startswith("cycle:"):
        if matrix is None:
            raise ValueError("cycle conventions need the incidence matrix")
        coords = cycle_coordinates(matrix)
        name = convention[len("cycle:"):]
    key = _conventions()[name]
    pts = list(c.points) if key is None else sorted(c.points, key=lambda p: key(tuple(coords(p))))
    return Configuration(tuple(pts), tuple(f"x{i + 1}" for i in range(len(pts))))


@dataclass(frozen=True)
class NumberingAttempt:
    convention: str
    perm: tuple[int, ...]  # 0-based variables, largest first
    gb_size: Optional[int]
    leads_squarefree: Optional[bool]
    reproduces: bool
    detail: str = ""


def _complete_perm(stated: Sequence[int], N: int) -> list[tuple[int, ...]]:
    """Ways to extend a stated variable order (1-based) to all ``N`` variables."""
    stated = [s - 1 for s in stated]
    missing = [i for i in range(N) if i not in stated]
    if not missing:
        return [tuple(stated)]
    if len(missing) == 1:
        m = missing[0]
        return [tuple(stated[:p] + [m] + stated[p:]) for p in range(len(stated) + 1)]
    # more than one absent variable: append them in all relative orders at the end
    return [tuple(stated) + q for q in permutations(missing)]


def all_conventions(with_cycles: bool = True) -> list[str]:
    plain = list(_conventions())
    if not with_cycles:
        return plain
    return plain + ["cycle:" + k for k in plain if k != "native"]


def numbering_search(c: Configuration, stated_order: Sequence[int], target: int,
                     count: str = "gb", max_steps: Optional[int] = None,
                     conventions: Optional[Sequence[str]] = None,
                     matrix: Optional[Sequence[Sequence[int]]] = None) -> list[NumberingAttempt]:
    """Try every numbering convention with the stated lex order.

    ``count="gb"`` compares ``target`` with the reduced-GB size, ``"initial"``
    with the number of minimal generators of the initial ideal (these agree
    for reduced bases).  Budget overruns are recorded, not raised.
    """
    attempts = []
    base = None
    for conv in conventions or all_conventions(matrix is not None):
        cc = numbered(c, conv, matrix)
        for perm in _complete_perm(stated_order, cc.N):
            order = TermOrder.lex(cc.N, perm)
            try:
                if base is None or base.config.points != cc.points:
                    base = toric_ideal(cc, None, max_steps)
                I = base.rebased(order, max_steps)
            except BudgetExceeded as e:
                attempts.append(NumberingAttempt(conv, perm, None, None, False, str(e)))
                continue
            leads = I.initial_ideal()
            size = len(I.reduced_gb) if count == "gb" else len(minimal_monomials(leads))
            sq = is_squarefree(leads)
            attempts.append(NumberingAttempt(conv, perm, size, sq, size == target and sq))
    return attempts
