"""Toric ideals of configurations: A-degrees, lattice bases and saturation."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterator, Optional, Sequence

from .algebra import (
    Binomial,
    MarkedBasis,
    Monomial,
    TermOrder,
    buchberger,
    divides,
    initial_ideal,
    make_binomial,
    reduce,
)
from .dynkin import Configuration
from .errors import BudgetExceeded, DimensionError
from .lattice import enumerate_fiber, integer_kernel, rank

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ToricIdeal:
    config: Configuration
    reduced_gb: MarkedBasis
    order: TermOrder

    @property
    def is_zero(self) -> bool:
        return len(self.reduced_gb) == 0

    def initial_ideal(self) -> list[Monomial]:
        return initial_ideal(self.reduced_gb)

    def rebased(self, order: TermOrder, max_steps: Optional[int] = None) -> "ToricIdeal":
        if order == self.order:
            return self
        gb = buchberger(list(self.reduced_gb), order, max_steps, self.config.names)
        return ToricIdeal(self.config, gb, order)


def adegree(c: Configuration, m: Sequence[int]) -> tuple[int, ...]:
    """``sum_i m_i a_i``."""
    if len(m) != c.N:
        raise DimensionError(f"monomial of length {len(m)} for {c.N} variables")
    out = [0] * c.n
    for e, p in zip(m, c.points):
        if e:
            for j, v in enumerate(p):
                out[j] += e * v
    return tuple(out)


def is_homogeneous(c: Configuration, b: Binomial) -> bool:
    return adegree(c, b.lead) == adegree(c, b.trail)


def lattice_kernel(c: Configuration) -> list[tuple[int, ...]]:
    return integer_kernel(c.points)


def lattice_basis_ideal(c: Configuration) -> list[Binomial]:
    """``x^{u+} - x^{u-}`` for each kernel basis vector ``u``."""
    gens = []
    for u in lattice_kernel(c):
        plus = tuple(max(v, 0) for v in u)
        minus = tuple(max(-v, 0) for v in u)
        gens.append(Binomial(plus, minus, marked=False))
    return gens


def saturation_order(c: Configuration, i: int) -> TermOrder:
    """Graded reverse lex with ``x_i`` cheapest, graded by ``c.grading()``."""
    perm = [j for j in range(c.N) if j != i] + [i]
    return TermOrder.degrevlex(c.N, perm, grading=c.grading())


def saturate_variable(I: MarkedBasis, i: int, order: TermOrder, max_steps: Optional[int] = None) -> tuple[MarkedBasis, bool]:
    """Generators of ``I : x_i^oo`` and whether anything changed.

    ``order`` must be a reverse lex order, refining a positive grading for which
    ``I`` is homogeneous, with ``x_i`` the smallest variable: then ``x_i`` divides
    a Groebner basis element's lead exactly when it divides both terms, and
    stripping those powers yields a Groebner basis of the saturation.
    """
    gb = buchberger(list(I), order, max_steps, I.names)
    changed = False
    out = []
    for b in gb:
        k = min(b.lead[i], b.trail[i])
        if k:
            changed = True
            lead = b.lead[:i] + (b.lead[i] - k,) + b.lead[i + 1:]
            trail = b.trail[:i] + (b.trail[i] - k,) + b.trail[i + 1:]
            nb = make_binomial(lead, trail, order)
            if nb is not None:
                out.append(nb)
        else:
            out.append(b)
    if not changed:
        return gb, False
    return buchberger(out, order, max_steps, I.names), True


def _independent_subset(c: Configuration) -> list[int]:
    """Greedy maximal linearly independent set of points, small points first."""
    chosen: list[int] = []
    for i in sorted(range(c.N), key=lambda i: (sum(c.points[i]), i)):
        if rank([c.points[j] for j in chosen] + [c.points[i]]) > len(chosen):
            chosen.append(i)
    return chosen


def _span_binomial(c: Configuration, j: int, sigma: Sequence[int]) -> Optional[Binomial]:
    """``x_j^k x^{g-} - x^{g+}`` with ``k a_j = sum_{i in sigma} g_i a_i``, or None.

    None when ``a_j`` is outside the rational span of the ``sigma`` points.
    """
    basis_idx = _independent_within(c, sigma)
    coeffs = _solve_in_span([c.points[i] for i in basis_idx], c.points[j])
    if coeffs is None:
        return None
    k = 1
    for q in coeffs:
        k = k * q.denominator // gcd(k, q.denominator)
    lead = [0] * c.N
    trail = [0] * c.N
    lead[j] = k
    for i, q in zip(basis_idx, coeffs):
        v = int(q * k)
        if v > 0:
            trail[i] += v
        elif v < 0:
            lead[i] += -v
    return Binomial(tuple(lead), tuple(trail), marked=False)


def _independent_within(c: Configuration, idx: Sequence[int]) -> list[int]:
    chosen: list[int] = []
    for i in sorted(idx, key=lambda i: (sum(c.points[i]), i)):
        if rank([c.points[j] for j in chosen] + [c.points[i]]) > len(chosen):
            chosen.append(i)
    return chosen


def _span_binomials(c: Configuration, sigma: Sequence[int]) -> list[Binomial]:
    """One :func:`_span_binomial` for every variable outside ``sigma``."""
    return [_span_binomial(c, j, sigma) for j in range(c.N) if j not in sigma]


def _solve_in_span(basis: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[list[Fraction]]:
    """Coefficients expressing ``target`` over linearly independent ``basis``; None if outside the span."""
    r = len(basis)
    n = len(target)
    M = [[Fraction(basis[i][j]) for i in range(r)] + [Fraction(target[j])] for j in range(n)]
    row = 0
    pivots = []
    for col in range(r):
        piv = next(i for i in range(row, n) if M[i][col] != 0)
        M[row], M[piv] = M[piv], M[row]
        pv = M[row][col]
        M[row] = [v / pv for v in M[row]]
        for i in range(n):
            if i != row and M[i][col] != 0:
                f = M[i][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[row])]
        pivots.append(col)
        row += 1
    if any(M[i][r] != 0 for i in range(row, n)):
        return None
    return [M[i][r] for i in range(r)]


def low_degree_relations(c: Configuration, fiber_limit: int = 10**5) -> list[Binomial]:
    """Binomials joining each monomial in the fibres of ``a_i`` and ``a_i + a_j`` to ``x_i x_j``.

    These are cheap members of ``I_A``; seeding the saturation with them keeps
    intermediate Groebner bases small.
    """
    out = []
    for i in range(c.N):
        for j in range(i - 1, c.N):
            m = [0] * c.N
            if j < i:  # the single point a_i
                m[i] = 1
                deg = c.points[i]
            else:
                m[i] += 1
                m[j] += 1
                deg = tuple(x + y for x, y in zip(c.points[i], c.points[j]))
            base = tuple(m)
            for p in enumerate_fiber(c.points, deg, fiber_limit):
                if p != base:
                    out.append(Binomial(base, p, marked=False))
    return out


def toric_ideal(c: Configuration, order: Optional[TermOrder] = None, max_steps: Optional[int] = None,
                method: str = "certify") -> ToricIdeal:
    """Reduced Groebner basis of ``I_A``, the saturation of a lattice-basis ideal.

    All methods start from binomials of ``I_A`` that contain a lattice basis, so
    the answer is the saturation of their ideal ``J`` by the product of all
    variables.  Saturating by ``x_j`` preserves saturation with respect to
    variables handled earlier, so one pass over the variables suffices.

    ``"full"`` saturates the lattice-basis ideal by every variable in turn.

    ``"span"`` also adds the relations inside the fibres of single points and
    of pairs of points, and one binomial
    ``x_j^k x^a - x^b`` per variable, where ``a`` and ``b`` are supported on a
    set ``sigma`` of linearly independent points.  It then saturates by the
    ``sigma`` variables only.  That suffices because ``x_j g`` in the ideal then
    forces ``x^b g`` into it, and hence ``g``.

    ``"certify"`` (default) uses the same generators but works in the target
    order.  A variable that divides no leading term of a Groebner basis is a
    nonzerodivisor.  Any other ``x_j`` is a nonzerodivisor once some
    ``x_j^k x^a - x^b`` over already-certified variables reduces to zero.
    Explicit saturation happens only when neither test applies.
    """
    order = order or TermOrder.degrevlex(c.N)
    if order.nvars != c.N:
        raise DimensionError("order and configuration disagree on the variable count")
    gens = lattice_basis_ideal(c)
    if not gens:
        return ToricIdeal(c, MarkedBasis((), c.names, reduced=True, order=order), order)
    if method == "full":
        targets = list(range(c.N))
    elif method in ("span", "certify"):
        sigma = _independent_subset(c)
        gens = gens + low_degree_relations(c) + _span_binomials(c, sigma)
        targets = sorted(sigma, reverse=True)
    else:
        raise ValueError(f"unknown method {method!r}")
    if method == "certify":
        return ToricIdeal(c, _certified_saturation(c, gens, order, max_steps), order)
    current = MarkedBasis(tuple(gens), c.names)
    for i in targets:
        if not any(g.lead[i] or g.trail[i] for g in current):
            continue  # x_i never occurs, so it is a nonzerodivisor
        current, changed = saturate_variable(current, i, saturation_order(c, i), max_steps)
        if changed:
            log.debug("saturation by %s changed the ideal", c.names[i])
    gb = buchberger(list(current), order, max_steps, c.names)
    return ToricIdeal(c, gb, order)


def _certified_saturation(c: Configuration, gens: Sequence[Binomial], order: TermOrder,
                          max_steps: Optional[int]) -> MarkedBasis:
    """Saturate ``<gens>`` by all variables, certifying most of them cheaply.

    Invariant: every variable in ``verified`` is a nonzerodivisor modulo the
    current ideal.  Saturation by another variable preserves that, so the set
    only ever grows.
    """
    gb = buchberger(list(gens), order, max_steps, c.names)
    verified = [i for i in range(c.N) if not any(b.lead[i] for b in gb)]
    pending = [i for i in range(c.N) if i not in verified]
    while pending:
        progress = False
        for j in list(pending):
            b = _span_binomial(c, j, verified) if verified else None
            if b is not None and reduce(b, gb, order, max_steps) is None:
                verified.append(j)
                pending.remove(j)
                progress = True
        if progress:
            continue
        j = pending.pop(0)
        log.debug("explicit saturation by %s", c.names[j])
        sat, changed = saturate_variable(gb, j, saturation_order(c, j), max_steps)
        if changed:
            gb = buchberger(list(sat), order, max_steps, c.names)
        verified.append(j)
    return gb


def ideal_from_generators(c: Configuration, gens: Sequence[Binomial], order: TermOrder,
                          max_steps: Optional[int] = None) -> ToricIdeal:
    """The ideal generated by ``gens`` packaged like a toric ideal (not necessarily prime)."""
    return ToricIdeal(c, buchberger(list(gens), order, max_steps, c.names), order)


def ideal_membership(b: Binomial, I: ToricIdeal) -> bool:
    return reduce(b, I.reduced_gb, I.order) is None


def ideals_equal(I: ToricIdeal, J: ToricIdeal) -> bool:
    """Mutual membership of the reduced Groebner bases."""
    if I.config.N != J.config.N:
        raise DimensionError("ideals over different rings")
    return all(ideal_membership(b, J) for b in I.reduced_gb) and all(ideal_membership(b, I) for b in J.reduced_gb)


def monomials_up_to(N: int, D: int) -> Iterator[Monomial]:
    """All monomials in ``N`` variables of total degree ``<= D``, graded lex order."""
    for d in range(D + 1):
        yield from _monomials_of_degree(N, d)


def _monomials_of_degree(N: int, d: int) -> Iterator[Monomial]:
    cur = [0] * N

    def rec(i: int, left: int):
        if i == N - 1:
            cur[i] = left
            yield tuple(cur)
            cur[i] = 0
            return
        for k in range(left, -1, -1):
            cur[i] = k
            yield from rec(i + 1, left - k)
        cur[i] = 0

    if N == 0:
        if d == 0:
            yield ()
        return
    yield from rec(0, d)


def standard_monomials_up_to(I: ToricIdeal, D: int, limit: Optional[int] = None) -> list[Monomial]:
    """Monomials of degree ``<= D`` outside ``in(I)``, in graded lex order."""
    if D < 0:
        raise ValueError("D must be >= 0")
    return [m for m, _ in _standard_levels(I.config.N, D, initial_ideal(I.reduced_gb), limit)]


def _standard_levels(N: int, D: int, leads: Sequence[Monomial], limit: Optional[int] = None,
                     points: Optional[Sequence[Sequence[int]]] = None) -> Iterator[tuple[Monomial, Optional[tuple]]]:
    """Standard monomials degree by degree, each level in graded lex order.

    Degree ``d`` is built from degree ``d - 1``: every monomial is ``m * x_i``
    with ``i`` its smallest variable, so it is produced exactly once.  Divisors
    of standard monomials are standard, hence ``m * x_i`` is standard iff no
    lead involving ``x_i`` divides it.  With ``points`` the A-degree is carried
    along incrementally.
    """
    by_var = [[l for l in leads if l[i]] for i in range(N)]
    zero = tuple([0] * len(points[0])) if points else None
    level = [((0,) * N, N, zero)]  # (monomial, smallest variable, A-degree)
    count = 0
    for d in range(D + 1):
        if d:
            nxt = []
            for m, low, deg in level:
                for i in range(min(low + 1, N)):
                    cand = list(m)
                    cand[i] += 1
                    if any(divides(l, cand) for l in by_var[i]):
                        continue
                    ndeg = tuple(a + b for a, b in zip(deg, points[i])) if points else None
                    nxt.append((tuple(cand), i, ndeg))
            nxt.sort(key=lambda e: e[0], reverse=True)
            level = nxt
        count += len(level)
        if limit is not None and count > limit:
            raise BudgetExceeded(f"more than {limit} standard monomials")
        for m, _, deg in level:
            yield m, deg
        if not level:
            return


def lemma11_witness(I: ToricIdeal, D: int, basis: Optional[MarkedBasis] = None,
                    limit: Optional[int] = None) -> Optional[tuple[Monomial, Monomial]]:
    """Two distinct standard monomials of degree ``<= D`` with the same A-degree.

    ``basis`` overrides the Groebner basis whose initial ideal defines the
    standard monomials (e.g. a candidate set under test).
    """
    if D < 1:
        raise ValueError("D must be >= 1")
    target = I if basis is None else ToricIdeal(I.config, basis, I.order)
    seen: dict[tuple[int, ...], Monomial] = {}
    leads = initial_ideal(target.reduced_gb)
    for m, deg in _standard_levels(I.config.N, D, leads, limit, I.config.points):
        other = seen.get(deg)
        if other is not None:
            return other, m
        seen[deg] = m
    return None


def lemma11_check(I: ToricIdeal, D: int, basis: Optional[MarkedBasis] = None,
                  limit: Optional[int] = None) -> bool:
    """Is the A-degree map injective on standard monomials of degree ``<= D``?"""
    return lemma11_witness(I, D, basis, limit) is None


def max_degree(basis: MarkedBasis) -> int:
    return max((max(sum(b.lead), sum(b.trail)) for b in basis), default=0)


def coprime_terms(basis: MarkedBasis) -> bool:
    return all(not any(x and y for x, y in zip(b.lead, b.trail)) for b in basis)


def pairs_of(items: Sequence) -> Iterator:
    return combinations(items, 2)
