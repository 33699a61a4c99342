"""Monomials, term orders and a Buchberger engine for pure-difference binomials.

Monomials are plain tuples of nonnegative ints.  A binomial ``x^a - x^b`` is
stored as its two exponent tuples with the lead first; every coefficient in
this setting is +1/-1 so no coefficient bookkeeping is needed.
"""

from __future__ import annotations

import heapq
import os
from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm as _ilcm
from typing import Iterable, Optional, Sequence

from .errors import BudgetExceeded, DimensionError, IncoherentMarking
from .linear import strictly_positive_solution

Monomial = tuple  # tuple[int, ...]

DEFAULT_MAX_STEPS = 10**7


def default_max_steps() -> int:
    env = os.environ.get("TORICSING_BUDGET_STEPS")
    return int(env) if env else DEFAULT_MAX_STEPS


# --------------------------------------------------------------------------
# monomials


def monomial(exps: Iterable[int]) -> Monomial:
    m = tuple(int(e) for e in exps)
    if any(e < 0 for e in m):
        raise ValueError(f"negative exponent in {m}")
    return m


def one(n: int) -> Monomial:
    return (0,) * n


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x + y for x, y in zip(a, b)])


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; caller guarantees ``b | a``."""
    return tuple([x - y for x, y in zip(a, b)])


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x if x > y else y for x, y in zip(a, b)])


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x if x < y else y for x, y in zip(a, b)])


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def support_mask(m: Monomial) -> int:
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


def is_squarefree_monomial(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def format_monomial(m: Monomial, names: Optional[Sequence[str]] = None) -> str:
    names = names or [f"x{i + 1}" for i in range(len(m))]
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# --------------------------------------------------------------------------
# term orders

ORDER_KINDS = ("lex", "grlex", "degrevlex", "weight")


def _integer_rows(weights) -> tuple[tuple[int, ...], ...]:
    rows = []
    for row in weights:
        fr = [Fraction(v) for v in row]
        den = 1
        for v in fr:
            den = _ilcm(den, v.denominator)
        rows.append(tuple(int(v * den) for v in fr))
    return tuple(rows)


@dataclass(frozen=True)
class TermOrder:
    """A monomial order on ``len(perm)`` variables.

    ``perm`` lists variable indices from largest to smallest.  ``weights`` is a
    sequence of rows compared before the final tie-break: for ``weight`` they
    form a matrix order refined by lex on ``perm``; for ``grlex``/``degrevlex``
    the single optional row replaces the standard total degree.
    """

    kind: str
    perm: tuple[int, ...]
    weights: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        perm = tuple(int(p) for p in self.perm)
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError(f"perm {perm} is not a permutation of 0..{n - 1}")
        rows = _integer_rows(self.weights)
        if any(len(r) != n for r in rows):
            raise DimensionError("weight row length differs from variable count")
        if self.kind == "weight" and not rows:
            raise ValueError("weight order needs at least one weight row")
        if self.kind in ("grlex", "degrevlex") and len(rows) > 1:
            raise ValueError("graded orders take a single grading row")
        if self.kind in ("grlex", "degrevlex") and rows and any(v <= 0 for v in rows[0]):
            raise ValueError("grading must be strictly positive")
        # 1 must be the minimum: first nonzero entry of every column positive
        for i in range(n):
            for r in rows:
                if r[i] != 0:
                    if r[i] < 0:
                        raise ValueError(f"variable {i} is smaller than 1 under {rows}")
                    break
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "weights", rows)

    # constructors ----------------------------------------------------------
    @classmethod
    def lex(cls, n: int, perm: Optional[Sequence[int]] = None) -> "TermOrder":
        return cls("lex", tuple(perm) if perm is not None else tuple(range(n)))

    @classmethod
    def grlex(cls, n: int, perm: Optional[Sequence[int]] = None, grading=None) -> "TermOrder":
        return cls("grlex", tuple(perm) if perm is not None else tuple(range(n)),
                   (tuple(grading),) if grading is not None else ())

    @classmethod
    def degrevlex(cls, n: int, perm: Optional[Sequence[int]] = None, grading=None) -> "TermOrder":
        return cls("degrevlex", tuple(perm) if perm is not None else tuple(range(n)),
                   (tuple(grading),) if grading is not None else ())

    @classmethod
    def weight(cls, w, perm: Optional[Sequence[int]] = None, *more_rows) -> "TermOrder":
        n = len(w)
        return cls("weight", tuple(perm) if perm is not None else tuple(range(n)),
                   (tuple(w),) + tuple(tuple(r) for r in more_rows))

    @property
    def nvars(self) -> int:
        return len(self.perm)

    # comparison ------------------------------------------------------------
    def key(self, m: Monomial) -> tuple:
        """Sort key: ``a < b`` in this order iff ``key(a) < key(b)``."""
        kind = self.kind
        perm = self.perm
        if kind == "lex":
            return tuple([m[i] for i in perm])
        if kind == "weight":
            head = tuple([sum(w * e for w, e in zip(r, m)) for r in self.weights])
            return head + tuple([m[i] for i in perm])
        deg = sum(w * e for w, e in zip(self.weights[0], m)) if self.weights else sum(m)
        if kind == "grlex":
            return (deg,) + tuple([m[i] for i in perm])
        return (deg,) + tuple([-m[i] for i in reversed(perm)])

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != self.nvars or len(b) != self.nvars:
            raise DimensionError(f"monomial length {len(a)}/{len(b)} vs order on {self.nvars} variables")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def describe(self) -> str:
        body = ",".join(str(p + 1) for p in self.perm)
        if self.kind == "weight":
            ws = ";".join(",".join(str(v) for v in r) for r in self.weights)
            return f"weight:{ws}|{body}"
        return f"{self.kind}:{body}"


def compare(order: TermOrder, a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
    return order.compare(a, b)


_DEGREVLEX_CACHE: dict[int, TermOrder] = {}


def _canonical_order(n: int) -> TermOrder:
    o = _DEGREVLEX_CACHE.get(n)
    if o is None:
        o = _DEGREVLEX_CACHE[n] = TermOrder.degrevlex(n)
    return o


# --------------------------------------------------------------------------
# binomials


@dataclass(frozen=True)
class Binomial:
    """``x^lead - x^trail``.

    Unmarked binomials are normalised so that ``lead`` is the degrevlex-larger
    monomial (identity variable order); marked ones keep the given lead.
    """

    lead: Monomial
    trail: Monomial
    marked: bool = True

    def __post_init__(self) -> None:
        lead, trail = monomial(self.lead), monomial(self.trail)
        if len(lead) != len(trail):
            raise DimensionError("lead and trail differ in length")
        if lead == trail:
            raise ValueError("lead equals trail: the zero binomial is not a Binomial")
        if not self.marked:
            o = _canonical_order(len(lead))
            if o.key(lead) < o.key(trail):
                lead, trail = trail, lead
        object.__setattr__(self, "lead", lead)
        object.__setattr__(self, "trail", trail)

    @property
    def nvars(self) -> int:
        return len(self.lead)

    def exponent(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.lead, self.trail))

    def swapped(self) -> "Binomial":
        return Binomial(self.trail, self.lead, True)

    def oriented(self, order: TermOrder) -> "Binomial":
        if order.key(self.lead) >= order.key(self.trail):
            return Binomial(self.lead, self.trail, True)
        return Binomial(self.trail, self.lead, True)

    def unordered(self) -> frozenset:
        return frozenset((self.lead, self.trail))

    def same_up_to_sign(self, other: "Binomial") -> bool:
        return self.unordered() == other.unordered()

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        return f"{format_monomial(self.lead, names)} - {format_monomial(self.trail, names)}"


def make_binomial(lead: Monomial, trail: Monomial, order: Optional[TermOrder] = None) -> Optional[Binomial]:
    """Binomial oriented by ``order`` (canonical when None), or None if zero."""
    if lead == trail:
        return None
    if order is None:
        return Binomial(lead, trail, marked=False)
    if order.key(lead) < order.key(trail):
        lead, trail = trail, lead
    return Binomial(lead, trail, True)


@dataclass(frozen=True)
class MarkedBasis:
    elements: tuple[Binomial, ...]
    names: Optional[tuple[str, ...]] = None
    reduced: bool = False
    order: Optional[TermOrder] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
        lens = {b.nvars for b in els}
        if self.names is not None:
            lens.add(len(self.names))
        if len(lens) > 1:
            raise DimensionError("basis elements over different rings")
        if self.reduced and _has_dividing_pair([b.lead for b in els]):
            raise ValueError("reduced basis with a lead dividing another lead")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def nvars(self) -> Optional[int]:
        if self.names is not None:
            return len(self.names)
        return self.elements[0].nvars if self.elements else None

    def leads(self) -> list[Monomial]:
        return [b.lead for b in self.elements]

    def as_set(self) -> frozenset:
        return frozenset((b.lead, b.trail) for b in self.elements)

    def format(self) -> list[str]:
        return [b.format(self.names) for b in self.elements]


def _has_dividing_pair(mons: Sequence[Monomial]) -> bool:
    """Does some monomial divide another one (equal entries count)?"""
    entries = sorted(((sum(m), support_mask(m), m) for m in mons), key=lambda e: e[0])
    for j, (dj, mj, b) in enumerate(entries):
        for di, mi, a in entries[:j]:
            if mi & ~mj == 0 and all(x <= y for x, y in zip(a, b)):
                return True
    return False


# --------------------------------------------------------------------------
# reduction machinery


class _Steps:
    __slots__ = ("count", "limit", "error")

    def __init__(self, limit: int, error: type[Exception]) -> None:
        self.count = 0
        self.limit = limit
        self.error = error

    def tick(self) -> None:
        self.count += 1
        if self.count > self.limit:
            raise self.error(f"step budget of {self.limit} exceeded")


# Packed monomials: exponent i occupies bits [32 i, 32 i + 32) of one integer,
# with the top bit of every field kept free as a guard.  Then ``a | b`` exactly
# when subtracting ``a`` from ``b``-with-guards leaves every guard bit set.
_FIELD = 32
_MAX_EXPONENT = (1 << (_FIELD - 1)) - 1
_guards: dict[int, int] = {}


def _guard(n: int) -> int:
    g = _guards.get(n)
    if g is None:
        g = _guards[n] = int.from_bytes(array("I", [1 << (_FIELD - 1)] * n).tobytes(), "little")
    return g


def _pack(m: Monomial) -> int:
    try:
        return int.from_bytes(array("I", m).tobytes(), "little")
    except OverflowError:
        raise BudgetExceeded("exponent exceeds the packed-monomial range") from None


def _unpack(p: int, n: int) -> Monomial:
    return tuple(array("I", p.to_bytes(4 * n, "little")))


def _packed_divides(a: int, b: int, guard: int) -> bool:
    return ((b | guard) - a) & guard == guard


def _packed_lcm(a: int, b: int, guard: int) -> int:
    """Fieldwise maximum of two packed monomials."""
    ge = (((a | guard) - b) & guard) >> (_FIELD - 1)  # 1 in fields where a >= b
    sel = (ge << _FIELD) - ge  # all-ones in those fields
    return (a & sel) | (b & ~sel)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class _Reducer:
    """Marked leads with packed exponents, bucketed by the first variable of each lead.

    A lead can only divide ``m`` if its first variable occurs in ``m``, so a
    reduction only scans the buckets of variables in the support of ``m``.
    """

    __slots__ = ("entries", "buckets", "n", "guard")

    def __init__(self, n: Optional[int] = None) -> None:
        # (lead mask, packed lead, packed trail, trail mask, tag)
        self.entries: list[tuple[int, int, int, int, int]] = []
        self.buckets: dict[int, list[tuple[int, int, int, int, int]]] = {}
        self.n = n
        self.guard = _guard(n) if n is not None else 0

    def _file(self, e: tuple) -> None:
        mask = e[0]
        self.buckets.setdefault((mask & -mask).bit_length() - 1, []).append(e)

    def add(self, lead: Monomial, trail: Monomial, tag: int = -1) -> None:
        if self.n is None:
            self.n = len(lead)
            self.guard = _guard(self.n)
        if max(lead, default=0) > _MAX_EXPONENT or max(trail, default=0) > _MAX_EXPONENT:
            raise BudgetExceeded("exponent exceeds the packed-monomial range")
        e = (support_mask(lead), _pack(lead), _pack(trail), support_mask(trail), tag)
        self.entries.append(e)
        self._file(e)

    def retain(self, tags: set) -> None:
        """Drop entries whose tag is not in ``tags`` (superseded leads)."""
        self.entries = [e for e in self.entries if e[4] in tags]
        self.buckets = {}
        for e in self.entries:
            self._file(e)

    def normal_form(self, m: Monomial, steps: _Steps, skip: Optional[int] = None) -> Monomial:
        if not self.entries:
            return tuple(m)
        guard = self.guard
        if max(m, default=0) > _MAX_EXPONENT:
            raise BudgetExceeded("exponent exceeds the packed-monomial range")
        mp = _pack(m)
        # superset of the support: used to pick buckets and reject candidates
        mmask = support_mask(m)
        buckets = self.buckets
        changed = False
        reduced = True
        while reduced:
            reduced = False
            for v in _bits(mmask):
                bucket = buckets.get(v)
                if bucket is None:
                    continue
                for mask, lp, tp, tmask, tag in bucket:
                    if mask & ~mmask == 0 and ((mp | guard) - lp) & guard == guard and tag != skip:
                        mp = mp - lp + tp
                        mmask |= tmask
                        changed = reduced = True
                        steps.tick()
                        break
                if reduced:
                    break
        if not changed:
            return tuple(m)
        out = _unpack(mp, self.n)
        if max(out, default=0) > _MAX_EXPONENT:
            raise BudgetExceeded("exponent exceeds the packed-monomial range")
        return out


def _reducer_for(basis: Iterable[Binomial]) -> _Reducer:
    r = _Reducer()
    for b in basis:
        r.add(b.lead, b.trail)
    return r


def monomial_normal_form(m: Monomial, basis: MarkedBasis, max_steps: Optional[int] = None) -> Monomial:
    steps = _Steps(max_steps or default_max_steps(), IncoherentMarking)
    return _reducer_for(basis).normal_form(tuple(m), steps)


def spair(f: Binomial, g: Binomial, order: Optional[TermOrder] = None) -> Optional[Binomial]:
    """S-polynomial of two marked binomials; None when it vanishes.

    With ``order`` the result is oriented by it; otherwise by the canonical
    degrevlex normalisation.
    """
    if f.nvars != g.nvars:
        raise DimensionError("S-pair of binomials over different rings")
    L = mono_lcm(f.lead, g.lead)
    a = mono_mul(mono_div(L, f.lead), f.trail)
    b = mono_mul(mono_div(L, g.lead), g.trail)
    return make_binomial(a, b, order)


def reduce(f: Binomial, basis: MarkedBasis, order: Optional[TermOrder] = None,
           max_steps: Optional[int] = None) -> Optional[Binomial]:
    """Normal form of ``f`` modulo the marked ``basis``.

    Both monomials are rewritten lead -> trail until irreducible.  A marking no
    order selects can cycle; that surfaces as :class:`IncoherentMarking` once
    ``max_steps`` rewrites have been spent.
    """
    if basis.nvars is not None and f.nvars != basis.nvars:
        raise DimensionError("binomial and basis over different rings")
    steps = _Steps(max_steps or default_max_steps(), IncoherentMarking)
    red = _reducer_for(basis)
    a = red.normal_form(f.lead, steps)
    b = red.normal_form(f.trail, steps)
    return make_binomial(a, b, order)


# --------------------------------------------------------------------------
# Buchberger


def _gm_update(polys, packed: list[tuple[int, int]], active: list[int], pairs: list, h: int,
               order: TermOrder, counter: list[int]) -> list[int]:
    """Gebauer-Moeller installation of ``h`` (indices into ``polys``).

    ``packed[g]`` holds the support mask and packed exponents of lead ``g``;
    masks reject most divisibility candidates before the packed test.
    """
    hl = polys[h][0]
    n = len(hl)
    hmask, hp = packed[h]
    guard = _guard(n)
    ones = guard >> (_FIELD - 1)
    top = _FIELD * (n - 1)
    low = (1 << _FIELD) - 1
    # candidate new pairs sorted by lcm degree: only smaller-degree lcms can
    # properly divide a given one (the degree is read off a fieldwise sum)
    C = []
    for g in active:
        gmask, gp = packed[g]
        Lp = _packed_lcm(hp, gp, guard)
        C.append((((Lp * ones) >> top) & low, g, Lp, hmask | gmask, (hmask & gmask) == 0))
    C.sort(key=lambda t: (t[0], t[1]))
    chosen: list[tuple] = []  # survivors of criterion M
    lcm_coprime: dict = {}
    for item in C:
        deg, g, Lp, mask, cop = item
        Lg = Lp | guard
        dominated = False
        for d2, g2, Lp2, m2, c2 in chosen:
            if d2 >= deg:
                break  # a proper divisor has strictly smaller degree
            if m2 & ~mask == 0 and (Lg - Lp2) & guard == guard:
                dominated = True
                break
        if dominated:
            continue
        prev = lcm_coprime.get(Lp)
        if prev is not None:
            # equal lcm: keep one pair; remember whether any was coprime (criterion F)
            lcm_coprime[Lp] = prev or cop
            continue
        lcm_coprime[Lp] = cop
        chosen.append(item)
    kept = []
    for item in pairs:
        _, _, i, j, lij, lmask, lp = item
        if hmask & ~lmask == 0 and ((lp | guard) - hp) & guard == guard:
            if _packed_lcm(packed[i][1], hp, guard) != lp and _packed_lcm(packed[j][1], hp, guard) != lp:
                continue
        kept.append(item)
    for deg, g, Lp, mask, cop in chosen:
        if lcm_coprime[Lp]:
            continue  # product criterion
        counter[0] += 1
        L = _unpack(Lp, n)
        kept.append((order.key(L), counter[0], min(g, h), max(g, h), L, mask, Lp))
    heapq.heapify(kept)
    pairs[:] = kept
    new_active = []
    for g in active:
        gmask, gp = packed[g]
        if hmask & ~gmask == 0 and ((gp | guard) - hp) & guard == guard:
            continue
        new_active.append(g)
    new_active.append(h)
    return new_active


def _interreduce(elements: list[tuple[Monomial, Monomial]], order: TermOrder, steps: _Steps):
    """Minimal, then fully reduced, marked basis from a Groebner basis."""
    elements = sorted(set(elements), key=lambda e: order.key(e[0]))
    # a divisor of a lead never exceeds it, so only earlier leads can divide it
    minimal = []
    kept_masks: list[tuple[int, Monomial]] = []
    for lead, trail in elements:
        mask = support_mask(lead)
        if any(km & ~mask == 0 and all(x <= y for x, y in zip(kl, lead)) for km, kl in kept_masks):
            continue
        kept_masks.append((mask, lead))
        minimal.append((lead, trail))
    red = _Reducer()
    for lead, trail in minimal:
        red.add(lead, trail)
    out = []
    for lead, trail in minimal:
        t = red.normal_form(trail, steps)
        out.append((lead, t))
    out.sort(key=lambda e: order.key(e[0]), reverse=True)
    return out


def buchberger(gens: Sequence[Binomial], order: TermOrder, max_steps: Optional[int] = None,
               names: Optional[Sequence[str]] = None) -> MarkedBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Normal selection strategy (smallest lcm first, ties by insertion) with the
    Gebauer-Moeller criteria.  Binomial input stays binomial throughout.
    """
    steps = _Steps(max_steps or default_max_steps(), BudgetExceeded)
    n = order.nvars
    polys: list[tuple[Monomial, Monomial]] = []
    for g in gens:
        if g.nvars != n:
            raise DimensionError("generator length differs from order")
        b = make_binomial(g.lead, g.trail, order)
        if b is not None:
            polys.append((b.lead, b.trail))
    if not polys:
        return MarkedBasis((), names, reduced=True, order=order)
    # pre-reduce the input once so duplicate generators collapse early
    polys = list(dict.fromkeys(polys))
    red = _Reducer()
    active: list[int] = []
    pairs: list = []
    counter = [0]
    store: list[tuple[Monomial, Monomial]] = []

    packed: list[tuple[int, int]] = []

    def install(lead, trail):
        store.append((lead, trail))
        packed.append((support_mask(lead), _pack(lead)))
        idx = len(store) - 1
        red.add(lead, trail, idx)
        return idx

    for lead, trail in polys:
        a = red.normal_form(lead, steps)
        b = red.normal_form(trail, steps)
        if a == b:
            continue
        if order.key(a) < order.key(b):
            a, b = b, a
        idx = install(a, b)
        active[:] = _gm_update(store, packed, active, pairs, idx, order, counter)
        if len(red.entries) > len(active):
            red.retain(set(active))

    while pairs:
        _, _, i, j, L, _m, _p = heapq.heappop(pairs)
        steps.tick()
        fi, fj = store[i], store[j]
        a = mono_mul(mono_div(L, fi[0]), fi[1])
        b = mono_mul(mono_div(L, fj[0]), fj[1])
        a = red.normal_form(a, steps)
        b = red.normal_form(b, steps)
        if a == b:
            continue
        if order.key(a) < order.key(b):
            a, b = b, a
        idx = install(a, b)
        active[:] = _gm_update(store, packed, active, pairs, idx, order, counter)
        if len(red.entries) > len(active):
            red.retain(set(active))

    final = _interreduce([store[g] for g in active], order, steps)
    return MarkedBasis(tuple(Binomial(l, t, True) for l, t in final), names, reduced=True, order=order)


def interreduce(basis: MarkedBasis, order: TermOrder, max_steps: Optional[int] = None) -> MarkedBasis:
    """Reduced form of a set already known to be a Groebner basis under ``order``."""
    steps = _Steps(max_steps or default_max_steps(), BudgetExceeded)
    els = []
    for b in basis:
        o = b.oriented(order)
        els.append((o.lead, o.trail))
    final = _interreduce(els, order, steps)
    return MarkedBasis(tuple(Binomial(l, t, True) for l, t in final), basis.names, reduced=True, order=order)


# --------------------------------------------------------------------------
# initial ideals and marked-basis certification


def minimal_monomials(mons: Iterable[Monomial]) -> list[Monomial]:
    """Divisibility-minimal elements, sorted."""
    mons = sorted(set(tuple(m) for m in mons), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in mons:
        if not any(divides(o, m) for o in out):
            out.append(m)
    return sorted(out)


def initial_ideal(basis: MarkedBasis) -> list[Monomial]:
    return minimal_monomials(basis.leads())


def is_squarefree(mons: Iterable[Monomial]) -> bool:
    return all(is_squarefree_monomial(m) for m in mons)


def certify_marked(basis: MarkedBasis) -> Optional[tuple[int, ...]]:
    """Positive integer weight selecting every marked lead strictly, or None."""
    n = basis.nvars
    if n is None:
        raise ValueError("cannot certify an empty basis without a ring")
    rows = [b.exponent() for b in basis]
    return strictly_positive_solution(rows, n)


def certified_order(basis: MarkedBasis) -> TermOrder:
    w = certify_marked(basis)
    if w is None:
        raise IncoherentMarking("no positive weight selects every marked lead")
    return TermOrder.weight(w)


def unreduced_spairs(basis: MarkedBasis, order: Optional[TermOrder] = None,
                     max_steps: Optional[int] = None, first_only: bool = False) -> list[tuple[int, int, Binomial]]:
    """S-pairs whose remainder modulo ``basis`` is nonzero (Buchberger's criterion)."""
    if order is None:
        order = certified_order(basis)
    steps = _Steps(max_steps or default_max_steps(), BudgetExceeded)
    els = list(basis)
    red = _reducer_for(els)
    bad = []
    for i in range(len(els)):
        f = els[i]
        for j in range(i + 1, len(els)):
            g = els[j]
            if coprime(f.lead, g.lead):
                continue
            L = mono_lcm(f.lead, g.lead)
            a = red.normal_form(mono_mul(mono_div(L, f.lead), f.trail), steps)
            b = red.normal_form(mono_mul(mono_div(L, g.lead), g.trail), steps)
            if a != b:
                bad.append((i, j, make_binomial(a, b, order)))
                if first_only:
                    return bad
    return bad


def is_groebner_marked(basis: MarkedBasis, max_steps: Optional[int] = None) -> bool:
    """Buchberger criterion under a certified weight order for the marking.

    Raises :class:`IncoherentMarking` (distinct from returning False) when the
    marking is not induced by any term order.
    """
    if len(basis) == 0:
        return True
    order = certified_order(basis)
    return not unreduced_spairs(basis, order, max_steps, first_only=True)
