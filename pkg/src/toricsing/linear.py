"""Exact rational linear feasibility: a small two-phase simplex and Fourier-Motzkin.

Everything here works over :class:`fractions.Fraction`.  Floating point is only
ever used to *propose* a candidate point (via HiGHS) that is then checked with
exact integer arithmetic, so every answer returned is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

Vector = tuple  # of Fraction / int

# Above this many unknowns the strict-feasibility solver first asks HiGHS for a
# candidate and only falls back to the exact simplex if verification fails.
FLOAT_ASSIST_THRESHOLD = 24


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: Optional[tuple] = None
    value: Optional[Fraction] = None


def lp_max(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    free: Optional[Sequence[bool]] = None,
) -> LPResult:
    """Maximise ``c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``.

    Variables are nonnegative unless flagged in ``free``.  Two-phase tableau
    simplex with Bland's rule, so it always terminates.
    """
    n = len(c)
    free = list(free) if free is not None else [False] * n
    # split free variables x = x+ - x-
    cols: list[tuple[int, int]] = []  # (original index, sign)
    for j in range(n):
        cols.append((j, 1))
        if free[j]:
            cols.append((j, -1))
    nx = len(cols)

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    kinds: list[str] = []
    for a, b in zip(A_ub, b_ub):
        rows.append([Fraction(a[j]) * s for j, s in cols])
        rhs.append(Fraction(b))
        kinds.append("ub")
    for a, b in zip(A_eq, b_eq):
        rows.append([Fraction(a[j]) * s for j, s in cols])
        rhs.append(Fraction(b))
        kinds.append("eq")
    m = len(rows)

    n_slack = kinds.count("ub")
    # columns: x (nx), slacks (n_slack), artificials (added as needed)
    slack_col = {}
    k = nx
    for i, kind in enumerate(kinds):
        if kind == "ub":
            slack_col[i] = k
            k += 1
    art_start = k
    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    artificials: list[int] = []
    for i in range(m):
        row = rows[i] + [Fraction(0)] * n_slack
        if i in slack_col:
            row[slack_col[i]] = Fraction(1)
        b = rhs[i]
        if b < 0:
            row = [-v for v in row]
            b = -b
        tableau.append(row + [b])
    width = art_start
    for i in range(m):
        s = slack_col.get(i)
        if s is not None and tableau[i][s] == 1:
            basis.append(s)
        else:
            basis.append(-1)
    n_art = basis.count(-1)
    for row in tableau:
        b = row.pop()
        row.extend([Fraction(0)] * n_art)
        row.append(b)
    a = art_start
    for i in range(m):
        if basis[i] == -1:
            tableau[i][a] = Fraction(1)
            basis[i] = a
            artificials.append(a)
            a += 1
    width = art_start + n_art

    def pivot(r: int, col: int) -> None:
        prow = tableau[r]
        pv = prow[col]
        if pv != 1:
            tableau[r] = prow = [v / pv for v in prow]
        for i in range(m):
            if i != r:
                f = tableau[i][col]
                if f:
                    ri = tableau[i]
                    tableau[i] = [x - f * y if y else x for x, y in zip(ri, prow)]
        basis[r] = col

    def run(obj: list[Fraction], allowed: int) -> str:
        # obj: coefficients to maximise over the first `allowed` columns
        while True:
            # reduced costs: obj_j - sum_i obj_{basis i} * T[i][j]
            cb = [obj[basis[i]] if basis[i] < len(obj) else Fraction(0) for i in range(m)]
            enter = -1
            bset = set(basis)
            for j in range(allowed):
                if j in bset:
                    continue
                rc = obj[j] - sum((cb[i] * tableau[i][j] for i in range(m) if cb[i] and tableau[i][j]), Fraction(0))
                if rc > 0:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            best = None
            leave = -1
            for i in range(m):
                t = tableau[i][enter]
                if t > 0:
                    ratio = tableau[i][-1] / t
                    if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                        best, leave = ratio, i
            if leave < 0:
                return "unbounded"
            pivot(leave, enter)

    if artificials:
        obj1 = [Fraction(0)] * width
        for a_ in artificials:
            obj1[a_] = Fraction(-1)
        run(obj1, width)
        total = sum((tableau[i][-1] for i in range(m) if basis[i] in artificials), Fraction(0))
        if total != 0:
            return LPResult("infeasible")
        # drive remaining (zero-level) artificials out of the basis
        for i in range(m):
            if basis[i] in artificials:
                for j in range(art_start):
                    if tableau[i][j] != 0 and j not in basis:
                        pivot(i, j)
                        break
    obj2 = [Fraction(0)] * width
    for col, (j, s) in enumerate(cols):
        obj2[col] = Fraction(c[j]) * s
    # artificials must stay at zero: forbid them from entering
    status = run(obj2, art_start)
    if status == "unbounded":
        return LPResult("unbounded")
    xs = [Fraction(0)] * width
    for i in range(m):
        xs[basis[i]] = tableau[i][-1]
    x = [Fraction(0)] * n
    for col, (j, s) in enumerate(cols):
        x[j] += s * xs[col]
    value = sum((Fraction(cj) * xj for cj, xj in zip(c, x)), Fraction(0))
    return LPResult("optimal", tuple(x), value)


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _to_integer(vec: Sequence[Fraction]) -> tuple[int, ...]:
    den = 1
    for v in vec:
        den = lcm(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    g = g or 1
    return tuple(v // g for v in ints)


def is_strict_solution(rows: Sequence[Sequence[int]], w: Sequence, positive: bool = True) -> bool:
    if positive and any(v <= 0 for v in w):
        return False
    return all(_dot(r, w) > 0 for r in rows)


def _float_candidate(rows: Sequence[Sequence[int]], n: int) -> Optional[tuple[int, ...]]:
    try:
        import numpy as np
        from scipy.optimize import linprog
    except ImportError:  # pragma: no cover - scipy is a declared dependency
        return None
    A = -np.asarray(rows, dtype=float) if rows else np.zeros((0, n))
    b = -np.ones(len(rows))
    res = linprog(np.ones(n), A_ub=A if len(rows) else None, b_ub=b if len(rows) else None,
                  bounds=[(1, None)] * n, method="highs")
    if res.status != 0:
        return None
    for den in (1, 2, 6, 12, 60, 840, 10**6):
        cand = [Fraction(v).limit_denominator(den) for v in res.x]
        ints = _to_integer(cand)
        if is_strict_solution(rows, ints):
            return ints
    ints = tuple(int(round(v * 10**6)) for v in res.x)
    return ints if is_strict_solution(rows, ints) else None


def strictly_positive_solution(rows: Sequence[Sequence[int]], n: Optional[int] = None) -> Optional[tuple[int, ...]]:
    """Return a positive integer ``w`` with ``r.w > 0`` for every row, or None.

    Feasibility of the strict homogeneous system is equivalent to feasibility of
    ``R w >= 1, w >= 1`` by scaling, which the exact simplex decides.
    """
    rows = [tuple(int(v) for v in r) for r in rows]
    if n is None:
        if not rows:
            raise ValueError("cannot infer dimension from an empty system")
        n = len(rows[0])
    if not rows:
        return (1,) * n
    if any(all(v <= 0 for v in r) for r in rows):
        return None
    if n > FLOAT_ASSIST_THRESHOLD:
        cand = _float_candidate(rows, n)
        if cand is not None:
            return cand
    # w = 1 + y, y >= 0:  -R y <= R.1 - 1
    A_ub = [[-v for v in r] for r in rows]
    b_ub = [sum(r) - 1 for r in rows]
    res = lp_max([0] * n, A_ub, b_ub)
    if res.status != "optimal":
        return None
    w = _to_integer([1 + y for y in res.x])
    assert is_strict_solution(rows, w)
    return w


def fourier_motzkin(ineqs: Sequence[tuple[Sequence, object]], n: int) -> Optional[tuple[Fraction, ...]]:
    """Solve ``a.x <= b`` for all ``(a, b)`` by Fourier-Motzkin elimination.

    Returns a rational point or None when infeasible.  Exponential in general;
    duplicate and dominated rows are pruned after every elimination step.
    """
    system = [(tuple(Fraction(v) for v in a), Fraction(b)) for a, b in ineqs]
    stages: list[list] = []
    for var in range(n - 1, -1, -1):
        system = _prune(system)
        stages.append(system)
        pos, neg, zero = [], [], []
        for a, b in system:
            c = a[var]
            if c > 0:
                pos.append((a, b))
            elif c < 0:
                neg.append((a, b))
            else:
                zero.append((a, b))
        new = list(zero)
        for ap, bp in pos:
            for an, bn in neg:
                fp, fn = ap[var], -an[var]
                a = tuple(x * fn + y * fp for x, y in zip(ap, an))
                new.append((a, bp * fn + bn * fp))
        system = new
    if any(b < 0 for a, b in system if all(v == 0 for v in a)):
        return None
    # back substitution: stages[k] constrains variable n-1-k given later values
    x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        var = n - 1 - k
        lo, hi = None, None
        for a, b in stages[k]:
            c = a[var]
            rest = b - sum(a[j] * x[j] for j in range(var))
            if c > 0:
                v = rest / c
                hi = v if hi is None or v < hi else hi
            elif c < 0:
                v = rest / c
                lo = v if lo is None or v > lo else lo
            elif rest < 0:
                return None
        if lo is not None and hi is not None:
            if lo > hi:
                return None
            x[var] = lo if lo == hi else (lo + hi) / 2
        elif lo is not None:
            x[var] = lo + 1 if lo == int(lo) else Fraction(int(lo) + 1)
        elif hi is not None:
            x[var] = hi - 1 if hi == int(hi) else Fraction(int(hi) if hi > 0 else int(hi) - 1)
        else:
            x[var] = Fraction(0)
    return tuple(x)


def _prune(system):
    best: dict = {}
    for a, b in system:
        if all(v == 0 for v in a):
            key = ()
            if key not in best or b < best[key][1]:
                best[key] = (a, b)
            continue
        # normalise by the first nonzero |coefficient|
        s = next(abs(v) for v in a if v != 0)
        a2 = tuple(v / s for v in a)
        b2 = b / s
        if a2 not in best or b2 < best[a2][1]:
            best[a2] = (a2, b2)
    out = list(best.values())
    if () in best:
        a, b = best[()]
        if b >= 0:
            out.remove((a, b))
    return out


def fm_strictly_positive_solution(rows: Sequence[Sequence[int]], n: int) -> Optional[tuple[int, ...]]:
    """Fourier-Motzkin twin of :func:`strictly_positive_solution` for small systems."""
    ineqs = [([-v for v in r], -1) for r in rows]
    ineqs += [([-1 if j == i else 0 for j in range(n)], -1) for i in range(n)]
    x = fourier_motzkin(ineqs, n)
    if x is None:
        return None
    w = _to_integer(x)
    assert is_strict_solution(rows, w)
    return w
