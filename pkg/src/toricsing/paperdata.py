"""Transcribed theorem tables for the D and E families, plus a verification harness."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .algebra import (
    Binomial,
    MarkedBasis,
    TermOrder,
    certify_marked,
    initial_ideal,
    is_groebner_marked,
    is_squarefree,
)
from .dynkin import (
    Configuration,
    ade_configuration,
    closed_form_configuration,
    dimensions,
    index_sets,
    remark_dimensions,
)
from .errors import BudgetExceeded, InvalidInput
from .toric import ToricIdeal, ideal_from_generators, ideals_equal, is_homogeneous, toric_ideal

log = logging.getLogger(__name__)

KINDS = ("Deven", "Dodd", "E6", "E7")


@dataclass(frozen=True)
class PaperBasisTable:
    kind: str
    n: int
    config: Configuration
    elements: MarkedBasis
    # (row index, note) for rows transcribed verbatim but known to be suspect
    flags: tuple[tuple[int, str], ...] = ()


def _check_kind(kind: str, n: int) -> None:
    if kind == "Deven":
        if n < 4 or n % 2:
            raise InvalidInput("Deven needs even n >= 4")
    elif kind == "Dodd":
        if n < 5 or n % 2 == 0:
            raise InvalidInput("Dodd needs odd n >= 5")
    elif kind == "E6":
        if n != 6:
            raise InvalidInput("E6 needs n = 6")
    elif kind == "E7":
        if n != 7:
            raise InvalidInput("E7 needs n = 7")
    else:
        raise InvalidInput(f"unknown table kind {kind!r}; expected one of {KINDS}")


def kind_for(family: str, n: int) -> str:
    """Table kind for an ADE family letter and rank."""
    family = family.upper()
    if family == "D":
        return "Deven" if n % 2 == 0 else "Dodd"
    if family == "E" and n in (6, 7):
        return f"E{n}"
    raise InvalidInput(f"no transcribed table for {family}_{n}")


def paper_cardinality(kind: str, n: int) -> int:
    _check_kind(kind, n)
    if kind == "Deven":
        m = n // 2
        return 2 * comb(m - 1, 4) + 5 * comb(m - 1, 3) + 4 * comb(m - 1, 2) + comb(m - 1, 1)
    if kind == "Dodd":
        m = (n - 1) // 2
        return 2 * comb(m, 4) + 7 * comb(m, 3) + 9 * comb(m, 2) + 7 * comb(m, 1) + comb(m, 0)
    return {"E6": 35, "E7": 6}[kind]


class _Builder:
    """Writes monomials by variable name against a configuration."""

    def __init__(self, config: Configuration):
        self.c = config
        self.pos = {name: i for i, name in enumerate(config.names)}
        self.rows: list[Binomial] = []

    def mono(self, *factors) -> tuple[int, ...]:
        e = [0] * self.c.N
        for f in factors:
            name, power = f if isinstance(f, tuple) else (f, 1)
            e[self.pos[name]] += power
        return tuple(e)

    def row(self, lead: Sequence, trail: Sequence) -> None:
        self.rows.append(Binomial(self.mono(*lead), self.mono(*trail), marked=True))


def _x(i) -> str:
    return f"x_{i}"


def _xx(a, b) -> str:
    return f"x_{{{a},{b}}}"


def _d_even_rows(n: int) -> _Builder:
    c = closed_form_configuration("D", n)
    B = _Builder(c)
    J, _ = index_sets(n)
    one, last = _x(1), _x(n)
    for i, j, k, l in combinations(J, 4):
        B.row([_xx(i, k), _xx(j, l)], [_xx(i, j), _xx(k, l)])
        B.row([_xx(i, l), _xx(j, k)], [_xx(i, j), _xx(k, l)])
    for i, j, k in combinations(J, 3):
        B.row([_xx(i, j), _xx(i, k)], [_x(i), _xx(j, k)])
        B.row([_x(j), _xx(i, k)], [_xx(i, j), _xx(j, k)])
        B.row([_x(k), _xx(i, j)], [_xx(i, k), _xx(j, k)])
        B.row([_xx(j, k), f"y_{i}"], [_xx(i, j), f"y_{k}"])
        B.row([_xx(i, k), f"y_{j}"], [_xx(i, j), f"y_{k}"])
    for i, j in combinations(J, 2):
        B.row([_x(i), _x(j)], [(_xx(i, j), 2)])
        B.row([_x(j), f"y_{i}"], [_xx(i, j), f"y_{j}"])
        B.row([_xx(i, j), f"y_{i}"], [_x(i), f"y_{j}"])
        B.row([_xx(i, j), one, last], [f"y_{i}", f"y_{j}"])
    for i in J:
        B.row([_x(i), one, last], [(f"y_{i}", 2)])
    return B


def _d_odd_rows(n: int) -> _Builder:
    """The odd table, reading the printed ``x_{i,n-1}`` as the variable of ``e_i + 2e_1``."""
    c = closed_form_configuration("D", n)
    B = _Builder(c)
    J, _ = index_sets(n)
    one, last = _x(1), _x(n)
    x1n = _xx(1, n)

    def a(i):  # e_i + 2 e_1
        return _xx(i, 1)

    def b(i):  # e_i + 2 e_n
        return _xx(i, n)

    for i, j, k, l in combinations(J, 4):
        B.row([_xx(i, k), _xx(j, l)], [_xx(i, j), _xx(k, l)])
        B.row([_xx(i, l), _xx(j, k)], [_xx(i, j), _xx(k, l)])
    for i, j, k in combinations(J, 3):
        B.row([_xx(j, k), a(i)], [_xx(i, j), a(k)])
        B.row([_xx(i, k), a(j)], [_xx(i, j), a(k)])
        B.row([_xx(j, k), b(i)], [_xx(i, j), b(k)])
        B.row([_xx(i, k), b(j)], [_xx(i, j), b(k)])
        B.row([_x(j), _xx(i, k)], [_xx(i, j), _xx(j, k)])
        B.row([_xx(i, j), _xx(i, k)], [_x(i), _xx(j, k)])
        B.row([_x(k), _xx(i, j)], [_xx(i, k), _xx(j, k)])
    for i, j in combinations(J, 2):
        B.row([_x(i), _x(j)], [(_xx(i, j), 2)])
        B.row([_xx(i, j), one], [a(i), a(j)])
        B.row([_xx(i, j), last], [b(i), b(j)])
        B.row([_xx(i, j), a(i)], [_x(i), a(j)])
        B.row([_xx(i, j), b(i)], [_x(i), b(j)])
        B.row([_x(j), a(i)], [_xx(i, j), a(j)])
        B.row([_x(j), b(i)], [_xx(i, j), b(j)])
        B.row([a(j), b(i)], [a(i), b(j)])
        B.row([a(i), b(j)], [(x1n, 2), _xx(i, j)])
    for i in J:
        B.row([_x(i), one], [(a(i), 2)])
        B.row([_x(i), last], [(b(i), 2)])
        B.row([a(i), b(i)], [(x1n, 2), _x(i)])
        B.row([b(i), one], [(x1n, 2), a(i)])
        B.row([f"y_{{{i},1}}"], [x1n, a(i)])
        B.row([f"y_{{{i},{n}}}"], [x1n, b(i)])
        B.row([a(i), last], [(x1n, 2), b(i)])
    B.row([one, last], [(x1n, 4)])
    return B


# The E6 table as printed (lead, trail), variables by index.
_E6_ROWS = [
    ((7, 10), (8, 9)), ((13, 10), (14, 8)), ((13, 9), (14, 7)), ((12, 14), (8, 9, 10)),
    ((12, 13), (8, 8, 9)), ((11, 10), (12, 9)), ((11, 8), (12, 7)), ((11, 14), (8, 9, 9)),
    ((11, 13), (7, 8, 9)), ((5, 9), (12, 10)), ((5, 7), (12, 8)), ((5, 14), (8, 10, 10)),
    ((5, 13), (8, 8, 10)), ((5, 11), (12, 12)), ((4, 8), (14, 10)), ((4, 7), (14, 9)),
    ((4, 13), (14, 14)), ((4, 12), (9, 10, 10)), ((4, 11), (9, 9, 10)), ((4, 5), (10, 10, 10)),
    ((2, 10), (11, 9)), ((2, 8), (11, 7)), ((2, 14), (7, 9, 9)), ((2, 13), (7, 7, 9)),
    ((2, 12), (11, 11)), ((2, 5), (11, 12)), ((2, 4), (9, 9, 9)), ((1, 10), (13, 8)),
    ((1, 9), (13, 7)), ((1, 14), (13, 13, 13)), ((1, 11), (7, 8, 8)), ((1, 11), (7, 7, 8)),
    ((1, 5), (8, 8, 8)), ((1, 4), (13, 14)), ((1, 2), (7, 7, 7)),
]
_E6_FLAGS = (
    (29, "x_1*x_14 - x_13^3 is not homogeneous for the configuration; x_13^2 balances it"),
    (30, "x_1*x_11 - x_7*x_8^2 is not homogeneous and repeats the lead of the next row; "
         "x_1*x_12 - x_7*x_8^2 balances it"),
)

_E7_ROWS = [
    ((7, 8), (9, 10)), ((6, 9), (8, 10)), ((6, 7), (10, 10)),
    ((4, 10), (8, 9)), ((4, 7), (9, 9)), ((4, 6), (8, 8)),
]

# Lex orders under which the E tables are stated (variable numbers, largest first).
E6_LEX = (1, 2, 3, 4, 5, 6, 11, 12, 13, 14, 7, 8, 9, 10)
E7_LEX = tuple(range(1, 11))


@dataclass(frozen=True)
class LexClaim:
    """A stated lex order for an A_n configuration and the size it is said to produce.

    ``count`` is ``"gb"`` (reduced-basis size) or ``"initial"`` (minimal
    generators of the initial ideal).  The order names variables by an
    unstated numbering; for A_4 one of the 14 variables is not listed.
    """

    n: int
    ranking: tuple[int, ...]  # 1-based, largest first
    target: int
    count: str


A_LEX_CLAIMS = {
    4: LexClaim(4, (14, 12, 10, 9, 7, 4, 8, 6, 5, 3, 11, 1, 2), 54, "gb"),
    5: LexClaim(5, (19, 18, 17, 11, 10, 3, 16, 13, 7, 15, 14, 12, 8, 5, 9, 4, 6, 2, 1), 105, "initial"),
}


def _from_indices(c: Configuration, rows) -> list[Binomial]:
    out = []
    for lead, trail in rows:
        le = [0] * c.N
        tr = [0] * c.N
        for v in lead:
            le[v - 1] += 1
        for v in trail:
            tr[v - 1] += 1
        out.append(Binomial(tuple(le), tuple(tr), marked=True))
    return out


def lex_order(N: int, ranking: Sequence[int]) -> TermOrder:
    """Lex with variable ``ranking[0]`` (1-based) largest."""
    return TermOrder.lex(N, [v - 1 for v in ranking])


def paper_order(kind: str) -> Optional[TermOrder]:
    """The concrete order a table is stated for, when it is unambiguous (E types)."""
    if kind == "E6":
        return lex_order(14, E6_LEX)
    if kind == "E7":
        return lex_order(10, E7_LEX)
    return None


def paper_basis(kind: str, n: int) -> PaperBasisTable:
    _check_kind(kind, n)
    if kind == "Deven":
        B = _d_even_rows(n)
        return PaperBasisTable(kind, n, B.c, MarkedBasis(tuple(B.rows), B.c.names))
    if kind == "Dodd":
        B = _d_odd_rows(n)
        return PaperBasisTable(kind, n, B.c, MarkedBasis(tuple(B.rows), B.c.names))
    c = closed_form_configuration("E", n)
    rows = _E6_ROWS if kind == "E6" else _E7_ROWS
    flags = _E6_FLAGS if kind == "E6" else ()
    return PaperBasisTable(kind, n, c, MarkedBasis(tuple(_from_indices(c, rows)), c.names), flags)


def corrected_e6_basis() -> MarkedBasis:
    """The E6 table with the two flagged rows rebalanced as the flags describe."""
    rows = list(_E6_ROWS)
    rows[29] = ((1, 14), (13, 13))
    rows[30] = ((1, 12), (7, 8, 8))
    c = closed_form_configuration("E", 6)
    return MarkedBasis(tuple(_from_indices(c, rows)), c.names)


# --------------------------------------------------------------------------
# table diff


@dataclass(frozen=True)
class TableDiff:
    """Printed table versus a computed reduced Groebner basis, matched by A-degree."""

    non_homogeneous: tuple[str, ...]
    duplicate_leads: tuple[str, ...]
    missing_from_table: tuple[str, ...]  # computed elements with no printed counterpart
    extra_in_table: tuple[str, ...]  # printed rows that match no computed element
    matched: int

    @property
    def empty(self) -> bool:
        return not (self.non_homogeneous or self.duplicate_leads or self.missing_from_table or self.extra_in_table)

    def to_dict(self) -> dict:
        return {
            "non_homogeneous": list(self.non_homogeneous),
            "duplicate_leads": list(self.duplicate_leads),
            "missing_from_table": list(self.missing_from_table),
            "extra_in_table": list(self.extra_in_table),
            "matched": self.matched,
        }


def table_diff(table: PaperBasisTable, computed: MarkedBasis) -> TableDiff:
    c = table.config
    names = c.names
    nonhom = tuple(b.format(names) for b in table.elements if not is_homogeneous(c, b))
    seen: dict = {}
    dups = []
    for b in table.elements:
        if b.lead in seen:
            dups.append(f"{seen[b.lead]} / {b.format(names)}")
        else:
            seen[b.lead] = b.format(names)
    printed = {(b.lead, b.trail) for b in table.elements}
    comp = {(b.lead, b.trail) for b in computed}
    missing = tuple(sorted(Binomial(l, t).format(names) for l, t in comp - printed))
    extra = tuple(sorted(Binomial(l, t).format(names) for l, t in printed - comp))
    return TableDiff(nonhom, tuple(dups), missing, extra, len(comp & printed))


# --------------------------------------------------------------------------
# verification harness


@dataclass(frozen=True)
class ClaimStatus:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""
    value: object = None

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail, "value": self.value}


@dataclass(frozen=True)
class VerificationReport:
    kind: str
    n: int
    claims: tuple[ClaimStatus, ...]
    certified_weight: Optional[tuple[int, ...]] = None
    table_diff: Optional[dict] = None
    seconds: float = 0.0

    @property
    def all_pass(self) -> bool:
        return all(c.status != "fail" for c in self.claims)

    def claim(self, name: str) -> ClaimStatus:
        for c in self.claims:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "claims": [c.to_dict() for c in self.claims],
            "certified_weight": list(self.certified_weight) if self.certified_weight is not None else None,
            "table_diff": self.table_diff,
            "seconds": self.seconds,
            "all_pass": self.all_pass,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(
            kind=d["kind"],
            n=d["n"],
            claims=tuple(ClaimStatus(c["name"], c["status"], c.get("detail", ""), c.get("value")) for c in d["claims"]),
            certified_weight=tuple(d["certified_weight"]) if d.get("certified_weight") is not None else None,
            table_diff=d.get("table_diff"),
            seconds=d.get("seconds", 0.0),
        )


@dataclass
class _Recorder:
    claims: list = field(default_factory=list)

    def add(self, name: str, ok: Optional[bool], detail: str = "", value=None) -> None:
        status = "skipped" if ok is None else ("pass" if ok else "fail")
        self.claims.append(ClaimStatus(name, status, detail, value))


def verify_all(kind: str, n: int, max_steps: Optional[int] = None, betti: bool = True,
               fiber_limit: Optional[int] = None) -> VerificationReport:
    """Run the whole battery of checks for one transcribed table.

    Steps are recorded in order; a budget overrun marks the step (and those that
    depend on it) as skipped instead of aborting the report.
    """
    from .betti import betti_report, minimality_check  # local: betti imports toric

    t0 = time.time()
    table = paper_basis(kind, n)
    c = table.config
    G = table.elements
    rec = _Recorder()
    diff = None

    hom = [b.format(c.names) for b in G if not is_homogeneous(c, b)]
    rec.add("homogeneity", not hom, "; ".join(hom))

    w = certify_marked(G)
    rec.add("marked_coherence", w is not None, "" if w is not None else "no positive weight selects every lead",
            list(w) if w is not None else None)

    gb_ok: Optional[bool] = None
    if w is not None:
        try:
            gb_ok = is_groebner_marked(G, max_steps)
            rec.add("groebner_criterion", gb_ok)
        except BudgetExceeded as e:
            rec.add("groebner_criterion", None, str(e))
    else:
        rec.add("groebner_criterion", None, "marking incoherent")

    order = paper_order(kind) or (TermOrder.weight(w) if w is not None else TermOrder.degrevlex(c.N))
    I: Optional[ToricIdeal] = None
    try:
        I = toric_ideal(c, order, max_steps)
    except BudgetExceeded as e:
        rec.add("ideal_equality", None, str(e))
    if I is not None:
        try:
            J = ideal_from_generators(c, list(G), order, max_steps)
            rec.add("ideal_equality", ideals_equal(I, J))
        except BudgetExceeded as e:
            rec.add("ideal_equality", None, str(e))
        rec.add("computed_gb_size", None, "informational", len(I.reduced_gb))

    leads = initial_ideal(G)
    rec.add("squarefree_initial_ideal", is_squarefree(leads))

    card = paper_cardinality(kind, n)
    rec.add("cardinality", len(G) == card, f"table {len(G)} vs formula {card}", len(G))

    if kind in ("Deven", "Dodd"):
        expected = remark_dimensions("D", n)
        minimal = ade_configuration("D", n)
        got = dimensions(minimal)
        rec.add("dimensions", got == expected,
                f"minimal embedding {got} vs remark {expected}; closed form {dimensions(c)}", list(got))

    if kind == "E6" and I is not None:
        d = table_diff(table, I.reduced_gb)
        diff = d.to_dict()
        rec.add("table_diff_empty", d.empty, "printed table differs from the computed basis" if not d.empty else "")

    if betti and I is not None:
        try:
            rep = betti_report(I, fiber_limit=fiber_limit)
            rec.add("indispensable_count", None, "informational", len(rep.indispensables))
            rec.add("min_gen_set_count", None, "informational", rep.min_gen_set_count)
            rec.add("min_gen_set_size", None, "informational", len(rep.sample_min_gen_set))
            if kind in ("Deven", "Dodd", "E7") or (kind == "E6" and not hom):
                rec.add("minimality", minimality_check(list(G), I, max_steps))
            else:
                rec.add("minimality", None, "table contains non-homogeneous rows")
            if kind == "E6":
                rec.add("e6_count_matches_paper", rep.min_gen_set_count == 8,
                        f"computed {rep.min_gen_set_count} vs printed 8", rep.min_gen_set_count)
        except BudgetExceeded as e:
            rec.add("minimality", None, str(e))

    return VerificationReport(kind, n, tuple(rec.claims), w, diff, round(time.time() - t0, 3))
