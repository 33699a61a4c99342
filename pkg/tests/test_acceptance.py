"""Acceptance criteria 1-9, one PASS/FAIL line each.

Every test records its verdict with :func:`record`; the lines are printed as
they happen (visible with ``-s``) and again in the terminal summary.  All
comparisons are exact.
"""

from __future__ import annotations

import json
import random
from math import comb
from pathlib import Path

import pytest

from conftest import paper_ideal
from toricsing.algebra import (
    TermOrder,
    buchberger,
    certify_marked,
    compare,
    initial_ideal,
    is_groebner_marked,
    is_squarefree,
    make_binomial,
    minimal_monomials,
    mono_mul,
    reduce,
)
from toricsing.betti import (
    candidate_degrees,
    count_minimal_generating_sets,
    fiber_graph,
    indispensable_binomials,
    minimality_check,
)
from toricsing.dynkin import (
    ade_configuration,
    ade_graph,
    closed_form_configuration,
    default_bound,
    dimensions,
    generates_box,
    incidence_matrix,
    is_hilbert_minimal,
)
from toricsing.fan import groebner_fan, numbering_search, squarefree_initials
from toricsing.paperdata import (
    A_LEX_CLAIMS,
    VerificationReport,
    paper_basis,
    paper_cardinality,
    table_diff,
    verify_all,
)
from toricsing.serialize import basis_from_dict, basis_to_dict, config_from_dict, config_to_dict, dumps
from toricsing.toric import (
    coprime_terms,
    ideal_from_generators,
    ideals_equal,
    is_homogeneous,
    lemma11_check,
    max_degree,
    toric_ideal,
)

RESULTS: list[str] = []
EVEN = [("Deven", 2 * m) for m in range(2, 7)]
ODD = [("Dodd", 2 * m + 1) for m in range(2, 7)]
NUMBERING_REPORT = Path(__file__).resolve().parent.parent / "results" / "numbering_search.json"


def record(k: int, ok: bool, detail: str, verdict: str | None = None) -> None:
    line = f"CRITERION {k}: {verdict or ('PASS' if ok else 'FAIL')} - {detail}"
    RESULTS.append(line)
    print(line)


def _battery(kind: str, n: int) -> tuple[bool, str]:
    T = paper_basis(kind, n)
    G = T.elements
    w = certify_marked(G)
    if w is None:
        return False, f"{kind} n={n}: marking incoherent"
    gb = is_groebner_marked(G)
    I = paper_ideal(kind, n)
    eq = ideals_equal(I, ideal_from_generators(T.config, list(G), I.order))
    card = len(G) == paper_cardinality(kind, n)
    ok = gb and eq and card
    return ok, f"n={n}:{len(G)}{'' if ok else '!'}"


@pytest.mark.slow
@pytest.mark.parametrize("k,cases", [(1, EVEN), (2, ODD)], ids=["1-Deven", "2-Dodd"])
def test_criteria_1_2_groebner_verification(k, cases):
    results = [_battery(kind, n) for kind, n in cases]
    ok = all(r[0] for r in results)
    record(k, ok, "coherent + Groebner + ideal equality + cardinality: " + " ".join(r[1] for r in results))
    assert ok


def test_criterion_3_squarefree():
    bad = [f"{k}{n}" for k, n in EVEN + ODD + [("E6", 6), ("E7", 7)]
           if not is_squarefree(initial_ideal(paper_basis(k, n).elements))]
    e7 = paper_basis("E7", 7)
    idx = {name: i for i, name in enumerate(e7.config.names)}
    want = {frozenset((idx[a], idx[b])) for a, b in [("x_7", "x_8"), ("x_6", "x_9"), ("x_6", "x_7"),
                                                     ("x_4", "x_10"), ("x_4", "x_7"), ("x_4", "x_6")]}
    leads = {frozenset(i for i, e in enumerate(m) if e) for m in initial_ideal(paper_ideal("E7", 7).reduced_gb)}
    e6_computed = is_squarefree(initial_ideal(paper_ideal("E6", 6).reduced_gb))
    ok = not bad and leads == want and e6_computed
    record(3, ok, f"all D/E table leads squarefree (failures: {bad or 'none'}); "
                  f"computed E7 leads match exactly: {leads == want}; computed E6 leads squarefree: {e6_computed}")
    assert ok


def test_criterion_4_e_types():
    e8 = toric_ideal(closed_form_configuration("E", 8))
    e7 = paper_ideal("E7", 7)
    e6 = paper_ideal("E6", 6)
    diff = table_diff(paper_basis("E6", 6), e6.reduced_gb)
    ok = e8.is_zero and len(e7.reduced_gb) == 6 and len(e6.reduced_gb) == 35
    record(4, ok, f"E8 ideal zero: {e8.is_zero}; E7 reduced GB {len(e7.reduced_gb)}; E6 reduced GB "
                  f"{len(e6.reduced_gb)}; E6 table diff: {diff.matched} matched, "
                  f"{len(diff.non_homogeneous)} non-homogeneous printed rows, {len(diff.duplicate_leads)} duplicate "
                  f"lead, {len(diff.missing_from_table)} computed elements absent from the table (finding)")
    assert ok
    assert not diff.empty and diff.matched == 33


def test_criterion_5_dimensions():
    rows, ok = [], True
    for m in range(2, 7):
        even = dimensions(closed_form_configuration("D", 2 * m))
        odd_min = dimensions(ade_configuration("D", 2 * m + 1))
        odd_listed = dimensions(closed_form_configuration("D", 2 * m + 1))
        ok &= even == (2 * m, m - 1 + comb(m - 1, 2))
        ok &= odd_min == (2 * m + 1, 2 * m + 1 + comb(m, 2))
        ok &= odd_listed == (2 * m + 1, 2 * m + 1 + comb(m, 2) + 2 * m)
        rows.append(f"m={m}: {even} {odd_min}")
    record(5, ok, "D_2m and D_2m+1 (minimal embedding = Hilbert basis) match; " + "; ".join(rows)
           + ". Flag: the listed odd generating set has 2m decomposable points, so its own codimension is 2m higher")
    assert ok


@pytest.mark.slow
def test_criterion_6_minimality_and_betti():
    minimal = {}
    for kind, n in EVEN + ODD:
        minimal[n] = minimality_check(list(paper_basis(kind, n).elements), paper_ideal(kind, n))
    e7 = paper_ideal("E7", 7)
    e7_ind = len(indispensable_binomials(e7))
    e7_count = count_minimal_generating_sets(e7)
    d8 = count_minimal_generating_sets(paper_ideal("Deven", 8))
    e6 = count_minimal_generating_sets(paper_ideal("E6", 6))
    ok = all(minimal.values()) and e7_ind == 6 and e7_count == 1 and d8 == 3
    bad = [n for n, v in minimal.items() if not v]
    record(6, ok, f"D tables minimal for n=4..13 (failures: {bad or 'none'}); E7 indispensable {e7_ind}, "
                  f"count {e7_count}; D8 count {d8}; E6 count {e6} vs printed 8 "
                  f"({'agrees' if e6 == 8 else 'MISMATCH flagged: four degrees with a 1+2 split give 2^4'})")
    assert ok


def test_criterion_7_fan():
    a3 = groebner_fan(toric_ideal(ade_configuration("A", 3)))
    a2 = groebner_fan(toric_ideal(ade_configuration("A", 2)))
    sq = squarefree_initials(a3)
    gens = [len(minimal_monomials(a3.initial_ideals[i])) for i in sq]
    ok = len(a3) == 29 and len(sq) == 1 and gens == [6] and len(a2) == 2
    record(7, ok, f"A3: {len(a3)} initial ideals, {len(sq)} squarefree with {gens} generators; A2: {len(a2)}")
    assert ok


# ---------------------------------------------------------------------------
# criterion 8: property suites over fixed seeds


def _orders(n):
    perm = list(range(n))[::-1]
    return [TermOrder.lex(n), TermOrder.lex(n, perm), TermOrder.grlex(n), TermOrder.degrevlex(n),
            TermOrder.weight([3, 1, 4, 1][:n]), TermOrder.weight([0, 1, 0, 2][:n], None, [1, 0, 0, 0][:n])]


def _order_axioms(rng) -> bool:
    for o in _orders(4):
        for _ in range(2000):
            a, b, t = (tuple(rng.randint(0, 5) for _ in range(4)) for _ in range(3))
            c = compare(o, a, b)
            if c != -compare(o, b, a) or (c == 0) != (a == b):
                return False
            if c < 0 and compare(o, mono_mul(a, t), mono_mul(b, t)) >= 0:
                return False
    return True


def _random_gens(rng, k=3):
    out = []
    while len(out) < k:
        a, b = (tuple(rng.randint(0, 3) for _ in range(4)) for _ in range(2))
        if a != b:
            out.append((a, b))
    return out


def _gb_properties(rng) -> bool:
    for _ in range(40):
        o = rng.choice(_orders(4))
        bs = [make_binomial(a, b, o) for a, b in _random_gens(rng)]
        G = buchberger(bs, o)
        rng.shuffle(bs)
        if buchberger(bs, o).elements != G.elements:
            return False
        a, b = _random_gens(rng, 1)[0]
        r = reduce(make_binomial(a, b, o), G, o)
        if r is not None and reduce(r, G, o) != r:
            return False
    return True


def _toric_properties(ideals) -> bool:
    return all(all(is_homogeneous(I.config, g) for g in I.reduced_gb) and coprime_terms(I.reduced_gb)
               for I in ideals)


def _hilbert_properties() -> bool:
    for kind, n in [("A", 2), ("A", 3), ("A", 4), ("D", 4), ("D", 5), ("D", 6), ("E", 6), ("E", 7), ("E", 8)]:
        c = ade_configuration(kind, n)
        M = incidence_matrix(ade_graph(kind, n))
        if not is_hilbert_minimal(c) or not generates_box(c, M, min(default_bound(n), 4)):
            return False
    return True


def _mode_equivalence(ideals) -> bool:
    for I in ideals:
        cache: dict = {}
        for b in candidate_degrees(I):
            if fiber_graph(I.config, b, "gcd", I).partition() != \
                    fiber_graph(I.config, b, "ideal", I, _cache=cache).partition():
                return False
    return True


def _round_trips(ideals) -> bool:
    for I in ideals:
        if config_from_dict(json.loads(dumps(config_to_dict(I.config)))) != I.config:
            return False
        if basis_from_dict(json.loads(dumps(basis_to_dict(I.reduced_gb)))) != I.reduced_gb:
            return False
    rep = verify_all("Deven", 6, betti=False)
    return VerificationReport.from_dict(json.loads(dumps(rep.to_dict()))) == rep


@pytest.mark.slow
def test_criterion_8_property_suites():
    rng = random.Random(20240601)
    verified = [paper_ideal(k, n) for k, n in EVEN + ODD + [("E6", 6), ("E7", 7)]]
    small = [paper_ideal(k, n) for k, n in [("Deven", 4), ("Deven", 6), ("Deven", 8), ("Dodd", 5), ("Dodd", 7),
                                            ("E6", 6), ("E7", 7)]] + \
            [toric_ideal(ade_configuration("A", n)) for n in (2, 3, 4)]
    checks = {
        "order axioms": _order_axioms(rng),
        "GB input-order invariance + reduce idempotence": _gb_properties(rng),
        "A-homogeneity + coprime terms": _toric_properties(verified),
        "Hilbert-basis minimality + generation": _hilbert_properties(),
        "gcd/ideal fiber-graph equivalence": _mode_equivalence(small),
        "bounded injectivity at 1 + max degree": all(lemma11_check(I, 1 + max_degree(I.reduced_gb))
                                                     for I in verified),
        "JSON round-trip": _round_trips(small),
    }
    ok = all(checks.values())
    record(8, ok, "; ".join(f"{k}: {'ok' if v else 'FAILED'}" for k, v in checks.items()))
    assert ok


def test_criterion_9_numbering_search():
    """Attempted, not required: the offline search report, or a bounded live search without it."""
    parts, reproduced = [], False
    if NUMBERING_REPORT.exists():
        report = json.loads(NUMBERING_REPORT.read_text())
        for res in report["result"]:
            reproduced |= res["reproduced"]
            closest = sorted({s["closest"] for s in res["per_convention"].values() if s["closest"] is not None},
                             key=lambda v: abs(v - res["target"]))[:1]
            parts.append(f"A{res['n']}: {res['attempts']} attempts over {len(res['per_convention'])} numbering "
                         f"conventions, target {res['target']}, closest {closest}, "
                         f"{'REPRODUCED' if res['reproduced'] else 'inconclusive'}")
    else:
        claim = A_LEX_CLAIMS[4]
        live = numbering_search(ade_configuration("A", 4), claim.ranking, claim.target, claim.count,
                                conventions=["native"])
        reproduced = any(a.reproduces for a in live)
        sizes = sorted({a.gb_size for a in live if a.gb_size is not None})
        parts.append(f"A4 live search (native numbering only, {len(live)} placements of the unlisted variable): "
                     f"smallest GB {sizes[:1]}, target 54; full report absent (scripts/numbering_search.py)")
    record(9, True, "; ".join(parts), verdict="PASS (reproduced)" if reproduced else "PASS (inconclusive)")
