"""Monomials, term orders, reduction and the binomial Buchberger engine."""

import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from toricsing.algebra import (
    Binomial,
    MarkedBasis,
    TermOrder,
    buchberger,
    certify_marked,
    compare,
    initial_ideal,
    is_groebner_marked,
    is_squarefree,
    make_binomial,
    mono_mul,
    reduce,
    spair,
)
from toricsing.errors import BudgetExceeded, DimensionError, IncoherentMarking

N = 4
mono = st.tuples(*[st.integers(0, 4)] * N)


def orders(n=N):
    perm = list(range(n))[::-1]
    return [
        TermOrder.lex(n),
        TermOrder.lex(n, perm),
        TermOrder.grlex(n),
        TermOrder.degrevlex(n),
        TermOrder.degrevlex(n, perm, grading=[1, 2, 3, 4][:n]),
        TermOrder.weight([3, 1, 4, 1][:n]),
        TermOrder.weight([0, 1, 0, 2][:n], None, [1, 0, 0, 0][:n]),
    ]


binomial_pairs = st.lists(st.tuples(mono, mono).filter(lambda p: p[0] != p[1]), min_size=1, max_size=3)


# ---------------------------------------------------------------------------
# order axioms


@pytest.mark.parametrize("order", orders(), ids=lambda o: o.describe())
def test_order_axioms_sampled(order):
    rng = random.Random(1)
    one = (0,) * N
    for _ in range(10_000):
        a, b, t = (tuple(rng.randint(0, 5) for _ in range(N)) for _ in range(3))
        c = compare(order, a, b)
        assert c == -compare(order, b, a)  # antisymmetry / totality
        assert (c == 0) == (a == b)
        if c < 0:
            assert compare(order, mono_mul(a, t), mono_mul(b, t)) < 0  # multiplicative
        assert compare(order, one, a) <= 0  # 1 is minimal


@given(mono, mono, mono)
def test_order_transitive(a, b, c):
    for o in orders():
        if compare(o, a, b) < 0 and compare(o, b, c) < 0:
            assert compare(o, a, c) < 0


def test_compare_examples():
    lex = TermOrder.lex(2)
    assert compare(lex, (1, 0), (0, 5)) == 1
    assert compare(TermOrder.degrevlex(3), (1, 0, 1), (0, 2, 0)) == -1
    assert compare(TermOrder.grlex(3), (1, 0, 1), (0, 2, 0)) == 1


def test_compare_dimension_error():
    with pytest.raises(DimensionError):
        compare(TermOrder.lex(2), (1, 0), (1, 0, 0))


def test_invalid_orders():
    with pytest.raises(ValueError):
        TermOrder.lex(3, [0, 0, 1])
    with pytest.raises(ValueError):
        TermOrder.weight([-1, 1])  # 1 would not be minimal
    with pytest.raises(ValueError):
        TermOrder.degrevlex(2, None, [0, 1])


# ---------------------------------------------------------------------------
# binomials, S-pairs, reduction


def test_binomial_invariants():
    with pytest.raises(ValueError):
        Binomial((1, 0), (1, 0))
    b = Binomial((0, 1), (1, 0), marked=False)
    assert b == Binomial((1, 0), (0, 1), marked=False)
    assert b.lead == (1, 0)  # degrevlex-larger monomial first


def test_spair_examples():
    # E7 generators in variables x4..x10 -> indices 0..6
    def m(**e):
        v = [0] * 7
        for k, x in e.items():
            v[int(k[1:]) - 4] = x
        return tuple(v)

    f = Binomial(m(x7=1, x8=1), m(x9=1, x10=1))
    g = Binomial(m(x6=1, x9=1), m(x8=1, x10=1))
    s = spair(f, g)
    assert s.unordered() == frozenset({m(x6=1, x9=2, x10=1), m(x7=1, x8=2, x10=1)})
    assert spair(f, f) is None
    h1, h2 = Binomial((1, 0, 0, 0), (0, 1, 0, 0)), Binomial((0, 0, 1, 0), (0, 0, 0, 1))
    B = MarkedBasis((h1, h2))
    assert reduce(spair(h1, h2), B) is None


def test_reduce_single_step():
    # x6x7x9 - z modulo x6x7 - x10^2  (variables x6, x7, x9, x10, z)
    B = MarkedBasis((Binomial((1, 1, 0, 0, 0), (0, 0, 0, 2, 0)),))
    r = reduce(Binomial((1, 1, 1, 0, 0), (0, 0, 0, 0, 1)), B)
    assert r.unordered() == frozenset({(0, 0, 1, 2, 0), (0, 0, 0, 0, 1)})
    f = B.elements[0]
    assert reduce(f, B) is None


@given(binomial_pairs, st.tuples(mono, mono).filter(lambda p: p[0] != p[1]), st.sampled_from(range(7)))
def test_reduce_idempotent(gens, f, oi):
    order = orders()[oi]
    G = buchberger([make_binomial(a, b, order) for a, b in gens], order)
    r = reduce(make_binomial(*f, order), G, order)
    if r is not None:
        assert reduce(r, G, order) == r
        for g in G:
            from toricsing.algebra import divides
            assert not divides(g.lead, r.lead) and not divides(g.lead, r.trail)


def test_incoherent_reduction_cycles_detected():
    B = MarkedBasis((Binomial((1, 0), (0, 1)), Binomial((0, 1), (1, 0))))
    with pytest.raises(IncoherentMarking):
        reduce(Binomial((2, 0), (0, 0)), B, max_steps=50)


# ---------------------------------------------------------------------------
# Buchberger


@given(binomial_pairs, st.sampled_from(range(7)), st.randoms(use_true_random=False))
def test_reduced_gb_input_order_invariant(gens, oi, rnd):
    order = orders()[oi]
    bs = [make_binomial(a, b, order) for a, b in gens]
    G1 = buchberger(bs, order)
    shuffled = bs[:]
    rnd.shuffle(shuffled)
    # also feed redundant combinations (S-pairs of the input)
    extra = [s for s in (spair(bs[0], b, order) for b in bs[1:]) if s is not None]
    G2 = buchberger(shuffled + extra, order)
    assert G1.elements == G2.elements
    assert all(isinstance(g, Binomial) for g in G1)  # binomial closure
    assert is_groebner_marked(G1)


def _sympy_gb(gens, order):
    xs = sympy.symbols(f"x1:{N + 1}")
    polys = [sympy.Mul(*[x**e for x, e in zip(xs, a)]) - sympy.Mul(*[x**e for x, e in zip(xs, b)]) for a, b in gens]
    name = {"lex": "lex", "grlex": "grlex", "degrevlex": "grevlex"}[order.kind]
    G = sympy.groebner(polys, *xs, order=name)
    out = set()
    for p in G.exprs:
        P = sympy.Poly(p, *xs)
        terms = P.terms()
        assert len(terms) == 2 and sorted(c for _, c in terms) == [-1, 1]
        lead = next(m for m, c in terms if c == 1)
        trail = next(m for m, c in terms if c == -1)
        out.add((tuple(lead), tuple(trail)))
    return out


@given(binomial_pairs, st.sampled_from(["lex", "grlex", "degrevlex"]))
def test_buchberger_matches_sympy(gens, kind):
    order = getattr(TermOrder, kind)(N)
    G = buchberger([make_binomial(a, b, order) for a, b in gens], order)
    assert {(g.lead, g.trail) for g in G} == _sympy_gb(gens, order)


def test_buchberger_examples():
    f = Binomial((0, 0, 3), (1, 1, 0))
    for o in (TermOrder.lex(3, [2, 0, 1]), TermOrder.degrevlex(3)):
        assert buchberger([f], o).elements == (f,)


def test_buchberger_budget():
    gens = [make_binomial((3, 0, 0, 1), (0, 2, 1, 0)), make_binomial((0, 3, 1, 0), (1, 0, 0, 2)),
            make_binomial((1, 1, 1, 1), (0, 0, 0, 4))]
    with pytest.raises(BudgetExceeded):
        buchberger(gens, TermOrder.lex(4), max_steps=3)


def test_budget_env_var(monkeypatch):
    gens = [make_binomial((3, 0, 0, 1), (0, 2, 1, 0)), make_binomial((0, 3, 1, 0), (1, 0, 0, 2))]
    monkeypatch.setenv("TORICSING_BUDGET_STEPS", "2")
    with pytest.raises(BudgetExceeded):
        buchberger(gens, TermOrder.lex(4))


# ---------------------------------------------------------------------------
# initial ideals and certification


def test_initial_ideal_and_squarefree():
    B = MarkedBasis((Binomial((0, 0, 3), (1, 1, 0)),))
    assert initial_ideal(B) == [(0, 0, 3)]
    assert not is_squarefree(initial_ideal(B))
    assert is_squarefree([(0, 1, 1), (1, 1, 0)])


def test_certify_examples():
    w = certify_marked(MarkedBasis((Binomial((0, 0, 3), (1, 1, 0)),)))
    assert w is not None and 3 * w[2] > w[0] + w[1]
    w = certify_marked(MarkedBasis((Binomial((0, 0, 1), (1, 1, 0)),)))
    assert w is not None and w[2] > w[0] + w[1]
    assert certify_marked(MarkedBasis((Binomial((1, 0), (0, 1)), Binomial((0, 1), (1, 0))))) is None
    with pytest.raises(IncoherentMarking):
        is_groebner_marked(MarkedBasis((Binomial((1, 0), (0, 1)), Binomial((0, 1), (1, 0)))))


@given(binomial_pairs, st.sampled_from(range(7)))
def test_certify_soundness(gens, oi):
    order = orders()[oi]
    G = buchberger([make_binomial(a, b, order) for a, b in gens], order)
    w = certify_marked(G)
    assert w is not None and all(v > 0 for v in w)
    for g in G:
        assert sum(x * y for x, y in zip(w, g.exponent())) > 0


def test_deleting_an_element_breaks_gb():
    from toricsing.paperdata import paper_basis

    G = paper_basis("Deven", 8).elements
    assert is_groebner_marked(G)
    smaller = MarkedBasis(G.elements[1:], G.names)
    assert not is_groebner_marked(smaller)


def test_reduced_flag_rejects_dividing_leads():
    with pytest.raises(ValueError):
        MarkedBasis((Binomial((1, 0), (0, 1)), Binomial((2, 0), (0, 3))), reduced=True)
