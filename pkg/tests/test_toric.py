"""Toric ideals: construction, homogeneity, saturation methods and standard monomials."""

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import configuration, ideal
from toricsing.algebra import Binomial, TermOrder, is_groebner_marked, make_binomial
from toricsing.dynkin import Configuration
from toricsing.errors import DimensionError
from toricsing.lattice import enumerate_fiber
from toricsing.toric import (
    adegree,
    coprime_terms,
    ideal_from_generators,
    ideal_membership,
    ideals_equal,
    is_homogeneous,
    lattice_kernel,
    lemma11_check,
    lemma11_witness,
    max_degree,
    monomials_up_to,
    standard_monomials_up_to,
    toric_ideal,
)

configs = st.integers(1, 3).flatmap(
    lambda d: st.lists(st.tuples(*[st.integers(0, 3)] * d).filter(any), min_size=2, max_size=5, unique=True)
).map(lambda pts: Configuration(tuple(pts), ()))


def test_a2_example():
    I = ideal("A", 2)
    assert [(g.lead, g.trail) for g in I.reduced_gb] in ([((0, 0, 3), (1, 1, 0))], [((1, 1, 0), (0, 0, 3))])


def test_e8_is_zero():
    I = ideal("E", 8)
    assert I.is_zero and I.initial_ideal() == []


def test_d4_single_generator():
    I = ideal("D", 4)
    assert len(I.reduced_gb) == 1
    g = I.reduced_gb.elements[0]
    assert is_homogeneous(I.config, g)


@pytest.mark.parametrize("kind,n", [("A", 3), ("A", 4), ("D", 5), ("D", 6), ("E", 6), ("E", 7)])
def test_structural_invariants(kind, n):
    I = ideal(kind, n)
    c = I.config
    assert all(is_homogeneous(c, g) for g in I.reduced_gb)
    assert coprime_terms(I.reduced_gb)  # toric ideals are prime, so no common factors
    assert is_groebner_marked(I.reduced_gb)
    for u in lattice_kernel(c):
        pos = tuple(max(x, 0) for x in u)
        neg = tuple(max(-x, 0) for x in u)
        assert ideal_membership(Binomial(pos, neg, marked=False), I)


@pytest.mark.parametrize("kind,n", [("A", 3), ("A", 4), ("D", 5), ("E", 6)])
def test_methods_agree(kind, n):
    c = configuration(kind, n)
    order = TermOrder.degrevlex(c.N)
    ref = toric_ideal(c, order, method="full")
    for method in ("span", "certify"):
        assert toric_ideal(c, order, method=method).reduced_gb.elements == ref.reduced_gb.elements


def test_unknown_method():
    with pytest.raises(ValueError):
        toric_ideal(configuration("A", 2), method="magic")


def test_order_dimension_mismatch():
    with pytest.raises(DimensionError):
        toric_ideal(configuration("A", 2), TermOrder.lex(4))


@given(configs, st.sampled_from(["lex", "degrevlex"]))
def test_random_configuration_against_fibers(c, kind):
    """Degree-by-degree oracle: standard monomials biject onto their A-degrees."""
    order = getattr(TermOrder, kind)(c.N)
    I = toric_ideal(c, order)
    assert all(is_homogeneous(c, g) for g in I.reduced_gb)
    assert coprime_terms(I.reduced_gb)
    assert lemma11_check(I, 4)
    # every pair in a fiber of small degree is in the ideal
    for m in product(range(3), repeat=c.N):
        b = adegree(c, m)
        for p in enumerate_fiber(c.points, b):
            if p != m:
                assert ideal_membership(Binomial(m, p, marked=False), I)


@given(configs)
def test_order_independence_of_ideal(c):
    I = toric_ideal(c, TermOrder.lex(c.N))
    J = toric_ideal(c, TermOrder.degrevlex(c.N))
    assert ideals_equal(I, J)


def test_non_saturated_ideal_detected():
    c = configuration("A", 3)
    I = ideal("A", 3)
    # drop one generator of the reduced basis: the result is a proper subideal
    sub = ideal_from_generators(c, list(I.reduced_gb)[1:], I.order)
    assert not ideals_equal(I, sub)
    assert lemma11_witness(I, max_degree(I.reduced_gb), sub.reduced_gb) is not None


def test_standard_monomials_count():
    I = ideal("A", 2)
    # k[x,y,z]/(z^3 - xy) in degrevlex: leads xy, so standard monomials avoid xy
    got = standard_monomials_up_to(I, 2)
    lead = I.reduced_gb.elements[0].lead
    expected = [m for D in range(3) for m in product(range(3), repeat=3) if sum(m) == D
                and not all(x >= y for x, y in zip(m, lead))]
    assert sorted(got) == sorted(expected)


def test_lemma11_bad_degree():
    with pytest.raises(ValueError):
        lemma11_check(ideal("A", 2), 0)


def test_make_binomial_membership():
    I = ideal("A", 2)
    assert ideal_membership(make_binomial((0, 0, 6), (2, 2, 0)), I)
    assert not ideal_membership(make_binomial((0, 0, 2), (1, 1, 0)), I)


@given(configs, st.integers(0, 4))
def test_standard_monomials_against_brute_force(c, D):
    I = toric_ideal(c)
    leads = I.initial_ideal()
    brute = [m for m in monomials_up_to(c.N, D) if not any(all(x >= y for x, y in zip(m, l)) for l in leads)]
    assert standard_monomials_up_to(I, D) == brute  # same set, same graded lex order
