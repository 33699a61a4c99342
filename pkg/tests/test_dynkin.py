"""ADE graphs, incidence matrices, Hilbert bases and closed-form configurations."""

from math import comb

import pytest

from toricsing.dynkin import (
    Configuration,
    ade_configuration,
    ade_graph,
    closed_form_configuration,
    decomposes,
    default_bound,
    dimensions,
    generates_box,
    incidence_matrix,
    integral_cycle,
    is_hilbert_minimal,
    is_negative_definite,
    lipman_configuration,
    remark_dimensions,
)
from toricsing.errors import BoundInsufficient, InvalidInput


def test_graph_shapes():
    g = ade_graph("A", 3)
    assert g.edges == {(1, 2), (2, 3)} and g.is_tree()
    d4 = ade_graph("D", 4)
    centre = [v for v in range(1, 5) if len(d4.neighbours(v)) == 3]
    assert len(centre) == 1
    e8 = ade_graph("E", 8)
    assert e8.is_tree() and sorted(len(e8.neighbours(v)) for v in range(1, 9)).count(3) == 1
    for kind, n in [("A", 0), ("D", 3), ("E", 9), ("F", 4)]:
        with pytest.raises(InvalidInput):
            ade_graph(kind, n)


def test_incidence_examples():
    assert incidence_matrix(ade_graph("A", 2)) == ((-2, 1), (1, -2))
    assert incidence_matrix(ade_graph("A", 1)) == ((-2,),)
    m = incidence_matrix(ade_graph("D", 4))
    assert any(sum(1 for v in row if v == 1) == 3 for row in m)


@pytest.mark.parametrize("kind,n", [("A", k) for k in range(1, 9)] + [("D", k) for k in range(4, 10)]
                         + [("E", 6), ("E", 7), ("E", 8)])
def test_negative_definite(kind, n):
    m = incidence_matrix(ade_graph(kind, n))
    assert is_negative_definite(m)
    assert all(m[i][j] == m[j][i] for i in range(n) for j in range(n))


def test_not_negative_definite():
    assert not is_negative_definite([[-2, 2], [2, -2]])
    assert not is_negative_definite([[0]])
    with pytest.raises(InvalidInput):
        lipman_configuration([[-2, 2], [2, -2]])


def test_lipman_examples():
    assert set(ade_configuration("A", 2).points) == {(3, 0), (0, 3), (1, 1)}
    assert set(ade_configuration("E", 8).points) == {tuple(int(i == j) for j in range(8)) for i in range(8)}
    assert set(ade_configuration("D", 4).points) == set(closed_form_configuration("D", 4).points)


def test_bound_insufficient():
    with pytest.raises(BoundInsufficient):
        lipman_configuration(incidence_matrix(ade_graph("A", 4)), bound=2)


CASES = [("D", n) for n in range(4, 11)] + [("E", 6), ("E", 7), ("E", 8)]


@pytest.mark.parametrize("kind,n", CASES)
def test_closed_form_against_hilbert_basis(kind, n):
    closed = closed_form_configuration(kind, n)
    hb = ade_configuration(kind, n)
    if kind == "D" and n % 2 == 1:
        # the odd closed form lists the Hilbert basis plus 2m decomposable points
        m = (n - 1) // 2
        extra = set(closed.points) - set(hb.points)
        assert set(hb.points) <= set(closed.points)
        assert len(extra) == 2 * m
        assert all(decomposes(hb.points, p) for p in extra)
    else:
        assert set(closed.points) == set(hb.points)


@pytest.mark.parametrize("kind,n", [("A", k) for k in range(2, 6)] + CASES)
def test_hilbert_basis_certificates(kind, n):
    c = ade_configuration(kind, n)
    m = incidence_matrix(ade_graph(kind, n))
    assert is_hilbert_minimal(c)
    assert generates_box(c, m, min(default_bound(n), 6 if n <= 6 else 3 if n <= 8 else 2))
    for p in c.points:
        C = integral_cycle(m, p)
        assert C is not None
        assert all(sum(m[i][j] * C[j] for j in range(n)) == -p[i] for i in range(n))


def test_closed_form_examples():
    d4 = closed_form_configuration("D", 4)
    assert set(d4.points) == {(0, 0, 2, 0), (0, 1, 0, 0), (2, 0, 0, 0), (0, 0, 0, 2), (1, 0, 1, 1)}
    e7 = closed_form_configuration("E", 7)
    e = lambda *ix: tuple(sum(1 for i in ix if i == j) for j in range(1, 8))
    assert set(e7.points) == {e(1), e(2), e(3), e(4, 4), e(5), e(6, 6), e(7, 7), e(4, 6), e(4, 7), e(6, 7)}
    assert closed_form_configuration("D", 5).N == 15  # 11 Hilbert-basis points + 4 decomposable ones
    assert ade_configuration("D", 5).N == 11
    with pytest.raises(InvalidInput):
        closed_form_configuration("A", 3)


@pytest.mark.parametrize("m", range(2, 9))
def test_dimension_formulas(m):
    assert dimensions(closed_form_configuration("D", 2 * m)) == (2 * m, m - 1 + comb(m - 1, 2))
    assert remark_dimensions("D", 2 * m) == (2 * m, m - 1 + comb(m - 1, 2))
    expected = (2 * m + 1, 2 * m + 1 + comb(m, 2))
    assert remark_dimensions("D", 2 * m + 1) == expected
    if m <= 5:
        assert dimensions(ade_configuration("D", 2 * m + 1)) == expected


def test_odd_closed_form_codimension_counts_extra_points():
    for m in range(2, 7):
        d, codim = dimensions(closed_form_configuration("D", 2 * m + 1))
        assert (d, codim) == (2 * m + 1, 2 * m + 1 + comb(m, 2) + 2 * m)


def test_e8_dimensions():
    assert dimensions(closed_form_configuration("E", 8)) == (8, 0)


def test_configuration_validation():
    with pytest.raises(ValueError):
        Configuration(((1, 0), (1, 0)), ())
    with pytest.raises(ValueError):
        Configuration(((0, 0),), ())
    with pytest.raises(ValueError):
        Configuration(((1, -1),), ())
