from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from terravis.errors import DuplicateAbscissa, ParseError, TooSmall
from terravis.fixtures import C6_TERRAIN, FIG1, FUNNEL_FIG
from terravis.graph import check_bar_property, check_x_property
from terravis.terrain import (
    CONVEX,
    ENDPOINT,
    REFLEX,
    Terrain,
    affine,
    build_visibility_graph,
    classify_vertices,
    naive_visibility_graph,
    parse_terrain,
    sees,
    shear,
)

from conftest import terrains

FIG1_TEXT = "0 2\n1 0\n2 1\n2.5 -1\n3.5 4\n5 3"
FIG1_EDGES = [(0, 1), (0, 2), (0, 4), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)]


# -- parsing ---------------------------------------------------------------------


def test_parse_fig1_text():
    t = parse_terrain(FIG1_TEXT)
    assert t.n == 6
    assert t == FIG1
    assert t.points[3].x == Fraction(5, 2)


def test_parse_minimal_flat():
    t = parse_terrain("0 0\n1 0")
    assert t.n == 2
    assert build_visibility_graph(t).edges() == [(0, 1)]


def test_parse_duplicate_x():
    with pytest.raises(DuplicateAbscissa) as exc:
        parse_terrain("0 0\n0 1")
    assert exc.value.indices == (0, 1)


def test_parse_too_small():
    with pytest.raises(TooSmall):
        parse_terrain("# just one vertex\n3 4\n")
    with pytest.raises(TooSmall):
        parse_terrain("")


def test_parse_comments_blank_lines_and_rationals():
    text = "# header\n\n0 1/3   # inline\n  1\t-2.25\n\n7/2 0\n"
    t = parse_terrain(text)
    assert [p.y for p in t.points] == [Fraction(1, 3), Fraction(-9, 4), 0]
    assert t.points[2].x == Fraction(7, 2)


@pytest.mark.parametrize("text, line", [("0 0\n1 x\n", 2), ("0 0 0\n1 1\n", 1), ("1\n2 2\n", 1),
                                        ("0 0\n1 1/0\n", 2)])
def test_parse_malformed(text, line):
    with pytest.raises(ParseError) as exc:
        parse_terrain(text)
    assert exc.value.line == line


def test_parse_sorts_by_x():
    t = parse_terrain("2 5\n0 1\n1 0\n")
    assert [p.x for p in t.points] == [0, 1, 2]
    assert [p.y for p in t.points] == [1, 0, 5]


def test_to_text_round_trip():
    assert parse_terrain(FIG1.to_text()) == FIG1
    assert parse_terrain(C6_TERRAIN.to_text()) == C6_TERRAIN


def test_terrain_rejects_unsorted_points():
    with pytest.raises(ValueError):
        Terrain(((1, 0), (0, 0)))


# -- visibility ------------------------------------------------------------------


def test_sees_fig1():
    assert sees(FIG1, 0, 2)
    assert not sees(FIG1, 1, 3)
    assert sees(FIG1, 2, 0)


def test_sees_consecutive_always():
    for i in range(FIG1.n - 1):
        assert sees(FIG1, i, i + 1)


def test_sees_errors():
    with pytest.raises(IndexError):
        sees(FIG1, 0, 6)
    with pytest.raises(IndexError):
        sees(FIG1, -1, 2)
    with pytest.raises(ValueError):
        sees(FIG1, 2, 2)


def test_collinear_vertex_blocks():
    t = Terrain(((0, 0), (1, 1), (2, 2)))
    assert not sees(t, 0, 2)
    assert build_visibility_graph(t).edges() == [(0, 1), (1, 2)]


def test_near_collinear_is_exact():
    # a float evaluation of this triple rounds to collinear
    eps = Fraction(1, 10**30)
    below = Terrain(((0, 0), (Fraction(1, 3), Fraction(1, 3) - eps), (1, 1)))
    above = Terrain(((0, 0), (Fraction(1, 3), Fraction(1, 3) + eps), (1, 1)))
    assert sees(below, 0, 2)
    assert not sees(above, 0, 2)


def test_fig1_graph():
    assert build_visibility_graph(FIG1).edges() == FIG1_EDGES


def test_two_vertex_graph():
    assert build_visibility_graph(Terrain(((0, 5), (1, -5)))).edges() == [(0, 1)]


@given(terrains(max_n=40))
def test_sweep_matches_naive(t):
    assert build_visibility_graph(t) == naive_visibility_graph(t)


@given(terrains(max_n=15), st.data())
def test_sees_symmetric_and_matches_graph(t, data):
    g = build_visibility_graph(t)
    i = data.draw(st.integers(0, t.n - 1))
    j = data.draw(st.integers(0, t.n - 1).filter(lambda v: v != i))
    assert sees(t, i, j) == sees(t, j, i) == g.has_edge(i, j)


@given(terrains(max_n=40))
def test_hamiltonian_path_and_properties(t):
    g = build_visibility_graph(t)
    assert all(g.has_edge(i, i + 1) for i in range(t.n - 1))
    assert check_x_property(g) is None
    assert check_bar_property(g) is None


# -- affine invariance -----------------------------------------------------------


def test_shear_identity():
    assert shear(FIG1, 0) == FIG1


def test_shear_fig1_m7():
    assert build_visibility_graph(shear(FIG1, 7)).edges() == FIG1_EDGES


def test_shear_two_vertices():
    t = shear(Terrain(((0, 0), (1, 0))), -3)
    assert t.points[1].y == -3
    assert build_visibility_graph(t).edges() == [(0, 1)]


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@given(terrains(), rationals)
def test_shear_invariance(t, m):
    assert build_visibility_graph(shear(t, m)) == build_visibility_graph(t)


@given(terrains(), rationals, rationals)
def test_translation_invariance(t, dx, dy):
    assert build_visibility_graph(affine(t, shift_x=dx, shift_y=dy)) == build_visibility_graph(t)


@given(terrains(), st.fractions(min_value=Fraction(1, 9), max_value=50, max_denominator=9))
def test_scale_invariance(t, c):
    assert build_visibility_graph(affine(t, scale=c)) == build_visibility_graph(t)


def test_affine_rejects_nonpositive_scale():
    with pytest.raises(ValueError):
        affine(FIG1, scale=0)
    with pytest.raises(ValueError):
        affine(FIG1, scale=-1)


# -- classification --------------------------------------------------------------


def test_classify_fig1():
    labels = classify_vertices(FIG1)
    assert labels[0] == labels[-1] == ENDPOINT
    assert labels[1] == CONVEX
    assert labels[2] == REFLEX
    assert labels.count(ENDPOINT) == 2


def test_classify_funnel_fig_single_convex():
    labels = classify_vertices(FUNNEL_FIG)
    assert [i for i, c in enumerate(labels) if c == CONVEX] == [3]


def test_classify_two_vertices():
    assert classify_vertices(Terrain(((0, 0), (1, 0)))) == [ENDPOINT, ENDPOINT]


@given(terrains(min_n=3))
def test_convex_iff_neighbours_see_each_other(t):
    labels = classify_vertices(t)
    for p in range(1, t.n - 1):
        assert (labels[p] == CONVEX) == sees(t, p - 1, p + 1)
