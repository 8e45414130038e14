from fractions import Fraction

import pytest

from pgl3.core.exceptions import (
    DegenerateConfigurationError,
    InvalidInputError,
    NonPositiveInputError,
)
from pgl3.geometry.polygons import (
    conic_polygon_pair,
    coords_of_polygon_pair,
    dual_polygon_pair,
    equivalent_pairs,
    is_convex_inscribed,
    polygon_pair_from_coords,
)
from pgl3.geometry.projective import (
    Flag,
    canonical_triangle,
    cross_ratio,
    det3,
    meet,
    triple_ratio,
    triple_ratio_via_lines,
)
from pgl3.geometry.svg import render_svg
from pgl3.services.checks import check_roundtrip, check_sigma
from pgl3.surface.marked_points import interior_names
from pgl3.surface.sigma import is_sigma_fixed, sigma_involution
from pgl3.surface.triangulation import polygon_triangulation


def on_x_axis(t):
    return (t, 0, 1)


INFINITY = (1, 0, 0)


# cross-ratio and triple ratio


@pytest.mark.parametrize("x", [Fraction(1, 2), Fraction(3), Fraction(-5, 7)])
def test_cross_ratio_normalization(x):
    assert cross_ratio(INFINITY, on_x_axis(-1), on_x_axis(0), on_x_axis(x)) == x


def test_cross_ratio_of_finite_points():
    points = [on_x_axis(t) for t in range(4)]
    assert cross_ratio(*points) == Fraction(1, 3)


def test_cross_ratio_rejects_repeats():
    with pytest.raises(DegenerateConfigurationError):
        cross_ratio(on_x_axis(0), on_x_axis(0), on_x_axis(1), on_x_axis(2))


def test_cross_ratio_needs_collinear_points():
    with pytest.raises(DegenerateConfigurationError):
        cross_ratio(on_x_axis(0), on_x_axis(1), on_x_axis(2), (0, 1, 1))


@pytest.mark.parametrize("x", [Fraction(2), Fraction(1, 3), Fraction(7, 5)])
def test_canonical_triangle(x):
    flags = canonical_triangle(x)
    assert triple_ratio(*flags) == x
    assert triple_ratio_via_lines(*flags) == x


def test_canonical_triangle_degenerate_values():
    with pytest.raises(DegenerateConfigurationError):
        canonical_triangle(-1)


def test_ceva_configuration_gives_one():
    # A, B, C are the midpoints of the sides of the triangle cut out by a, b, c
    flags = (
        Flag.of((1, 1, 2), (1, 1, -1)),
        Flag.of((0, 1, 2), (1, 0, 0)),
        Flag.of((1, 0, 2), (0, 1, 0)),
    )
    (A, a), (B, b), (C, c) = ((f.point, f.line) for f in flags)
    cevians = (meet(A, meet(b, c)), meet(B, meet(c, a)), meet(C, meet(a, b)))
    assert det3(*cevians) == 0
    assert triple_ratio(*flags) == 1


def test_menelaus_configuration_gives_minus_one():
    # same sides, with A, B, C on one line
    flags = (
        Flag.of((2, 1, 3), (1, 1, -1)),
        Flag.of((0, 1, 2), (1, 0, 0)),
        Flag.of((2, 0, 1), (0, 1, 0)),
    )
    assert det3(*(f.point for f in flags)) == 0
    assert triple_ratio(*flags) == -1


def test_concurrent_flag_lines_give_minus_one():
    # dual of the collinear case: the lines a, b, c pass through the centroid
    flags = (
        Flag.of((1, 0, 0), (0, -1, 1)),
        Flag.of((0, 1, 0), (1, 0, -1)),
        Flag.of((0, 0, 1), (-1, 1, 0)),
    )
    assert triple_ratio(*flags) == -1


def test_dual_ceva_configuration_gives_one():
    # the lines meet the opposite sides of ABC on the line x + y + z = 0
    flags = (
        Flag.of((1, 0, 0), (0, 1, 1)),
        Flag.of((0, 1, 0), (-1, 0, -1)),
        Flag.of((0, 0, 1), (1, 1, 0)),
    )
    assert triple_ratio(*flags) == 1


def test_flag_point_must_lie_on_line():
    with pytest.raises(InvalidInputError):
        Flag.of((1, 0, 0), (1, 0, 0))


# polygon pairs


def test_kite_coordinates(kite, kite_coordinates, quad):
    assert coords_of_polygon_pair(kite, quad) == kite_coordinates


def test_kite_dual_is_sigma(kite, kite_coordinates, quad):
    dual = coords_of_polygon_pair(dual_polygon_pair(kite), quad)
    assert dual == {
        "tri:0_1_2:center": Fraction(2, 3),
        "tri:0_2_3:center": Fraction(3, 4),
        "edge:0_2:near:0": Fraction(7, 5),
        "edge:0_2:near:2": Fraction(5, 7),
    }
    assert dual == sigma_involution(quad, kite_coordinates)


def test_triangle_with_unit_ratio_has_concurrent_cevians():
    tri = polygon_triangulation(3)
    (center,) = interior_names(tri)
    pair = polygon_pair_from_coords({center: 1}, tri)
    (A, a), (B, b), (C, c) = ((f.point, f.line) for f in pair.flags)
    assert triple_ratio(*pair.flags) == 1
    assert det3(meet(A, meet(b, c)), meet(B, meet(c, a)), meet(C, meet(a, b))) == 0
    assert det3(A, B, C) != 0
    assert is_convex_inscribed(pair)


def test_reconstruction_is_projectively_unique(kite, kite_coordinates, quad):
    rebuilt = polygon_pair_from_coords(kite_coordinates, quad)
    assert equivalent_pairs(rebuilt, kite)
    assert is_convex_inscribed(rebuilt)


def test_reconstruction_needs_positive_values(kite_coordinates, quad):
    point = dict(kite_coordinates, **{"edge:0_2:near:0": Fraction(0)})
    with pytest.raises(NonPositiveInputError):
        polygon_pair_from_coords(point, quad)


def test_reconstruction_needs_every_coordinate(kite_coordinates, quad):
    point = dict(kite_coordinates)
    del point["tri:0_2_3:center"]
    with pytest.raises(InvalidInputError):
        polygon_pair_from_coords(point, quad)


def test_size_mismatch(kite, pentagon):
    with pytest.raises(InvalidInputError):
        coords_of_polygon_pair(kite, pentagon)


def test_roundtrip(rng):
    assert check_roundtrip(rng, trials=10, sizes=(3, 4, 5)).passed


def test_duality_matches_sigma(rng):
    assert check_sigma(rng, trials=5).passed


def test_conic_pair_is_self_dual(quad):
    pair = conic_polygon_pair([-1, 0, 1, 2])
    assert is_convex_inscribed(pair)
    assert equivalent_pairs(dual_polygon_pair(pair), pair)
    assert is_sigma_fixed(quad, coords_of_polygon_pair(pair, quad))


def test_conic_parameters_must_be_distinct():
    with pytest.raises(InvalidInputError):
        conic_polygon_pair([0, 1, 1])


def test_render_svg():
    svg = render_svg(conic_polygon_pair([-1, 0, 1, 2]), size=200)
    assert svg.startswith("<svg")
    assert 'width="200"' in svg
    assert svg.count("<circle") == 4
    assert svg.count("<polygon") == 2
