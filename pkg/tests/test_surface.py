from fractions import Fraction

import pytest

from pgl3.algebra.ratfunc import RatFunc
from pgl3.cluster.mutation import compose
from pgl3.cluster.poisson import check_poisson_preserved, poisson_bracket
from pgl3.core.exceptions import InvalidInputError, InvalidTriangulationError
from pgl3.services.checks import check_classical_pentagon, check_flip_involution
from pgl3.surface.epsilon import STANDARD_PATTERN, bootstrap_pattern, epsilon_of_triangulation
from pgl3.surface.farey import farey_window, thompson_flip
from pgl3.surface.flips import (
    commuting_flips,
    flip_closed_form,
    flip_formulas,
    flip_path,
    flip_via_mutations,
    quadrilateral_labels,
    transition_map,
)
from pgl3.surface.marked_points import frozen_names, interior_names
from pgl3.surface.sigma import is_sigma_fixed, sigma_involution, sigma_map
from pgl3.surface.triangulation import (
    coordinate_count,
    polygon_triangulation,
    surface_triangulation,
    triangulation_from_darts,
)


# triangulations


def test_polygon_fan(pentagon):
    assert pentagon.diagonals() == {(0, 2), (0, 3)}
    assert len(pentagon.triangles) == 3
    assert len(interior_names(pentagon)) == 7
    assert len(frozen_names(pentagon)) == 10


def test_crossing_diagonals_are_rejected():
    with pytest.raises(InvalidTriangulationError):
        polygon_triangulation(4, [(0, 2), (1, 3)])


@pytest.mark.parametrize("genus, punctures", [(1, 1), (0, 3), (1, 2)])
def test_coordinate_count(genus, punctures):
    tri = surface_triangulation(genus, punctures)
    seed = epsilon_of_triangulation(tri)
    assert len(seed.vertices) == coordinate_count(genus, punctures)
    assert tri.euler_characteristic() == 2 - 2 * genus


def test_torus_has_eight_coordinates(torus):
    assert len(torus.triangles) == 2
    assert len(torus.internal_edges()) == 3
    assert len(epsilon_of_triangulation(torus).vertices) == 8


def test_darts_must_glue_to_a_surface():
    with pytest.raises(InvalidTriangulationError):
        triangulation_from_darts([["0", "1", "2"]])


def test_no_ideal_triangulation_of_a_twice_punctured_sphere():
    with pytest.raises(InvalidInputError):
        surface_triangulation(0, 2)


# epsilon


def test_quadrilateral_epsilon(quad):
    e = quad.edge_between(0, 2)
    labels = quadrilateral_labels(quad, e)
    seed = epsilon_of_triangulation(quad)

    def eps(a, b):
        return seed.eps(labels[a], labels[b])

    assert eps("Z", "W") == 0
    assert eps("A", "Z") == -1
    assert eps("H", "Z") == 1
    assert eps("D", "W") == 1
    assert eps("E", "W") == -1
    assert eps("X", "Z") == 1
    assert eps("X", "W") == -1
    assert eps("Y", "Z") == -1
    assert eps("Y", "W") == 1


def test_single_triangle_pattern():
    tri = polygon_triangulation(3)
    seed = epsilon_of_triangulation(tri)
    center = "tri:0_1_2:center"
    values = sorted(seed.neighbors(center).values())
    assert values == [-1, -1, -1, 1, 1, 1]
    assert all(abs(v) <= 1 for _, _, v in seed.arrows)


def test_bootstrap_finds_the_standard_pattern():
    result = bootstrap_pattern()
    assert result.pattern == STANDARD_PATTERN
    assert len(result.survivors) == 2
    assert result.candidates == 3**6


def test_quadrilateral_bracket_constant_two(quad):
    seed = epsilon_of_triangulation(quad)
    labels = quadrilateral_labels(quad, quad.edge_between(0, 2))
    x, z = RatFunc.var(labels["X"]), RatFunc.var(labels["Z"])
    assert poisson_bracket(seed, x, z, 2) == 2 * x * z


# flips


def test_flip_formulas_at_ones():
    ones = {k: Fraction(1) for k in "ABCDEFGHXYZW"}
    images = flip_formulas(ones)
    assert images["A"] == 2
    assert images["B"] == 2
    assert images["C"] == Fraction(1, 2)
    assert images["D"] == Fraction(1, 2)
    assert images["X"] == 1
    assert images["Z"] == 1
    assert images["W"] == 1


def test_flip_closed_form_images(quad):
    e = quad.edge_between(0, 2)
    labels = quadrilateral_labels(quad, e)
    new_tri, cmap = flip_closed_form(quad, e)
    a, z = RatFunc.var(labels["A"]), RatFunc.var(labels["Z"])
    assert new_tri.diagonals() == {(1, 3)}
    assert cmap.images[labels["A"]] == a * (1 + z)
    assert cmap.images[labels["H"]] == RatFunc.var(labels["H"]) * z / (1 + z)


def test_flip_via_mutations_matches_closed_form(quad):
    e = quad.edge_between(0, 2)
    assert flip_closed_form(quad, e)[1].equals(flip_via_mutations(quad, e)[1])


def test_flip_z_and_w_mutations_commute(quad):
    e = quad.edge_between(0, 2)
    one = flip_via_mutations(quad, e)[1]
    other = flip_via_mutations(quad, e, order=("W", "Z", "X", "Y"))[1]
    assert one.equals(other)


def test_flip_then_back_is_identity(quad):
    e = quad.edge_between(0, 2)
    new_tri, forward = flip_closed_form(quad, e)
    restored, backward = flip_closed_form(new_tri, e, back=True)
    assert restored.diagonals() == quad.diagonals()
    assert compose(forward, backward).is_identity()


def test_flip_involution_check_on_hexagon():
    report = check_flip_involution(polygon_triangulation(6))
    assert report.passed
    assert report.details["edges"] == 3


def test_flips_preserve_the_bracket(pentagon):
    for e in pentagon.internal_edges():
        assert check_poisson_preserved(flip_closed_form(pentagon, e)[1], 2)


def test_boundary_edge_cannot_be_flipped(quad):
    with pytest.raises(InvalidInputError):
        flip_closed_form(quad, quad.edge_between(0, 1))


def test_disjoint_flips_commute():
    hexagon = polygon_triangulation(6, [(0, 2), (0, 3), (3, 5)])
    assert commuting_flips(hexagon, (0, 2), (3, 5))


def test_flip_path_and_transition(quad):
    target = polygon_triangulation(4, [(1, 3)])
    assert flip_path(quad, target) == [(0, 2)]
    path, cmap = transition_map(quad, target)
    assert path == [(0, 2)]
    assert cmap.target.same_as(epsilon_of_triangulation(target))


@pytest.mark.slow
def test_classical_pentagon():
    report = check_classical_pentagon(passes=2)
    assert report.passed
    assert set(report.details["permutation"]) == set(interior_names(polygon_triangulation(5)))


# sigma


def test_sigma_swaps_edge_points_at_unit_centers(quad):
    point = {
        "tri:0_1_2:center": Fraction(1),
        "tri:0_2_3:center": Fraction(1),
        "edge:0_2:near:0": Fraction(2),
        "edge:0_2:near:2": Fraction(3),
    }
    image = sigma_involution(quad, point)
    assert image["edge:0_2:near:0"] == 3
    assert image["edge:0_2:near:2"] == 2


def test_sigma_fixed_points(quad):
    point = {
        "tri:0_1_2:center": Fraction(1),
        "tri:0_2_3:center": Fraction(1),
        "edge:0_2:near:0": Fraction(5, 2),
        "edge:0_2:near:2": Fraction(5, 2),
    }
    assert is_sigma_fixed(quad, point)


def test_sigma_is_an_involution(pentagon):
    sigma = sigma_map(pentagon)
    assert compose(sigma, sigma).is_identity()


# Farey windows


def test_farey_depth_zero():
    window = farey_window(0)
    assert set(window.vertex_values) == {"0", "inf", "1", "-1"}
    assert len(window.triangles) == 2


def test_farey_depth_one():
    window = farey_window(1)
    assert set(window.vertex_values) == {"0", "inf", "1", "-1", "1/2", "2", "-1/2", "-2"}
    assert len(window.triangles) == 6


def test_thompson_flip_moves_the_distinguished_edge():
    window = farey_window(0)
    a, b = window.distinguished
    new_window, _ = thompson_flip(window, window.edge_between(a, b))
    assert set(new_window.distinguished) != {a, b}
