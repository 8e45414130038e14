# src/pgl3/surface/__init__.py
from pgl3.surface.epsilon import (
    STANDARD_PATTERN,
    TrianglePattern,
    bootstrap_pattern,
    epsilon_of_triangulation,
)
from pgl3.surface.farey import farey_window, thompson_flip
from pgl3.surface.flips import (
    commuting_flips,
    flip_closed_form,
    flip_path,
    flip_sequence,
    flip_via_mutations,
    pentagon_map,
    pentagon_sequence,
    quadrilateral_labels,
    transition_map,
)
from pgl3.surface.marked_points import frozen_names, interior_names, point_names
from pgl3.surface.sigma import sigma_involution, sigma_map
from pgl3.surface.triangulation import (
    Triangulation,
    coordinate_count,
    polygon_triangulation,
    surface_triangulation,
    triangulation_from_darts,
)
