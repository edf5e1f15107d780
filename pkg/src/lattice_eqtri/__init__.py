"""Counting equilateral triangles with vertices in the integer cube {0..n}^3."""

from .counting import CountReport, ClassContribution, count_for_class, enumerate_classes, et, et_table
from .diophantine import (PlaneSolution, RsPair, admissible_side_classes, is_loeschian, loeschian_reps,
                          odd_square_divisors, solve_plane_equation, solve_rs, two_square_reps)
from .oracle import brute_force_et, brute_force_triangles, vector_pair_et
from .symmetry import LatticeTriangle, OrbitStats, canonicalize, full_orbit, orbit_stats, symmetry_images

__version__ = "0.1.0"
