"""Exact enumeration and classification of combinatorial 3-spheres and 4-polytopes."""

from _core import (  # noqa: F401
    canonical_key_hex,
    classify_sphere,
    convex_hull,
    enumerate_simplicial,
    enumerate_spheres,
    generate_polytopes,
    parse_sphere,
    sphere_checks,
    verify_realization,
)
