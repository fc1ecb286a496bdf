"""Extreme points and convex hulls of the limit sets of f_j(z) = c z + xi^j.

Angles are fractions of a full turn: pass "p/q" strings for exact arithmetic
or floats for float mode.
"""
from ._polyifs import (
    AmbiguousTie,
    DomainError,
    StructuralError,
    convex_hull_2d,
    convexity_necessary,
    digit_choices,
    enumerate_cloud,
    evaluate,
    extreme_points,
    face_is_interval,
    fixed_point,
    hull_polygon,
    period_b,
    render_limit_set,
    support_value,
    tail_bound,
    theta_set,
    verify,
)

__all__ = [
    "AmbiguousTie",
    "DomainError",
    "StructuralError",
    "convex_hull_2d",
    "convexity_necessary",
    "digit_choices",
    "enumerate_cloud",
    "evaluate",
    "extreme_points",
    "face_is_interval",
    "fixed_point",
    "hull_polygon",
    "period_b",
    "render_limit_set",
    "support_value",
    "tail_bound",
    "theta_set",
    "verify",
]
