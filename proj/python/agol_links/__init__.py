"""Python access to the K_N link construction."""

import json

from ._core import (
    AgolError,
    Curve,
    beta_curve,
    braid_word,
    closure_components,
    component_count,
    crossing_census,
    dt_code,
    gauss_code,
    geometric_intersection,
    oracle_intersection,
    path_length,
    pd_code,
    render_svg,
    slope_range,
    validate_template_json,
)
from . import _core


def build_path(n, l):
    return json.loads(_core.build_path_json(n, l))


def build_template(n, l, extra_full_twists=2):
    return json.loads(_core.template_json(n, l, extra_full_twists))


def validate_template(doc):
    """List of (json_pointer, message); empty means valid."""
    return validate_template_json(json.dumps(doc))


def bound_report(n, l, slope=0):
    return json.loads(_core.bound_report_json(n, l, slope))


__all__ = [
    "AgolError",
    "Curve",
    "beta_curve",
    "bound_report",
    "braid_word",
    "build_path",
    "build_template",
    "closure_components",
    "component_count",
    "crossing_census",
    "dt_code",
    "gauss_code",
    "geometric_intersection",
    "oracle_intersection",
    "path_length",
    "pd_code",
    "render_svg",
    "slope_range",
    "validate_template",
]
