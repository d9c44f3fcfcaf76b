"""Mirror-invariant unimodular triangulations of dilated lattice triangles."""

from ._core import (
    BoundViolation,
    EnumerationAborted,
    StreamParseError,
    capacity,
    count_naive_symmetric,
    count_region,
    count_symmetric,
    count_via_decomposition,
    edge_counts,
    enumerate_region,
    enumerate_symmetric,
    explicit_bound_check,
    lattice_points,
    log2_rounded,
    lower_bound_1,
    lower_bound_2,
    quadratic_fit,
    render_svg,
    run_cli,
    sandwich_check,
    table_report,
)

__version__ = "0.1.0"

__all__ = [
    "BoundViolation",
    "EnumerationAborted",
    "StreamParseError",
    "capacity",
    "count_naive_symmetric",
    "count_region",
    "count_symmetric",
    "count_via_decomposition",
    "edge_counts",
    "enumerate_region",
    "enumerate_symmetric",
    "explicit_bound_check",
    "lattice_points",
    "log2_rounded",
    "lower_bound_1",
    "lower_bound_2",
    "quadratic_fit",
    "render_svg",
    "run_cli",
    "sandwich_check",
    "table_report",
]
