"""Closed-form Hosoya polynomials of distance-regular graphs, checked against a BFS oracle."""

from .graphs import (
    Disconnected,
    DistanceDistribution,
    Graph,
    NotDistanceRegular,
    NotRegular,
    bfs_distances,
    check_distance_regular,
    distance_distribution,
    hosoya_oracle,
    hyper_wiener_oracle,
    is_connected,
    read_edge_list,
    wiener_oracle,
)
from .intersection import (
    HardInvalid,
    IntersectionArray,
    NonIntegralCoefficient,
    NonIntegralSphere,
    RelationViolated,
    SphereSizes,
    SrgParams,
    hosoya_closed_form,
    hyper_wiener_closed_form,
    sphere_sizes,
    srg_feasibility,
    srg_hosoya,
    srg_hosoya_simplified,
    srg_to_array,
    validate,
    wiener_closed_form,
)
from .polynomial import IntPolynomial, derivative, evaluate, from_coeffs, render, second_derivative

__version__ = "0.1.0"
