"""Bicomplex linear algebra and joint spectra of commuting matrix tuples."""

from bcspec._core import (
    BCMatrix,
    BiComplex,
    Conjugation,
    Hyperbolic,
    Ordering,
    bar,
    bc_joint_point_spectrum,
    block_matrix,
    check_radius_bound,
    conjugate,
    d_plus_compare,
    dagger,
    euclid_norm,
    from_idempotent,
    geometric_spectral_radius,
    hyper_norm,
    in_approximate_point_spectrum,
    in_joint_spectrum,
    invert,
    is_commuting_tuple,
    is_invertible,
    is_unitary,
    operator_tuple_norm,
    pair_joint_spectrum,
    pair_point_spectrum,
    pair_residual_spectrum,
    restricted_spectrum,
    run_property_suite,
    simultaneous_triangularize,
    star,
    to_idempotent,
    tuple_norm,
)

__all__ = [
    "BCMatrix",
    "BiComplex",
    "Conjugation",
    "Hyperbolic",
    "Ordering",
    "bar",
    "bc_joint_point_spectrum",
    "block_matrix",
    "check_radius_bound",
    "conjugate",
    "d_plus_compare",
    "dagger",
    "euclid_norm",
    "from_idempotent",
    "geometric_spectral_radius",
    "hyper_norm",
    "in_approximate_point_spectrum",
    "in_joint_spectrum",
    "invert",
    "is_commuting_tuple",
    "is_invertible",
    "is_unitary",
    "operator_tuple_norm",
    "pair_joint_spectrum",
    "pair_point_spectrum",
    "pair_residual_spectrum",
    "restricted_spectrum",
    "run_property_suite",
    "simultaneous_triangularize",
    "star",
    "to_idempotent",
    "tuple_norm",
]
