"""Exact enumeration of convex-polygon tilings up to flip equivalence."""

from ._core import (
    Partition,
    Tiling,
    __version__,
    b_count,
    catalan,
    cell_dim,
    census,
    class_size,
    classification_table,
    column_sum,
    count_shape,
    enumerate_tilings,
    euler_F,
    euler_char,
    f_vector,
    ff_of,
    flip_classes,
    flip_neighbors,
    isometry_orbits,
    models_fiber,
    of_bruteforce,
    of_factor,
    of_product_identity,
    partitions_of,
    pi_coeff,
    shape_of,
    theorem_rhs,
    vertex_profile_classes,
    wreath,
)

__all__ = [
    "Partition",
    "Tiling",
    "__version__",
    "b_count",
    "catalan",
    "cell_dim",
    "census",
    "class_size",
    "classification_table",
    "column_sum",
    "count_shape",
    "enumerate_tilings",
    "euler_F",
    "euler_char",
    "f_vector",
    "ff_of",
    "flip_classes",
    "flip_neighbors",
    "isometry_orbits",
    "models_fiber",
    "of_bruteforce",
    "of_factor",
    "of_product_identity",
    "partitions_of",
    "pi_coeff",
    "shape_of",
    "theorem_rhs",
    "vertex_profile_classes",
    "wreath",
]
