#pragma once

#include "flipcount/integer.hpp"
#include "flipcount/partition.hpp"

namespace flipcount {

/// Binomial coefficient; zero when b < 0 or b > a.
Integer binom(long a, long b);

/// Catalan numbers 1, 1, 2, 5, 14, 42, ... indexed from 0.
Integer catalan(int k);

/// Number of triangulations of a convex m-gon, m >= 3.
Integer triangulation_count(int m);

/// Size of every flip class whose maximal triangulated regions have
/// ff-profile nu: the product of triangulation counts of the
/// (nu_i + 3)-gons, i.e. prod_i catalan(nu_i + 1).
Integer class_size(const Partition& nu);

}  // namespace flipcount
