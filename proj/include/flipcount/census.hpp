#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "flipcount/integer.hpp"
#include "flipcount/partition.hpp"
#include "flipcount/tiling.hpp"

namespace flipcount {

/// Partition-keyed tables iterate in the same order as partitions_of.
template <class T>
using PartitionMap = std::map<Partition, T, std::greater<>>;

struct FiberCounts {
  Integer a;   // a_{lambda,nu}
  Integer ae;  // ae_{lambda,nu}
};

struct ShapeCounts {
  Integer a;   // a_n(lambda)
  Integer ae;  // ae_n(lambda)
  PartitionMap<FiberCounts> fibers;
};

struct Census {
  int n = 0;
  PartitionMap<ShapeCounts> shapes;

  Integer total() const;
};

/// A flip-equivalence class, sorted canonically.
using FlipClass = std::vector<Tiling>;

/// Connected components of the flip graph on A_n(lambda), ordered by their
/// smallest member. Throws UsageError unless |lambda| = n - 2.
std::vector<FlipClass> flip_classes(int n, const Partition& lambda);

/// Components of the flip graph restricted to `tilings` (all of one n).
std::vector<FlipClass> flip_classes(std::span<const Tiling> tilings);

/// Full shape and fiber tables for the n-gon by exhaustive enumeration.
/// `jobs` bounds worker threads; the result does not depend on it.
Census census(int n, int jobs = 1);

/// a_m(lambda) for every lambda, computed by dynamic programming over the
/// tile containing a fixed boundary edge. Defined for m >= 2, where the
/// 2-gon (a bare edge) has the single empty shape.
using ShapeDistribution = PartitionMap<Integer>;
const ShapeDistribution& shape_distribution(int m);

/// a_n(lambda) from the dynamic program; 0 for shapes of the wrong weight.
Integer count_shape_dp(int n, const Partition& lambda);

}  // namespace flipcount
