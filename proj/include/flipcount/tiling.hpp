#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flipcount/partition.hpp"

namespace flipcount {

/// Largest polygon accepted by the tiling engine. Exhaustive work is
/// hopeless well before this anyway (|A_16| is about 1.1e8).
inline constexpr int kMaxPolygon = 24;

/// Diagonal [i, j] of the n-gon with vertices 1..n clockwise, i < j.
struct Diagonal {
  int i = 0;
  int j = 0;

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// True when the two diagonals strictly interleave.
bool crosses(Diagonal a, Diagonal b);

/// A set of pairwise non-crossing diagonals of a labeled convex n-gon,
/// stored as the sorted diagonal list.
class Tiling {
 public:
  /// Validates and canonicalizes; throws UsageError on any violation.
  Tiling(int n, std::vector<Diagonal> diagonals);

  /// The tiling with no diagonals (one n-gonal tile).
  explicit Tiling(int n);

  /// Parses "n=6;[1,3],[3,6]".
  static Tiling parse(std::string_view text);

  /// Skips validation; `sorted` must already be canonical and non-crossing.
  static Tiling trusted(int n, std::vector<Diagonal> sorted);

  int n() const { return n_; }
  std::span<const Diagonal> diagonals() const { return diagonals_; }
  std::size_t diagonal_count() const { return diagonals_.size(); }
  bool contains(Diagonal d) const;

  std::string to_string() const;

  friend bool operator==(const Tiling&, const Tiling&) = default;
  friend auto operator<=>(const Tiling&, const Tiling&) = default;

 private:
  Tiling() = default;

  int n_ = 0;
  std::vector<Diagonal> diagonals_;
};

struct TilingHash {
  std::size_t operator()(const Tiling& t) const noexcept;
};

/// Tiles of a tiling with their adjacency. Each diagonal separates exactly
/// two tiles, so `adjacency` has one entry per diagonal and forms a tree.
struct TileDecomposition {
  struct Edge {
    int first = 0;
    int second = 0;
    Diagonal diagonal;
  };
  std::vector<std::vector<int>> tiles;  // vertex labels, ascending
  std::vector<Edge> adjacency;
};

TileDecomposition decompose(const Tiling& t);

/// Shape: one part (k - 2) per k-gonal tile; weight n - 2.
Partition shape_of(const Tiling& t);

/// Sizes (in triangles) of the maximal triangulated regions, and the same
/// partition with its first column removed.
struct RegionProfile {
  Partition sizes;  // ff+
  Partition ff;
};

RegionProfile ff_of(const Tiling& t);

/// Tilings reached by flipping one diagonal shared by two triangles,
/// sorted canonically.
std::vector<Tiling> flip_neighbors(const Tiling& t);

/// Visits every tiling of the n-gon once, in generation order (not sorted).
/// Tilings are built by choosing the tile on edge (1, n) and recursing into
/// the sub-polygons hanging off its other sides.
void for_each_tiling(int n, const std::function<void(const Tiling&)>& visit);

/// Every tiling of the n-gon (optionally only those of one shape) in
/// lexicographic order of the sorted diagonal lists.
std::vector<Tiling> enumerate_tilings(int n, const std::optional<Partition>& shape_filter = {});

}  // namespace flipcount
