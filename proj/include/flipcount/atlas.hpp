#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flipcount/integer.hpp"
#include "flipcount/partition.hpp"
#include "flipcount/tiling.hpp"

namespace flipcount {

/// Dimension of the cell of the associahedron labelled by t:
/// n - 3 - #diagonals, which equals |minus(shape_of(t))|.
int cell_dim(const Tiling& t);

/// f_i = number of i-cells, i = 0..n-3. Requires n >= 4.
std::vector<Integer> f_vector(int n);

/// Alternating sum of the f-vector.
Integer euler_char(int n);

/// True when face contains cell in the closure order (its diagonals are a
/// subset of cell's), i.e. cell lies in the boundary closure of face.
bool is_face_of(const Tiling& cell, const Tiling& face);

/// Incidence lists for n <= 8: for each tiling (in enumerate_tilings order),
/// the indices of tilings obtained by adding one diagonal.
std::vector<std::vector<std::size_t>> boundary_incidence(int n);

enum class SymmetryGroup { trivial, cyclic, dihedral };

SymmetryGroup parse_group(const std::string& name);
std::string to_string(SymmetryGroup group);

/// Relabels vertices by i -> i + shift (mod n), reflecting first
/// (i -> n + 1 - i) when `reflect` is set.
Tiling transform(const Tiling& t, int shift, bool reflect);

/// Orbits of A_n under the chosen group, each sorted, ordered by smallest
/// member. With dim_filter only cells of that dimension are included.
std::vector<std::vector<Tiling>> isometry_orbits(int n, SymmetryGroup group,
                                                 std::optional<int> dim_filter = {});

/// Facet type of a diagonal: sizes {a, b} (a >= b, a + b = n + 2) of the
/// two sub-polygons it cuts off.
struct FacetType {
  int larger = 0;
  int smaller = 0;

  friend bool operator==(const FacetType&, const FacetType&) = default;
  friend auto operator<=>(const FacetType&, const FacetType&) = default;
};

FacetType facet_type(int n, Diagonal d);

struct VertexProfile {
  Tiling vertex;
  std::vector<FacetType> facets;                  // sorted multiset
  std::vector<std::vector<FacetType>> neighbors;  // sorted multiset of neighbor facet multisets
};

struct VertexProfiles {
  std::vector<VertexProfile> profiles;       // one per triangulation, sorted
  std::vector<std::vector<Tiling>> classes;  // vertices grouped by identical profile
};

/// Facet multisets of every vertex plus one refinement round over flip
/// neighbors. Requires n >= 5.
VertexProfiles vertex_profiles(int n);

/// One (dimension, mu) entry of the classification table.
struct CellTypeEntry {
  int dimension = 0;
  Partition mu;
  bool possible = false;
  Partition lambda;              // fill_up(mu+, n - 2) when possible
  std::vector<int> factors;      // associahedron indices lambda_j + 1, descending
  Integer cell_count;            // a_n(lambda)
  std::vector<Tiling> representatives;  // one per dihedral orbit
};

struct CellComplexSummary {
  int n = 0;
  std::vector<Integer> f_vector;
  Integer euler = 0;
  std::vector<CellTypeEntry> cells_by_dim_mu;  // dimension descending, mu in partitions_of order
};

CellComplexSummary classification_table(int n);

/// "K_4 x K_2^2" style label of a product of associahedra.
std::string product_label(const std::vector<int>& factors);

}  // namespace flipcount
