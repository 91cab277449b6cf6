#include "flipcount/atlas.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "flipcount/census.hpp"
#include "flipcount/counting.hpp"

namespace flipcount {

int cell_dim(const Tiling& t) {
  const int by_diagonals = t.n() - 3 - static_cast<int>(t.diagonal_count());
  const Partition shape = shape_of(t);
  const int by_shape = shape.empty() ? 0 : minus(shape).weight();
  if (by_diagonals != by_shape) {
    throw std::logic_error("cell dimension mismatch for " + t.to_string());
  }
  return by_diagonals;
}

std::vector<Integer> f_vector(int n) {
  if (n < 4) throw UsageError("f_vector requires n >= 4");
  std::vector<Integer> f(n - 2, 0);
  for_each_tiling(n, [&](const Tiling& t) {
    f[n - 3 - static_cast<int>(t.diagonal_count())] += 1;
  });
  return f;
}

Integer euler_char(int n) {
  Integer chi = 0;
  auto f = f_vector(n);
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0) ? f[i] : Integer(-f[i]);
  return chi;
}

bool is_face_of(const Tiling& cell, const Tiling& face) {
  if (cell.n() != face.n()) return false;
  return std::includes(cell.diagonals().begin(), cell.diagonals().end(),
                       face.diagonals().begin(), face.diagonals().end());
}

std::vector<std::vector<std::size_t>> boundary_incidence(int n) {
  if (n > 8) throw UsageError("explicit incidence lists are limited to n <= 8");
  auto tilings = enumerate_tilings(n);
  std::unordered_map<Tiling, std::size_t, TilingHash> index;
  for (std::size_t k = 0; k < tilings.size(); ++k) index.emplace(tilings[k], k);
  std::vector<std::vector<std::size_t>> out(tilings.size());
  for (std::size_t k = 0; k < tilings.size(); ++k) {
    const auto& t = tilings[k];
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 2; j <= n; ++j) {
        if (i == 1 && j == n) continue;
        Diagonal d{i, j};
        if (t.contains(d)) continue;
        bool ok = std::none_of(t.diagonals().begin(), t.diagonals().end(),
                               [&](Diagonal e) { return crosses(d, e); });
        if (!ok) continue;
        std::vector<Diagonal> grown(t.diagonals().begin(), t.diagonals().end());
        grown.push_back(d);
        std::sort(grown.begin(), grown.end());
        out[k].push_back(index.at(Tiling::trusted(n, std::move(grown))));
      }
    }
    std::sort(out[k].begin(), out[k].end());
  }
  return out;
}

SymmetryGroup parse_group(const std::string& name) {
  if (name == "cyclic") return SymmetryGroup::cyclic;
  if (name == "dihedral") return SymmetryGroup::dihedral;
  if (name == "trivial") return SymmetryGroup::trivial;
  throw UsageError("unknown group '" + name + "' (expected cyclic, dihedral or trivial)");
}

std::string to_string(SymmetryGroup group) {
  switch (group) {
    case SymmetryGroup::trivial: return "trivial";
    case SymmetryGroup::cyclic: return "cyclic";
    case SymmetryGroup::dihedral: return "dihedral";
  }
  return "?";
}

Tiling transform(const Tiling& t, int shift, bool reflect) {
  const int n = t.n();
  auto map = [&](int v) {
    if (reflect) v = n + 1 - v;
    return ((v - 1 + shift) % n + n) % n + 1;
  };
  std::vector<Diagonal> image;
  image.reserve(t.diagonal_count());
  for (const auto& d : t.diagonals()) {
    int a = map(d.i);
    int b = map(d.j);
    image.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(image.begin(), image.end());
  return Tiling::trusted(n, std::move(image));
}

std::vector<std::vector<Tiling>> isometry_orbits(int n, SymmetryGroup group,
                                                 std::optional<int> dim_filter) {
  auto tilings = enumerate_tilings(n);
  if (dim_filter) {
    std::erase_if(tilings, [&](const Tiling& t) { return cell_dim(t) != *dim_filter; });
  }
  std::unordered_map<Tiling, bool, TilingHash> seen;
  for (const auto& t : tilings) seen.emplace(t, false);

  std::vector<std::vector<Tiling>> orbits;
  for (const auto& t : tilings) {
    if (seen.at(t)) continue;
    std::set<Tiling> orbit{t};
    if (group != SymmetryGroup::trivial) {
      for (int shift = 0; shift < n; ++shift) {
        orbit.insert(transform(t, shift, false));
        if (group == SymmetryGroup::dihedral) orbit.insert(transform(t, shift, true));
      }
    }
    for (const auto& member : orbit) seen.at(member) = true;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

FacetType facet_type(int n, Diagonal d) {
  const int a = d.j - d.i + 1;
  const int b = n + 2 - a;
  return {std::max(a, b), std::min(a, b)};
}

VertexProfiles vertex_profiles(int n) {
  if (n < 5) throw UsageError("vertex_profiles requires n >= 5");
  auto vertices = enumerate_tilings(n, Partition::normalize(std::vector<int>(n - 2, 1)));

  auto facets_of = [&](const Tiling& t) {
    std::vector<FacetType> facets;
    for (const auto& d : t.diagonals()) facets.push_back(facet_type(n, d));
    std::sort(facets.begin(), facets.end());
    return facets;
  };

  VertexProfiles result;
  using Key = std::pair<std::vector<FacetType>, std::vector<std::vector<FacetType>>>;
  std::map<Key, std::vector<Tiling>> groups;
  for (const auto& v : vertices) {
    VertexProfile profile{v, facets_of(v), {}};
    for (const auto& w : flip_neighbors(v)) profile.neighbors.push_back(facets_of(w));
    std::sort(profile.neighbors.begin(), profile.neighbors.end());
    groups[{profile.facets, profile.neighbors}].push_back(v);
    result.profiles.push_back(std::move(profile));
  }
  for (auto& [key, members] : groups) result.classes.push_back(std::move(members));
  std::sort(result.classes.begin(), result.classes.end());
  return result;
}

std::string product_label(const std::vector<int>& factors) {
  std::string out;
  for (std::size_t k = 0; k < factors.size();) {
    std::size_t run = k;
    while (run < factors.size() && factors[run] == factors[k]) ++run;
    if (!out.empty()) out += " x ";
    out += "K_" + std::to_string(factors[k]);
    if (run - k > 1) out += "^" + std::to_string(run - k);
    k = run;
  }
  return out;
}

CellComplexSummary classification_table(int n) {
  if (n < 4) throw UsageError("classification_table requires n >= 4");
  CellComplexSummary summary;
  summary.n = n;
  summary.f_vector = f_vector(n);
  summary.euler = euler_char(n);

  std::map<Partition, std::vector<Tiling>> representatives;
  for (const auto& orbit : isometry_orbits(n, SymmetryGroup::dihedral)) {
    representatives[shape_of(orbit.front())].push_back(orbit.front());
  }

  for (int dim = n - 3; dim >= 0; --dim) {
    for (const auto& mu : partitions_of(dim)) {
      CellTypeEntry entry;
      entry.dimension = dim;
      entry.mu = mu;
      const Partition raised = plus(mu);
      entry.possible = raised.weight() <= n - 2;
      if (entry.possible) {
        entry.lambda = fill_up(raised, n - 2);
        for (int part : entry.lambda.parts()) entry.factors.push_back(part + 1);
        entry.cell_count = count_shape_dp(n, entry.lambda);
        entry.representatives = representatives[entry.lambda];
      }
      summary.cells_by_dim_mu.push_back(std::move(entry));
    }
  }
  return summary;
}

}  // namespace flipcount
