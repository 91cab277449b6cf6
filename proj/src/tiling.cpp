#include "flipcount/tiling.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "flipcount/integer.hpp"

namespace flipcount {

namespace {

void check_polygon(int n) {
  if (n < 3) throw UsageError("polygon needs n >= 3, got " + std::to_string(n));
  if (n > kMaxPolygon) {
    throw UsageError("polygon size " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxPolygon));
  }
}

struct Decomposer {
  const std::vector<std::vector<int>>& partners;  // partners[v]: w > v with [v,w]
  TileDecomposition out;

  // Builds the tile lying on chord (lo, hi) inside the sub-polygon lo..hi.
  int build(int lo, int hi) {
    int index = static_cast<int>(out.tiles.size());
    out.tiles.emplace_back();
    std::vector<int> vertices{lo};
    int v = lo;
    while (v != hi) {
      int next = v + 1;
      for (int w : partners[v]) {
        if (w <= hi && !(v == lo && w == hi)) next = std::max(next, w);
      }
      if (next > v + 1) {
        int child = build(v, next);
        out.adjacency.push_back({index, child, Diagonal{v, next}});
      }
      vertices.push_back(next);
      v = next;
    }
    out.tiles[index] = std::move(vertices);
    return index;
  }
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

bool crosses(Diagonal a, Diagonal b) {
  return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

Tiling::Tiling(int n) : n_(n) { check_polygon(n); }

Tiling::Tiling(int n, std::vector<Diagonal> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
  check_polygon(n);
  for (auto& d : diagonals_) {
    if (d.i > d.j) std::swap(d.i, d.j);
    if (d.i < 1 || d.j > n || d.j - d.i < 2 || (d.i == 1 && d.j == n)) {
      throw UsageError("[" + std::to_string(d.i) + "," + std::to_string(d.j) +
                       "] is not a diagonal of the " + std::to_string(n) + "-gon");
    }
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end()) {
    throw UsageError("repeated diagonal");
  }
  for (std::size_t a = 0; a < diagonals_.size(); ++a) {
    for (std::size_t b = a + 1; b < diagonals_.size(); ++b) {
      if (crosses(diagonals_[a], diagonals_[b])) throw UsageError("diagonals cross");
    }
  }
}

Tiling Tiling::trusted(int n, std::vector<Diagonal> sorted) {
  Tiling t;
  t.n_ = n;
  t.diagonals_ = std::move(sorted);
  return t;
}

Tiling Tiling::parse(std::string_view text) {
  auto fail = [&]() -> Tiling { throw UsageError("malformed tiling '" + std::string(text) + "'"); };
  auto read_int = [&](std::string_view& s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc()) fail();
    s.remove_prefix(ptr - s.data());
    return value;
  };
  auto skip_spaces = [](std::string_view& s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  };

  std::string_view s = text;
  skip_spaces(s);
  if (!s.starts_with("n=")) fail();
  s.remove_prefix(2);
  int n = read_int(s);
  skip_spaces(s);
  std::vector<Diagonal> diagonals;
  if (!s.empty()) {
    if (s.front() != ';') fail();
    s.remove_prefix(1);
    skip_spaces(s);
    while (!s.empty()) {
      if (s.front() != '[') fail();
      s.remove_prefix(1);
      int i = read_int(s);
      if (s.empty() || s.front() != ',') fail();
      s.remove_prefix(1);
      int j = read_int(s);
      if (s.empty() || s.front() != ']') fail();
      s.remove_prefix(1);
      diagonals.push_back({i, j});
      skip_spaces(s);
      if (!s.empty()) {
        if (s.front() != ',') fail();
        s.remove_prefix(1);
        skip_spaces(s);
      }
    }
  }
  return Tiling(n, std::move(diagonals));
}

bool Tiling::contains(Diagonal d) const {
  if (d.i > d.j) std::swap(d.i, d.j);
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

std::string Tiling::to_string() const {
  std::string out = "n=" + std::to_string(n_) + ";";
  for (std::size_t k = 0; k < diagonals_.size(); ++k) {
    if (k) out += ',';
    out += "[" + std::to_string(diagonals_[k].i) + "," + std::to_string(diagonals_[k].j) + "]";
  }
  return out;
}

std::size_t TilingHash::operator()(const Tiling& t) const noexcept {
  std::size_t h = static_cast<std::size_t>(t.n());
  for (const auto& d : t.diagonals()) {
    h ^= static_cast<std::size_t>(d.i * 64 + d.j) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

TileDecomposition decompose(const Tiling& t) {
  std::vector<std::vector<int>> partners(t.n() + 1);
  for (const auto& d : t.diagonals()) partners[d.i].push_back(d.j);
  Decomposer dec{partners, {}};
  dec.out.tiles.reserve(t.diagonal_count() + 1);
  dec.build(1, t.n());
  return std::move(dec.out);
}

Partition shape_of(const Tiling& t) {
  auto dec = decompose(t);
  std::vector<int> parts;
  parts.reserve(dec.tiles.size());
  for (const auto& tile : dec.tiles) parts.push_back(static_cast<int>(tile.size()) - 2);
  return Partition::normalize(std::move(parts));
}

RegionProfile ff_of(const Tiling& t) {
  auto dec = decompose(t);
  const int count = static_cast<int>(dec.tiles.size());
  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto is_triangle = [&](int k) { return dec.tiles[k].size() == 3; };
  for (const auto& e : dec.adjacency) {
    if (is_triangle(e.first) && is_triangle(e.second)) {
      parent[find_root(parent, e.first)] = find_root(parent, e.second);
    }
  }
  std::vector<int> region_size(count, 0);
  for (int k = 0; k < count; ++k) {
    if (is_triangle(k)) ++region_size[find_root(parent, k)];
  }
  RegionProfile profile;
  profile.sizes = Partition::normalize(std::move(region_size));
  if (!profile.sizes.empty()) profile.ff = minus(profile.sizes);
  return profile;
}

std::vector<Tiling> flip_neighbors(const Tiling& t) {
  auto dec = decompose(t);
  std::vector<Tiling> out;
  auto apex = [](const std::vector<int>& tri, Diagonal d) {
    for (int v : tri) {
      if (v != d.i && v != d.j) return v;
    }
    return 0;
  };
  for (const auto& e : dec.adjacency) {
    const auto& a = dec.tiles[e.first];
    const auto& b = dec.tiles[e.second];
    if (a.size() != 3 || b.size() != 3) continue;
    int x = apex(a, e.diagonal);
    int y = apex(b, e.diagonal);
    Diagonal replacement{std::min(x, y), std::max(x, y)};
    std::vector<Diagonal> diagonals(t.diagonals().begin(), t.diagonals().end());
    *std::find(diagonals.begin(), diagonals.end(), e.diagonal) = replacement;
    std::sort(diagonals.begin(), diagonals.end());
    out.push_back(Tiling::trusted(t.n(), std::move(diagonals)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_tiling(int n, const std::function<void(const Tiling&)>& visit) {
  check_polygon(n);
  std::vector<Diagonal> chosen;
  std::vector<std::pair<int, int>> pending{{1, n}};

  // Tiles one pending sub-polygon, then continues with the rest.
  std::function<void()> step = [&]() {
    if (pending.empty()) {
      std::vector<Diagonal> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      visit(Tiling::trusted(n, std::move(sorted)));
      return;
    }
    auto [lo, hi] = pending.back();
    pending.pop_back();
    const int inner = hi - lo - 1;  // vertices strictly between lo and hi
    // Nonempty subsets of the inner vertices are the other corners of the tile on (lo, hi).
    for (unsigned mask = 1; mask < (1u << inner); ++mask) {
      const std::size_t chosen_mark = chosen.size();
      const std::size_t pending_mark = pending.size();
      int prev = lo;
      for (int k = 0; k <= inner; ++k) {
        int v = (k == inner) ? hi : lo + 1 + k;
        if (k < inner && !(mask & (1u << k))) continue;
        if (v - prev >= 2) {
          chosen.push_back({prev, v});
          pending.emplace_back(prev, v);
        }
        prev = v;
      }
      step();
      chosen.resize(chosen_mark);
      pending.resize(pending_mark);
    }
    pending.emplace_back(lo, hi);
  };
  step();
}

std::vector<Tiling> enumerate_tilings(int n, const std::optional<Partition>& shape_filter) {
  std::vector<Tiling> out;
  for_each_tiling(n, [&](const Tiling& t) {
    if (!shape_filter || shape_of(t) == *shape_filter) out.push_back(t);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace flipcount
