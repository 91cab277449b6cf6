#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. They share no code with it beyond the Diagonal/Tiling value types.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "flipcount/tiling.hpp"

namespace oracle {

using flipcount::Diagonal;
using flipcount::Tiling;

inline bool interleave(Diagonal a, Diagonal b) {
  return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

inline std::vector<Diagonal> all_diagonals(int n) {
  std::vector<Diagonal> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      out.push_back({i, j});
    }
  }
  return out;
}

// Every subset of diagonals, kept when pairwise non-crossing. Exponential in
// n(n-3)/2, so only sensible for n <= 8.
inline std::vector<Tiling> subset_filter(int n) {
  auto diags = all_diagonals(n);
  std::vector<Tiling> out;
  const unsigned long total = 1UL << diags.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    std::vector<Diagonal> chosen;
    bool ok = true;
    for (std::size_t k = 0; k < diags.size() && ok; ++k) {
      if (!(mask >> k & 1UL)) continue;
      for (auto d : chosen) {
        if (interleave(d, diags[k])) {
          ok = false;
          break;
        }
      }
      chosen.push_back(diags[k]);
    }
    if (ok) out.emplace_back(n, chosen);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Tiles by face tracing: from the directed edge a -> b the face continues to
// the neighbour of b met last when walking b+1, b+2, ..., a-1.
inline std::vector<std::vector<int>> faces(const Tiling& t) {
  const int n = t.n();
  std::vector<std::set<int>> adj(n + 1);
  for (int v = 1; v <= n; ++v) {
    int w = v % n + 1;
    adj[v].insert(w);
    adj[w].insert(v);
  }
  for (auto d : t.diagonals()) {
    adj[d.i].insert(d.j);
    adj[d.j].insert(d.i);
  }
  auto step = [n](int v) { return v % n + 1; };
  // start from every side and from both orientations of every diagonal, so
  // that inner tiles with no polygon side are found too
  std::vector<std::pair<int, int>> starts;
  for (int s = 1; s <= n; ++s) starts.emplace_back(s, step(s));
  for (auto d : t.diagonals()) {
    starts.emplace_back(d.i, d.j);
    starts.emplace_back(d.j, d.i);
  }
  std::set<std::vector<int>> seen;
  for (auto [s, first] : starts) {
    std::vector<int> face{s};
    int a = s, b = first;
    while (b != s) {
      face.push_back(b);
      int c = -1;
      for (int w = step(b); w != a; w = step(w)) {
        if (adj[b].count(w)) c = w;
      }
      if (c == -1) c = a;
      a = b;
      b = c;
    }
    std::sort(face.begin(), face.end());
    seen.insert(face);
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<int> shape(const Tiling& t) {
  std::vector<int> parts;
  for (const auto& f : faces(t)) parts.push_back(static_cast<int>(f.size()) - 2);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

inline bool shares_edge(const std::vector<int>& a, const std::vector<int>& b) {
  int common = 0;
  for (int v : a) common += static_cast<int>(std::count(b.begin(), b.end(), v));
  return common == 2;
}

// Triangle-count sizes of maximal triangulated regions, descending.
inline std::vector<int> regions(const Tiling& t) {
  std::vector<std::vector<int>> tri;
  for (auto& f : faces(t)) {
    if (f.size() == 3) tri.push_back(f);
  }
  std::vector<int> parent(tri.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t i = 0; i < tri.size(); ++i) {
    for (std::size_t j = i + 1; j < tri.size(); ++j) {
      if (shares_edge(tri[i], tri[j])) parent[find(i)] = find(j);
    }
  }
  std::map<int, int> size;
  for (std::size_t i = 0; i < tri.size(); ++i) ++size[find(i)];
  std::vector<int> out;
  for (auto [root, s] : size) out.push_back(s);
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Remove d; if the merged tile is a quadrilateral, put in its other diagonal.
inline std::vector<Tiling> flips(const Tiling& t) {
  std::vector<Tiling> out;
  for (auto d : t.diagonals()) {
    std::vector<Diagonal> rest;
    for (auto e : t.diagonals()) {
      if (!(e == d)) rest.push_back(e);
    }
    Tiling smaller(t.n(), rest);
    for (const auto& f : faces(smaller)) {
      if (f.size() != 4) continue;
      bool has_i = std::count(f.begin(), f.end(), d.i) > 0;
      bool has_j = std::count(f.begin(), f.end(), d.j) > 0;
      if (!has_i || !has_j) continue;
      std::vector<int> other;
      for (int v : f) {
        if (v != d.i && v != d.j) other.push_back(v);
      }
      rest.push_back({other[0], other[1]});
      out.emplace_back(t.n(), rest);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of flip components among the given tilings, via union-find.
inline std::size_t component_count(const std::vector<Tiling>& tilings) {
  std::map<Tiling, std::size_t> index;
  for (std::size_t k = 0; k < tilings.size(); ++k) index.emplace(tilings[k], k);
  std::vector<std::size_t> parent(tilings.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t k = 0; k < tilings.size(); ++k) {
    for (const auto& f : flips(tilings[k])) {
      auto it = index.find(f);
      if (it != index.end()) parent[find(k)] = find(it->second);
    }
  }
  std::size_t roots = 0;
  for (std::size_t k = 0; k < tilings.size(); ++k) roots += find(k) == k;
  return roots;
}

// Partitions of m by filtering all non-increasing sequences built part by part.
inline void partitions_rec(int left, int cap, std::vector<int>& cur,
                           std::set<std::vector<int>>& out) {
  if (left == 0) {
    out.insert(cur);
    return;
  }
  for (int p = 1; p <= std::min(left, cap); ++p) {
    cur.push_back(p);
    partitions_rec(left - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::set<std::vector<int>> partitions(int m) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(m, m, cur, out);
  return out;
}

// Young diagram rows -> columns.
inline std::vector<int> conjugate(const std::vector<int>& rows) {
  std::vector<int> cols;
  for (int r : rows) {
    for (int c = 0; c < r; ++c) {
      if (c == static_cast<int>(cols.size())) cols.push_back(0);
      ++cols[c];
    }
  }
  return cols;
}

// Remove the first column of the Young diagram.
inline std::vector<int> drop_first_column(const std::vector<int>& rows) {
  auto cols = conjugate(rows);
  if (!cols.empty()) cols.erase(cols.begin());
  return conjugate(cols);
}

// Prepend a column as tall as the diagram.
inline std::vector<int> add_first_column(const std::vector<int>& rows) {
  auto cols = conjugate(rows);
  cols.insert(cols.begin(), static_cast<int>(rows.size()));
  if (rows.empty()) return {};
  return conjugate(cols);
}

}  // namespace oracle
