#include "flipcount/census.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

#include "flipcount/parallel.hpp"

namespace flipcount {

Integer Census::total() const {
  Integer sum = 0;
  for (const auto& [lambda, counts] : shapes) sum += counts.a;
  return sum;
}

std::vector<FlipClass> flip_classes(std::span<const Tiling> tilings) {
  std::unordered_map<Tiling, std::size_t, TilingHash> index;
  index.reserve(tilings.size());
  std::vector<std::size_t> order(tilings.size());
  for (std::size_t k = 0; k < tilings.size(); ++k) index.emplace(tilings[k], k);
  for (std::size_t k = 0; k < tilings.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return tilings[a] < tilings[b]; });

  std::vector<bool> seen(tilings.size(), false);
  std::vector<FlipClass> classes;
  std::deque<std::size_t> queue;
  for (std::size_t start : order) {
    if (seen[start]) continue;
    FlipClass members;
    seen[start] = true;
    queue.push_back(start);
    while (!queue.empty()) {
      std::size_t k = queue.front();
      queue.pop_front();
      members.push_back(tilings[k]);
      for (const auto& next : flip_neighbors(tilings[k])) {
        auto it = index.find(next);
        if (it != index.end() && !seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

std::vector<FlipClass> flip_classes(int n, const Partition& lambda) {
  if (lambda.weight() != n - 2) {
    throw UsageError("shape " + lambda.to_exponential() + " does not have weight n-2 = " +
                     std::to_string(n - 2));
  }
  auto tilings = enumerate_tilings(n, lambda);
  return flip_classes(tilings);
}

Census census(int n, int jobs) {
  std::vector<Tiling> tilings;
  for_each_tiling(n, [&](const Tiling& t) { tilings.push_back(t); });
  std::sort(tilings.begin(), tilings.end());

  std::vector<Partition> shapes(tilings.size());
  std::vector<Partition> fibers(tilings.size());
  parallel_chunks(tilings.size(), jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      shapes[k] = shape_of(tilings[k]);
      fibers[k] = ff_of(tilings[k]).ff;
    }
  });

  Census result;
  result.n = n;
  for (const auto& lambda : partitions_of(n - 2)) result.shapes[lambda];
  for (std::size_t k = 0; k < tilings.size(); ++k) {
    auto& counts = result.shapes[shapes[k]];
    counts.a += 1;
    counts.fibers[fibers[k]].a += 1;
  }

  // Flips preserve shape and ff, so one representative labels each class.
  std::unordered_map<Tiling, std::size_t, TilingHash> index;
  index.reserve(tilings.size());
  for (std::size_t k = 0; k < tilings.size(); ++k) index.emplace(tilings[k], k);
  for (const auto& cls : flip_classes(tilings)) {
    std::size_t k = index.at(cls.front());
    auto& counts = result.shapes[shapes[k]];
    counts.ae += 1;
    counts.fibers[fibers[k]].ae += 1;
  }
  return result;
}

namespace {

ShapeDistribution convolve(const ShapeDistribution& a, const ShapeDistribution& b) {
  ShapeDistribution out;
  for (const auto& [sa, ca] : a) {
    for (const auto& [sb, cb] : b) out[combine(sa, sb)] += ca * cb;
  }
  return out;
}

void accumulate(ShapeDistribution& into, const ShapeDistribution& from) {
  for (const auto& [shape, count] : from) into[shape] += count;
}

class ShapeTable {
 public:
  const ShapeDistribution& get(int m) {
    std::lock_guard lock(mutex_);
    return compute(m);
  }

 private:
  // Chains of `sides` tile sides whose hanging sub-polygons hold `extra`
  // vertices beyond the chain's own endpoints.
  const ShapeDistribution& chain(int sides, int extra) {
    auto key = std::make_pair(sides, extra);
    if (auto it = chains_.find(key); it != chains_.end()) return it->second;
    ShapeDistribution out;
    if (sides == 0) {
      if (extra == 0) out[Partition{}] = 1;
    } else {
      // Last side hangs a sub-polygon with s vertices, contributing s - 2 extra.
      for (int s = 2; s - 2 <= extra; ++s) {
        const auto& rest = chain(sides - 1, extra - (s - 2));
        if (rest.empty()) continue;
        accumulate(out, convolve(rest, compute(s)));
      }
    }
    return chains_.emplace(key, std::move(out)).first->second;
  }

  const ShapeDistribution& compute(int m) {
    if (auto it = polygons_.find(m); it != polygons_.end()) return it->second;
    ShapeDistribution out;
    if (m == 2) {
      out[Partition{}] = 1;
    } else {
      // The tile on the root edge has k corners and k - 1 free sides.
      for (int k = 3; k <= m; ++k) {
        ShapeDistribution tile;
        tile[Partition{k - 2}] = 1;
        accumulate(out, convolve(chain(k - 1, m - k), tile));
      }
    }
    return polygons_.emplace(m, std::move(out)).first->second;
  }

  std::mutex mutex_;
  std::map<int, ShapeDistribution> polygons_;
  std::map<std::pair<int, int>, ShapeDistribution> chains_;
};

ShapeTable& shape_table() {
  static ShapeTable table;
  return table;
}

}  // namespace

const ShapeDistribution& shape_distribution(int m) {
  if (m < 2) throw UsageError("shape_distribution requires m >= 2");
  if (m > kMaxPolygon) throw UsageError("polygon size exceeds " + std::to_string(kMaxPolygon));
  return shape_table().get(m);
}

Integer count_shape_dp(int n, const Partition& lambda) {
  if (n < 3) throw UsageError("count_shape_dp requires n >= 3");
  if (lambda.weight() != n - 2) return 0;
  const auto& dist = shape_distribution(n);
  auto it = dist.find(lambda);
  return it == dist.end() ? Integer(0) : it->second;
}

}  // namespace flipcount
