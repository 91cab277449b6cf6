#include <catch2/catch_amalgamated.hpp>

#include "flipcount/integer.hpp"
#include "flipcount/tiling.hpp"
#include "support/oracles.hpp"

using namespace flipcount;

namespace {
std::vector<int> vec(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }
}  // namespace

TEST_CASE("tiling validation", "[tiling]") {
  CHECK_NOTHROW(Tiling(6, {{1, 3}, {3, 6}}));
  CHECK(Tiling(6, {{3, 1}}) == Tiling(6, {{1, 3}}));
  CHECK_THROWS_AS(Tiling(2), UsageError);
  CHECK_THROWS_AS(Tiling(kMaxPolygon + 1), UsageError);
  CHECK_THROWS_AS(Tiling(6, {{1, 2}}), UsageError);   // a side
  CHECK_THROWS_AS(Tiling(6, {{1, 6}}), UsageError);   // the closing side
  CHECK_THROWS_AS(Tiling(6, {{1, 7}}), UsageError);
  CHECK_THROWS_AS(Tiling(6, {{1, 3}, {1, 3}}), UsageError);
  CHECK_THROWS_AS(Tiling(6, {{1, 4}, {2, 5}}), UsageError);
}

TEST_CASE("tiling text form", "[tiling]") {
  auto t = Tiling::parse("n=6;[3,6],[1,3]");
  CHECK(t.to_string() == "n=6;[1,3],[3,6]");
  CHECK(Tiling::parse(t.to_string()) == t);
  CHECK(Tiling::parse("n=5") == Tiling(5));
  CHECK_THROWS_AS(Tiling::parse("6;[1,3]"), UsageError);
  CHECK_THROWS_AS(Tiling::parse("n=6;[1,3"), UsageError);
  CHECK_THROWS_AS(Tiling::parse("n=6;[1,4],[2,5]"), UsageError);
}

TEST_CASE("enumeration of small polygons", "[tiling]") {
  CHECK(enumerate_tilings(3) == std::vector<Tiling>{Tiling(3)});
  CHECK(enumerate_tilings(4) == std::vector<Tiling>{Tiling(4), Tiling(4, {{1, 3}}), Tiling(4, {{2, 4}})});
  CHECK(enumerate_tilings(6).size() == 45);
}

TEST_CASE("enumeration matches the subset-filter oracle", "[tiling]") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(enumerate_tilings(n) == oracle::subset_filter(n));
  }
}

TEST_CASE("little Schroeder numbers", "[tiling]") {
  const std::size_t expected[] = {1, 3, 11, 45, 197, 903, 4279, 20793};
  for (int n = 3; n <= 10; ++n) {
    std::size_t count = 0;
    for_each_tiling(n, [&](const Tiling&) { ++count; });
    CHECK(count == expected[n - 3]);
  }
}

TEST_CASE("shape filter", "[tiling]") {
  auto quads = enumerate_tilings(6, Partition{2, 2});
  CHECK(quads.size() == 3);
  for (const auto& t : quads) CHECK(shape_of(t) == Partition{2, 2});
}

TEST_CASE("shapes of simple tilings", "[tiling]") {
  CHECK(shape_of(Tiling(4)) == Partition{2});
  CHECK(shape_of(Tiling(6, {{1, 4}})) == Partition{2, 2});
  CHECK(shape_of(Tiling(6, {{1, 3}})) == Partition{3, 1});
  CHECK(shape_of(Tiling(6, {{1, 3}, {1, 4}, {1, 5}})) == Partition{1, 1, 1, 1});
}

TEST_CASE("decomposition agrees with face tracing", "[tiling]") {
  for (int n = 3; n <= 9; ++n) {
    for (const auto& t : enumerate_tilings(n)) {
      auto d = decompose(t);
      auto tiles = d.tiles;
      std::sort(tiles.begin(), tiles.end());
      REQUIRE(tiles == oracle::faces(t));
      CHECK(d.adjacency.size() == t.diagonal_count());
      CHECK(vec(shape_of(t)) == oracle::shape(t));
      CHECK(shape_of(t).weight() == n - 2);
    }
  }
}

TEST_CASE("maximal triangulated regions", "[tiling]") {
  auto spread = Tiling(9, {{1, 3}, {4, 6}, {7, 9}});
  CHECK(ff_of(spread).sizes == Partition{1, 1, 1});
  CHECK(ff_of(spread).ff.empty());

  auto fan = Tiling(9, {{1, 3}, {1, 4}, {1, 5}, {6, 8}, {1, 8}});
  CHECK(ff_of(fan).sizes == Partition{3, 1, 1});
  CHECK(ff_of(fan).ff == Partition{2});

  auto pentagon = Tiling(5, {{1, 3}, {1, 4}});
  CHECK(ff_of(pentagon).sizes == Partition{3});
  CHECK(ff_of(pentagon).ff == Partition{2});

  CHECK(ff_of(Tiling(6)).sizes.empty());

  for (int n = 3; n <= 9; ++n) {
    for (const auto& t : enumerate_tilings(n)) {
      auto r = ff_of(t);
      REQUIRE(vec(r.sizes) == oracle::regions(t));
      CHECK(r.ff == (r.sizes.empty() ? Partition{} : minus(r.sizes)));
    }
  }
}

TEST_CASE("flips", "[tiling]") {
  CHECK(flip_neighbors(Tiling(4, {{1, 3}})) == std::vector<Tiling>{Tiling(4, {{2, 4}})});
  CHECK(flip_neighbors(Tiling(9, {{1, 3}, {4, 6}, {7, 9}})).empty());
  for (const auto& t : enumerate_tilings(6, Partition{1, 1, 1, 1})) {
    CHECK(flip_neighbors(t).size() == 3);
  }
  for (int n = 3; n <= 8; ++n) {
    for (const auto& t : enumerate_tilings(n)) REQUIRE(flip_neighbors(t) == oracle::flips(t));
  }
}
