#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "flipcount/export.hpp"

using namespace flipcount;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FLIPCOUNT_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("integers switch to strings past 64 bits", "[export]") {
  CHECK(integer_json(Integer(42)).is_number_integer());
  CHECK(integer_json(Integer(-3)) == -3);
  auto big = integer_json(Integer("123456789012345678901234567890"));
  REQUIRE(big.is_string());
  CHECK(big.get<std::string>() == "123456789012345678901234567890");
}

TEST_CASE("pentagon census golden files", "[export]") {
  auto c = census(5);
  CHECK(census_json(c) == json::parse(slurp("census_n5.json")));
  CHECK(census_csv(c) == slurp("census_n5.csv"));
  CHECK(census_csv(c, false) == "n,lambda,a\n5,\"3\",1\n5,\"2,1\",5\n5,\"1,1,1\",5\n");
  auto plain = census_json(c, false);
  CHECK_FALSE(plain["shapes"][0].contains("ae"));
  CHECK_FALSE(plain["shapes"][0].contains("fibers"));
}

TEST_CASE("shape count golden file", "[export]") {
  auto golden = json::parse(slurp("shape_counts.json"));
  for (const auto& [n, shapes] : golden.items()) {
    for (const auto& [lambda, a] : shapes.items()) {
      CAPTURE(n, lambda);
      CHECK(count_shape_dp(std::stoi(n), Partition::parse(lambda)) == a.get<long>());
    }
  }
}

TEST_CASE("overcount table export", "[export]") {
  auto t = of_table(2, 2);
  auto j = of_table_json(t);
  CHECK(j["rows"] == json::array({"", "1", "2", "1,1"}));
  CHECK(j["columns"] == json::array({"", "1", "2", "1,1"}));
  CHECK(j["entries"][1][2] == 5);
  auto csv = of_table_csv(t);
  CHECK(csv.substr(0, csv.find('\n')).find("mu") != std::string::npos);
}

TEST_CASE("classification table export", "[export]") {
  auto s = classification_table(6);
  auto j = summary_json(s);
  CHECK(j["n"] == 6);
  CHECK(j["f_vector"] == json::array({14, 21, 9, 1}));
  CHECK(j["euler"] == 1);
  auto md = summary_markdown(s);
  CHECK(md.find("K_3 x K_2^2") != std::string::npos);
  CHECK(md.find('|') != std::string::npos);
}

TEST_CASE("check reports", "[export]") {
  CheckReport ok{"theorem", 3, {}};
  auto j = report_json(ok);
  CHECK(j["check"] == "theorem");
  CHECK(j["instances"] == 3);
  CHECK(j["failures"].empty());
  CheckReport bad{"theorem", 1, {json{{"lambda", "2,1"}, {"expected", 5}, {"actual", 4}}}};
  CHECK_FALSE(bad.passed());
}
