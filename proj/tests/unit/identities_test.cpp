#include <catch2/catch_amalgamated.hpp>

#include "flipcount/census.hpp"
#include "flipcount/identities.hpp"
#include "support/of_tables.hpp"

using namespace flipcount;

namespace {
Partition P(const char* text) { return Partition::parse(text); }
}  // namespace

TEST_CASE("marking multiplicity", "[identities]") {
  CHECK(pi_coeff(P("1,1,1,1"), P("")) == 1);
  CHECK(pi_coeff(P("3,2,2"), P("")) == 1);
  CHECK(pi_coeff(P("1,1,1,1"), P("1")) == 1);
  CHECK(pi_coeff(P("2,1,1"), P("1")) == 2);
  CHECK(pi_coeff(P("2,2,1,1"), P("1")) == 3);
  CHECK(pi_coeff(P("3,2,1,1"), P("2,1")) == 4);
}

TEST_CASE("both product forms agree", "[identities]") {
  for (int l = 0; l <= 10; ++l) {
    for (const auto& lambda : partitions_of(l)) {
      for (int m = 0; m <= 6; ++m) {
        for (const auto& mu : partitions_of(m)) {
          auto f = pi_coeff_forms(lambda, mu);
          REQUIRE(f.by_mu == f.by_union);
        }
      }
    }
  }
}

TEST_CASE("class-count formula on small shapes", "[identities]") {
  CHECK(theorem_rhs(6, P("1,1,1,1")) == 1);
  CHECK(theorem_rhs(5, P("2,1")) == 5);
  CHECK(theorem_rhs(5, P("3")) == 1);
  CHECK_THROWS_AS(theorem_rhs(6, P("2,1")), UsageError);

  auto terms = theorem_terms(6, P("1,1,1,1"));
  std::vector<std::string> mus;
  Integer signed_sum = 0;
  for (const auto& t : terms) {
    mus.push_back(t.mu.to_string());
    signed_sum += t.sign * t.pi * t.count;
  }
  CHECK(mus == std::vector<std::string>{"", "1", "2", "1,1", "3", "2,1", "1,1,1"});
  CHECK(signed_sum == 1);
  CHECK(terms[1].count == 21);
  CHECK_FALSE(terms[5].shape.has_value());
  CHECK(terms[5].count == 0);

  // no triangles: only the empty marking contributes
  auto lone = theorem_terms(6, P("2,2"));
  REQUIRE(lone.size() == 1);
  CHECK(lone[0].mu.empty());
}

TEST_CASE("class-count formula against explicit classes", "[identities]") {
  for (int n = 3; n <= 9; ++n) {
    for (const auto& [lambda, counts] : census(n).shapes) {
      CAPTURE(n, lambda.to_string());
      CHECK(theorem_rhs(n, lambda) == counts.ae);
    }
  }
}

TEST_CASE("alternating F_r", "[identities]") {
  for (int r = 0; r <= 9; ++r) CHECK(euler_F(r) == 1);
}

TEST_CASE("b counts", "[identities]") {
  CHECK(b_count(6, P("1,1,1,1"), P("")) == 14);
  CHECK(b_count(6, P("1,1,1,1"), P("1")) == 21);
  CHECK(b_count(6, P("1,1,1,1"), P("2,1")) == 0);
  for (const auto& lambda : partitions_of(5)) {
    CHECK(b_count(7, lambda, P("")) == count_shape_dp(7, lambda));
  }
}


TEST_CASE("overcount factors match the reference table", "[identities]") {
  for (const auto& e : support::kReferenceOF) {
    CAPTURE(e.mu, e.nu);
    CHECK(of_factor(P(e.mu), P(e.nu)) == e.value);
  }
}

TEST_CASE("overcount factors in the (2,2) and (2,1,1) columns", "[identities]") {
  // a_5(3)a_5(1^3) + a_5(1^3)a_5(3), a_5(21)a_5(21), ...
  CHECK(of_factor(P("2"), P("2,2")) == 10);
  CHECK(of_factor(P("1,1"), P("2,2")) == 25);
  CHECK(of_factor(P("1"), P("2,2")) == 50);
  CHECK(of_factor(P(""), P("2,2")) == 25);
  CHECK(of_factor(P("2,1"), P("2,2")) == 10);
  CHECK(of_factor(P("1"), P("2,1,1")) == 40);
  CHECK(of_factor(P("2"), P("2,1,1")) == 4);
  CHECK(of_factor(P("1,1"), P("2,1,1")) == 25);
  CHECK(of_factor(P("2,1"), P("2,1,1")) == 4);
  CHECK(of_factor(P("1,1,1"), P("2,1,1")) == 5);
}

TEST_CASE("pruned and literal expansions agree", "[identities]") {
  for (int w = 1; w <= 5; ++w) {
    for (const auto& nu : partitions_of(w)) {
      for (int m = 0; m <= w + nu.length(); ++m) {
        for (const auto& mu : partitions_of(m)) {
          Integer literal = 0;
          for (const auto& t : of_factor_terms(mu, nu)) literal += t.product;
          REQUIRE(of_factor(mu, nu) == literal);
        }
      }
    }
  }
  auto terms = of_factor_terms(P("1"), P("1,1,1"));
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].gamma.to_string() == "(2;;)");
  CHECK(terms[0].product == 4);
}

TEST_CASE("overcount factors vanish beyond the column bound", "[identities]") {
  CHECK(of_factor(P(""), P("")) == 1);
  CHECK(of_factor(P("1"), P("")) == 0);
  for (int w = 1; w <= 4; ++w) {
    for (const auto& nu : partitions_of(w)) {
      CHECK(of_factor(nu, nu) == 1);
      for (const auto& mu : partitions_of(w + nu.length() + 1)) CHECK(of_factor(mu, nu) == 0);
    }
  }
}

TEST_CASE("signed column sums", "[identities]") {
  for (int w = 1; w <= 6; ++w) {
    for (const auto& nu : partitions_of(w)) {
      CAPTURE(nu.to_string());
      CHECK(column_sum(nu) == 1);
      auto [lhs, rhs] = of_product_identity(nu, w + nu.length());
      CHECK(lhs == rhs);
    }
  }
  CHECK(of_product_identity(P("1"), 2) == std::pair<Integer, Integer>{1, 1});
  CHECK_THROWS_AS(of_product_identity(P("3,1"), 5), UsageError);
}

TEST_CASE("overcount table layout", "[identities]") {
  auto table = of_table(4, 3);
  CHECK(table.rows.size() == 12);
  CHECK(table.columns.size() == 7);
  CHECK(table.rows.front().empty());
  CHECK(table.columns[3] == P("1,1"));
  CHECK(table.entries[1][4] == 21);  // row (1), column (3)
}

TEST_CASE("brute-force overcount factors", "[identities]") {
  CHECK(of_bruteforce(P("1,1,1,1"), P("1"), P("3"), 6) == 21);
  CHECK(of_bruteforce(P("1,1,1,1"), P(""), P("3"), 6) == 14);
  CHECK(of_bruteforce(P("2,1,1"), P("1"), P("1"), 6) == 1);
  CHECK(of_bruteforce(P("2,1,1,1"), P("1"), P("2"), 7) == 5);
  CHECK(of_bruteforce(P("2,1,1,1,1"), P("1"), P("2"), 8) == 5);
  CHECK_THROWS_AS(of_bruteforce(P("1,1,1,1,1"), P("1"), P("2"), 7), DomainError);

  OvercountOracle oracle(7);
  for (const auto& lambda : partitions_of(5)) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& mu : partitions_of(m)) {
        CHECK(oracle.marked_size(lambda, mu) == b_count(7, lambda, mu));
      }
    }
  }
}

TEST_CASE("the fan apex does not matter", "[identities]") {
  OvercountOracle oracle(8);
  auto c = census(8);
  for (const auto& lambda : partitions_of(6)) {
    for (const auto& [nu, f] : c.shapes.at(lambda).fibers) {
      for (int m = 0; m <= 3; ++m) {
        for (const auto& mu : partitions_of(m)) {
          CHECK(oracle.marked_hits(lambda, mu, nu, FanApex::lowest) ==
                oracle.marked_hits(lambda, mu, nu, FanApex::highest));
        }
      }
    }
  }
}
