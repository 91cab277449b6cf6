#include "flipcount/verify.hpp"

#include "flipcount/parallel.hpp"

namespace flipcount {

namespace {

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto level = partitions_of(w);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

CheckReport verify_theorem(int max_n, int jobs) {
  struct Instance {
    int n;
    Partition lambda;
  };
  std::vector<Instance> instances;
  for (int n = 3; n <= max_n; ++n) {
    for (const auto& lambda : partitions_of(n - 2)) instances.push_back({n, lambda});
  }
  std::vector<std::optional<json>> outcome(instances.size());
  parallel_chunks(instances.size(), jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto& [n, lambda] = instances[k];
      Integer formula = theorem_rhs(n, lambda);
      Integer classes = flip_classes(n, lambda).size();
      if (formula != classes) {
        outcome[k] = json{{"n", n},
                          {"lambda", lambda.to_string()},
                          {"formula", integer_json(formula)},
                          {"classes", integer_json(classes)}};
      }
    }
  });
  CheckReport report{"theorem", instances.size(), {}};
  for (auto& o : outcome) {
    if (o) report.failures.push_back(std::move(*o));
  }
  return report;
}

std::vector<CheckReport> verify_euler(int max_n) {
  CheckReport chi{"euler_characteristic", 0, {}};
  for (int n = 4; n <= max_n; ++n) {
    ++chi.instances;
    Integer value = euler_char(n);
    if (value != 1) chi.failures.push_back({{"n", n}, {"euler", integer_json(value)}, {"expected", 1}});
  }
  CheckReport f{"euler_F", 0, {}};
  for (int r = 0; r <= max_n - 3; ++r) {
    ++f.instances;
    Integer value = euler_F(r);
    if (value != 1) f.failures.push_back({{"r", r}, {"F", integer_json(value)}, {"expected", 1}});
  }
  return {chi, f};
}

std::vector<CheckReport> verify_columns(int max_weight) {
  CheckReport columns{"column_sum", 0, {}};
  CheckReport product{"of_product_identity", 0, {}};
  for (int w = 1; w <= max_weight; ++w) {
    for (const auto& nu : partitions_of(w)) {
      auto [signed_sum, f_product] = of_product_identity(nu, nu.weight() + nu.length());
      ++columns.instances;
      if (signed_sum != 1) {
        columns.failures.push_back(
            {{"nu", nu.to_string()}, {"column_sum", integer_json(signed_sum)}, {"expected", 1}});
      }
      ++product.instances;
      if (signed_sum != f_product) {
        product.failures.push_back({{"nu", nu.to_string()},
                                    {"signed_sum", integer_json(signed_sum)},
                                    {"f_product", integer_json(f_product)}});
      }
    }
  }
  return {columns, product};
}

CheckReport verify_of(int max_n, int jobs) {
  CheckReport report{"of_bruteforce", 0, {}};
  for (int n = 4; n <= max_n; ++n) {
    OvercountOracle oracle(n);
    Census tables = census(n, jobs);
    struct Instance {
      Partition lambda, mu, nu;
    };
    std::vector<Instance> instances;
    for (const auto& [lambda, counts] : tables.shapes) {
      for (const auto& [nu, fc] : counts.fibers) {
        if (fc.ae == 0) continue;
        for (const auto& mu : partitions_up_to(nu.weight() + nu.length())) {
          instances.push_back({lambda, mu, nu});
        }
      }
    }
    std::vector<std::optional<json>> outcome(instances.size());
    parallel_chunks(instances.size(), jobs, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        const auto& [lambda, mu, nu] = instances[k];
        Rational brute = oracle.overcount(lambda, mu, nu);
        Integer closed = of_factor(mu, nu);
        if (brute != Rational(closed)) {
          outcome[k] = json{{"n", n},
                            {"lambda", lambda.to_string()},
                            {"mu", mu.to_string()},
                            {"nu", nu.to_string()},
                            {"bruteforce", to_string(brute)},
                            {"closed_form", integer_json(closed)}};
        }
      }
    });
    report.instances += instances.size();
    for (auto& o : outcome) {
      if (o) report.failures.push_back(std::move(*o));
    }
  }
  return report;
}

}  // namespace flipcount
