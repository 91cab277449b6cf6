#include "flipcount/identities.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "flipcount/counting.hpp"

namespace flipcount {

namespace {

// Distinct part values of p in descending order, with multiplicities.
std::vector<std::pair<int, int>> value_groups(const Partition& p) {
  std::vector<std::pair<int, int>> groups;
  for (int part : p.parts()) {
    if (!groups.empty() && groups.back().first == part) {
      ++groups.back().second;
    } else {
      groups.emplace_back(part, 1);
    }
  }
  return groups;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto level = partitions_of(w);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Integer filled_count(int nu_part, const Partition& gamma) {
  return count_shape_dp(nu_part + 3, fill_up(gamma, nu_part + 1));
}

}  // namespace

PiForms pi_coeff_forms(const Partition& lambda, const Partition& mu) {
  PiForms forms{1, 1};
  const int top = std::max(lambda.largest(), mu.largest());
  for (int s = 1; s <= top; ++s) {
    int ms = mu.multiplicity(s);
    forms.by_mu *= binom(lambda.multiplicity(s + 1) + ms, ms);
  }
  const Partition raised = plus(mu);
  const Partition joined = combine(lambda, raised);
  for (int s = 2; s <= joined.largest(); ++s) {
    forms.by_union *= binom(joined.multiplicity(s), raised.multiplicity(s));
  }
  return forms;
}

Integer pi_coeff(const Partition& lambda, const Partition& mu) {
  auto forms = pi_coeff_forms(lambda, mu);
  if (forms.by_mu != forms.by_union) {
    throw std::logic_error("Pi product forms disagree for lambda=" + lambda.to_exponential() +
                           " mu=" + mu.to_exponential());
  }
  return forms.by_mu;
}

std::vector<TheoremTerm> theorem_terms(int n, const Partition& lambda) {
  if (n < 3) throw UsageError("theorem_rhs requires n >= 3");
  if (lambda.weight() != n - 2) {
    throw UsageError("shape " + lambda.to_exponential() + " does not have weight n-2 = " +
                     std::to_string(n - 2));
  }
  std::vector<TheoremTerm> terms;
  const int upper = std::max(lambda.multiplicity(1) - 1, 0);
  for (int m = 0; m <= upper; ++m) {
    for (const auto& mu : partitions_of(m)) {
      TheoremTerm term;
      term.mu = mu;
      term.sign = (m % 2 == 0) ? 1 : -1;
      term.pi = pi_coeff(lambda, mu);
      term.shape = wreath(lambda, mu);
      term.count = term.shape ? count_shape_dp(n, *term.shape) : Integer(0);
      terms.push_back(std::move(term));
    }
  }
  return terms;
}

Integer theorem_rhs(int n, const Partition& lambda) {
  Integer sum = 0;
  for (const auto& term : theorem_terms(n, lambda)) sum += term.sign * term.pi * term.count;
  return sum;
}

Integer euler_F(int r) {
  if (r < 0) throw UsageError("F_r requires r >= 0");
  Integer sum = 0;
  for (int m = 0; m <= r; ++m) {
    Integer level = 0;
    for (const auto& rho : partitions_of(m)) {
      level += count_shape_dp(r + 3, fill_up(plus(rho), r + 1));
    }
    sum += (m % 2 == 0) ? level : Integer(-level);
  }
  return sum;
}

Integer of_factor(const Partition& mu, const Partition& nu) {
  if (nu.empty()) return mu.empty() ? 1 : 0;
  const auto groups = value_groups(plus(mu));
  const auto caps = nu.parts();
  const int s = nu.length();
  std::vector<std::vector<int>> slots(s);
  std::vector<int> load(s, 0);
  Integer total = 0;

  // Assignments overfilling a region give a zero factor and are skipped.
  std::function<void(std::size_t, int, int)> place = [&](std::size_t g, int slot, int left) {
    if (g == groups.size()) {
      Integer product = 1;
      for (int i = 0; i < s && product != 0; ++i) {
        product *= filled_count(caps[i], Partition::normalize(slots[i]));
      }
      total += product;
      return;
    }
    const int value = groups[g].first;
    const int next_left = g + 1 < groups.size() ? groups[g + 1].second : 0;
    const int room = (caps[slot] + 1 - load[slot]) / value;
    const int lo = (slot == s - 1) ? left : 0;
    for (int take = std::min(left, room); take >= lo; --take) {
      slots[slot].insert(slots[slot].end(), take, value);
      load[slot] += take * value;
      if (slot == s - 1) {
        place(g + 1, 0, next_left);
      } else {
        place(g, slot + 1, left - take);
      }
      load[slot] -= take * value;
      slots[slot].resize(slots[slot].size() - take);
    }
  };
  place(0, 0, groups.empty() ? 0 : groups[0].second);
  return total;
}

std::vector<OFTerm> of_factor_terms(const Partition& mu, const Partition& nu) {
  std::vector<OFTerm> terms;
  if (nu.empty()) return terms;
  for (auto& gamma : models_fiber(mu, nu.length())) {
    OFTerm term{gamma, {}, 1};
    for (int i = 0; i < nu.length(); ++i) {
      int part = nu.parts()[i];
      term.filled.push_back(fill_up(gamma[i], part + 1));
      term.product *= count_shape_dp(part + 3, term.filled.back());
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

std::pair<Integer, Integer> of_product_identity(const Partition& nu, int max_weight) {
  if (max_weight < nu.weight() + nu.length()) {
    throw UsageError("truncation bound must be at least |nu| + l(nu)");
  }
  Integer signed_sum = 0;
  for (int m = 0; m <= max_weight; ++m) {
    for (const auto& mu : partitions_of(m)) {
      Integer value = of_factor(mu, nu);
      signed_sum += (m % 2 == 0) ? value : Integer(-value);
    }
  }
  Integer product = 1;
  for (int part : nu.parts()) product *= euler_F(part);
  return {signed_sum, product};
}

Integer column_sum(const Partition& nu) {
  return of_product_identity(nu, nu.weight() + nu.length()).first;
}

Integer b_count(int n, const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != n - 2) {
    throw UsageError("shape " + lambda.to_exponential() + " does not have weight n-2");
  }
  auto shape = wreath(lambda, mu);
  if (!shape) return 0;
  return pi_coeff(lambda, mu) * count_shape_dp(n, *shape);
}

OFTable of_table(int max_row_weight, int max_column_weight) {
  OFTable table;
  table.rows = partitions_up_to(max_row_weight);
  table.columns = partitions_up_to(max_column_weight);
  for (const auto& mu : table.rows) {
    auto& entry_row = table.entries.emplace_back();
    auto& term_row = table.terms.emplace_back();
    for (const auto& nu : table.columns) {
      entry_row.push_back(of_factor(mu, nu));
      auto& cell = term_row.emplace_back();
      for (auto& term : of_factor_terms(mu, nu)) {
        if (term.product != 0) cell.push_back(std::move(term));
      }
    }
  }
  return table;
}

OvercountOracle::OvercountOracle(int n) : n_(n) {
  for_each_tiling(n, [&](const Tiling& t) { by_shape_[shape_of(t)].push_back(t); });
  for (auto& [lambda, tilings] : by_shape_) {
    std::sort(tilings.begin(), tilings.end());
    for (const auto& cls : flip_classes(tilings)) {
      fiber_classes_[{lambda, ff_of(cls.front()).ff}] += 1;
    }
  }
}

Integer OvercountOracle::fiber_classes(const Partition& lambda, const Partition& nu) const {
  auto it = fiber_classes_.find({lambda, nu});
  return it == fiber_classes_.end() ? Integer(0) : it->second;
}

template <class Visit>
void OvercountOracle::for_each_marked(const Partition& lambda, const Partition& mu,
                                      FanApex apex, Visit visit) const {
  if (lambda.weight() != n_ - 2) {
    throw UsageError("shape " + lambda.to_exponential() + " does not have weight n-2");
  }
  const auto shape = wreath(lambda, mu);
  if (!shape) return;
  auto found = by_shape_.find(*shape);
  if (found == by_shape_.end()) return;
  const auto groups = value_groups(plus(mu));

  for (const auto& t : found->second) {
    const auto dec = decompose(t);
    std::vector<std::vector<int>> candidates(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (std::size_t k = 0; k < dec.tiles.size(); ++k) {
        if (static_cast<int>(dec.tiles[k].size()) - 2 == groups[g].first) {
          candidates[g].push_back(static_cast<int>(k));
        }
      }
    }

    std::vector<int> marked;
    std::function<void(std::size_t, std::size_t, int)> choose = [&](std::size_t g,
                                                                     std::size_t from, int left) {
      if (g == groups.size()) {
        std::vector<Diagonal> diagonals(t.diagonals().begin(), t.diagonals().end());
        for (int k : marked) {
          const auto& v = dec.tiles[k];
          const std::size_t corners = v.size();
          if (apex == FanApex::lowest) {
            for (std::size_t j = 2; j + 1 < corners; ++j) diagonals.push_back({v[0], v[j]});
          } else {
            for (std::size_t j = 1; j + 2 < corners; ++j) {
              diagonals.push_back({v[j], v[corners - 1]});
            }
          }
        }
        std::sort(diagonals.begin(), diagonals.end());
        visit(Tiling::trusted(n_, std::move(diagonals)));
        return;
      }
      if (left == 0) {
        choose(g + 1, 0, g + 1 < groups.size() ? groups[g + 1].second : 0);
        return;
      }
      for (std::size_t k = from; k < candidates[g].size(); ++k) {
        marked.push_back(candidates[g][k]);
        choose(g, k + 1, left - 1);
        marked.pop_back();
      }
    };
    choose(0, 0, groups.empty() ? 0 : groups[0].second);
  }
}

Integer OvercountOracle::marked_hits(const Partition& lambda, const Partition& mu,
                                     const Partition& nu, FanApex apex) const {
  Integer hits = 0;
  for_each_marked(lambda, mu, apex, [&](const Tiling& t) {
    if (ff_of(t).ff == nu) hits += 1;
  });
  return hits;
}

Integer OvercountOracle::marked_size(const Partition& lambda, const Partition& mu) const {
  Integer size = 0;
  for_each_marked(lambda, mu, FanApex::lowest, [&](const Tiling&) { size += 1; });
  return size;
}

Rational OvercountOracle::overcount(const Partition& lambda, const Partition& mu,
                                    const Partition& nu, FanApex apex) const {
  Integer classes = fiber_classes(lambda, nu);
  if (classes == 0) {
    throw DomainError("no flip class of shape " + lambda.to_exponential() + " in fiber " +
                      nu.to_exponential());
  }
  return Rational(marked_hits(lambda, mu, nu, apex), classes);
}

Rational of_bruteforce(const Partition& lambda, const Partition& mu, const Partition& nu, int n,
                       FanApex apex) {
  return OvercountOracle(n).overcount(lambda, mu, nu, apex);
}

}  // namespace flipcount
