#include "flipcount/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "flipcount/integer.hpp"

namespace flipcount {

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw UsageError("malformed partition '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, auto is_sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || is_sep(text[i])) {
      if (i > start) out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> canonical_parts)
    : parts_(std::move(canonical_parts)),
      weight_(std::accumulate(parts_.begin(), parts_.end(), 0)) {}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(normalize(std::vector<int>(parts))) {}

Partition Partition::normalize(std::vector<int> raw) {
  if (std::any_of(raw.begin(), raw.end(), [](int p) { return p < 0; })) {
    throw UsageError("partition parts must be non-negative");
  }
  std::erase(raw, 0);
  std::sort(raw.begin(), raw.end(), std::greater<>());
  return Partition(std::move(raw));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> raw;
  if (text.find('^') != std::string_view::npos) {
    for (auto token : split(text, [](char c) { return c == ' ' || c == ','; })) {
      auto caret = token.find('^');
      if (caret == std::string_view::npos) {
        raw.push_back(parse_int(token, text));
        continue;
      }
      int part = parse_int(token.substr(0, caret), text);
      int count = parse_int(token.substr(caret + 1), text);
      if (count < 0) throw UsageError("negative exponent in '" + std::string(text) + "'");
      raw.insert(raw.end(), count, part);
    }
  } else {
    for (auto token : split(text, [](char c) { return c == ','; })) {
      if (token.find_first_not_of(' ') == std::string_view::npos) continue;
      raw.push_back(parse_int(token, text));
    }
  }
  return normalize(std::move(raw));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

std::string Partition::to_exponential() const {
  std::string out = "(";
  bool first = true;
  for (int i = 1; i <= largest(); ++i) {
    int m = multiplicity(i);
    if (m == 0) continue;
    if (!first) out += ' ';
    first = false;
    out += std::to_string(i);
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out + ")";
}

Partition plus(const Partition& mu) {
  std::vector<int> parts(mu.parts().begin(), mu.parts().end());
  for (int& p : parts) ++p;
  return Partition::normalize(std::move(parts));
}

Partition minus(const Partition& mu) {
  if (mu.empty()) throw DomainError("minus is undefined on the empty partition");
  std::vector<int> parts(mu.parts().begin(), mu.parts().end());
  for (int& p : parts) --p;
  return Partition::normalize(std::move(parts));
}

Partition combine(const Partition& lambda, const Partition& other) {
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  parts.insert(parts.end(), other.parts().begin(), other.parts().end());
  return Partition::normalize(std::move(parts));
}

MaybePartition combine(const Partition& lambda, NegativeOnes ones) {
  if (ones.count < 0) throw UsageError("1^{-a} requires a >= 0");
  if (lambda.multiplicity(1) < ones.count) return std::nullopt;
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  parts.resize(parts.size() - ones.count);  // the 1s sit at the tail
  return Partition::normalize(std::move(parts));
}

Partition fill_up(const Partition& gamma, int m) {
  if (gamma.weight() >= m) return gamma;
  std::vector<int> parts(gamma.parts().begin(), gamma.parts().end());
  parts.insert(parts.end(), m - gamma.weight(), 1);
  return Partition::normalize(std::move(parts));
}

MaybePartition wreath(const Partition& lambda, const Partition& mu) {
  Partition raised = plus(mu);
  return combine(combine(lambda, raised), NegativeOnes{raised.weight()});
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  if (m < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(Partition::normalize(current));
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw UsageError("multipartition arity must be >= 1");
}

Partition Multipartition::united() const {
  Partition out;
  for (const auto& c : components_) out = combine(out, c);
  return out;
}

std::string Multipartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ";";
    out += components_[i].to_string();
  }
  return out + ")";
}

std::vector<Multipartition> models_fiber(const Partition& mu, int s) {
  if (s < 1) throw UsageError("models_fiber requires s >= 1");
  Partition raised = plus(mu);

  // distinct part values (descending) with multiplicities
  std::vector<std::pair<int, int>> groups;
  for (int p : raised.parts()) {
    if (!groups.empty() && groups.back().first == p) {
      ++groups.back().second;
    } else {
      groups.emplace_back(p, 1);
    }
  }

  std::vector<std::vector<int>> slots(s);
  std::vector<Multipartition> out;

  // Distribute `left` copies of groups[g] over slots [slot, s), then move on.
  std::function<void(std::size_t, int, int)> place = [&](std::size_t g, int slot, int left) {
    if (g == groups.size()) {
      std::vector<Partition> comps;
      comps.reserve(s);
      for (const auto& v : slots) comps.push_back(Partition::normalize(v));
      out.emplace_back(std::move(comps));
      return;
    }
    int value = groups[g].first;
    if (slot == s - 1) {
      slots[slot].insert(slots[slot].end(), left, value);
      place(g + 1, 0, g + 1 < groups.size() ? groups[g + 1].second : 0);
      slots[slot].resize(slots[slot].size() - left);
      return;
    }
    for (int take = left; take >= 0; --take) {
      slots[slot].insert(slots[slot].end(), take, value);
      place(g, slot + 1, left - take);
      slots[slot].resize(slots[slot].size() - take);
    }
  };
  place(0, 0, groups.empty() ? 0 : groups[0].second);

  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace flipcount
