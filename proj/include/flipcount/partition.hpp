#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flipcount {

/// Integer partition stored as its non-increasing sequence of positive parts.
/// Exponential form and multiplicities are derived views.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);

  /// Drops zeros and sorts; throws UsageError on a negative entry.
  static Partition normalize(std::vector<int> raw);

  /// Accepts "3,2,2,1", "" or "0" for the empty partition, and the
  /// exponential form "1^2 2^3".
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// m_i: number of parts equal to i.
  int multiplicity(int i) const;

  /// Comma form, e.g. "3,2,2,1"; the empty partition is "".
  std::string to_string() const;

  /// Exponential form for display, e.g. "(1^2 2^3)"; the empty partition is "()".
  std::string to_exponential() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part sequence.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  explicit Partition(std::vector<int> canonical_parts);

  std::vector<int> parts_;
  int weight_ = 0;
};

/// Either a partition or INVALID (std::nullopt).
using MaybePartition = std::optional<Partition>;

/// Token for the formal combination with 1^{-count}.
struct NegativeOnes {
  int count = 0;
};

/// mu+: every part i becomes i + 1 (adds a leading column to the Young diagram).
Partition plus(const Partition& mu);

/// mu-: every part i becomes i - 1, zeros dropped. Throws DomainError on the
/// empty partition.
Partition minus(const Partition& mu);

/// Multiset union.
Partition combine(const Partition& lambda, const Partition& other);

/// lambda with `ones.count` parts equal to 1 removed, or INVALID when
/// m_1(lambda) is too small.
MaybePartition combine(const Partition& lambda, NegativeOnes ones);

/// Pads gamma with 1s up to weight m; unchanged when already heavier.
Partition fill_up(const Partition& gamma, int m);

/// lambda wr mu = lambda u mu+ u 1^{-|mu+|}; weight-preserving when valid.
MaybePartition wreath(const Partition& lambda, const Partition& mu);

/// All partitions of m, in decreasing lexicographic order:
/// (m), (m-1,1), ..., (1^m).
std::vector<Partition> partitions_of(int m);

/// Ordered s-tuple of partitions.
class Multipartition {
 public:
  explicit Multipartition(std::vector<Partition> components);

  std::size_t arity() const { return components_.size(); }
  const Partition& operator[](std::size_t i) const { return components_[i]; }
  std::span<const Partition> components() const { return components_; }

  /// Union of all components.
  Partition united() const;

  std::string to_string() const;

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  friend auto operator<=>(const Multipartition& a, const Multipartition& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<Partition> components_;
};

/// All arity-s tuples whose union is mu+, in decreasing lexicographic order
/// of the component tuple. Components never contain a part equal to 1.
std::vector<Multipartition> models_fiber(const Partition& mu, int s);

}  // namespace flipcount
