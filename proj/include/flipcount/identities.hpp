#pragma once

#include <map>
#include <utility>
#include <vector>

#include "flipcount/census.hpp"
#include "flipcount/integer.hpp"
#include "flipcount/partition.hpp"
#include "flipcount/tiling.hpp"

namespace flipcount {

/// The two product forms of the marking multiplicity Pi^lambda_mu:
///   prod_{s>=1} C(m_{s+1}(lambda) + m_s(mu), m_s(mu))
///   prod_{s>=2} C(m_s(lambda u mu+), m_s(mu+))
struct PiForms {
  Integer by_mu;
  Integer by_union;
};

PiForms pi_coeff_forms(const Partition& lambda, const Partition& mu);

/// Common value of both forms; throws std::logic_error if they disagree.
Integer pi_coeff(const Partition& lambda, const Partition& mu);

/// One summand (-1)^|mu| Pi^lambda_mu a_n(lambda wr mu) of the class-count formula.
struct TheoremTerm {
  Partition mu;
  int sign = 1;
  Integer pi;
  MaybePartition shape;  // lambda wr mu, or INVALID
  Integer count;         // a_n(shape), 0 when INVALID
};

/// Every summand with |mu| <= max(m_1(lambda) - 1, 0). The mu = empty term
/// is always present. Throws UsageError unless |lambda| = n - 2.
std::vector<TheoremTerm> theorem_terms(int n, const Partition& lambda);

/// Closed-form number of flip classes of shape lambda.
Integer theorem_rhs(int n, const Partition& lambda);

/// F_r = sum_{m=0}^{r} (-1)^m sum_{rho |- m} a_{r+3}(fill_up(rho+, r+1)).
Integer euler_F(int r);

/// One multipartition gamma in the fiber over mu+, with its filled shapes
/// and the product of their counts.
struct OFTerm {
  Multipartition gamma;
  std::vector<Partition> filled;
  Integer product;
};

/// Overcount factor OF_{mu,nu}. For nu empty: 1 when mu is empty, else 0.
Integer of_factor(const Partition& mu, const Partition& nu);

/// Literal expansion of OF_{mu,nu} over models_fiber(mu, l(nu)), zero
/// terms included. Empty for nu = empty.
std::vector<OFTerm> of_factor_terms(const Partition& mu, const Partition& nu);

/// Signed column sum over mu with |mu| <= |nu| + l(nu).
Integer column_sum(const Partition& nu);

/// (signed sum of OF_{mu,nu} over |mu| <= max_weight, prod_i F_{nu_i}).
/// Throws UsageError when max_weight < |nu| + l(nu).
std::pair<Integer, Integer> of_product_identity(const Partition& nu, int max_weight);

/// b^lambda_mu = Pi^lambda_mu a_n(lambda wr mu); 0 when the wreath is INVALID.
Integer b_count(int n, const Partition& lambda, const Partition& mu);

/// OF_{mu,nu} over rows |mu| <= max_row_weight and columns |nu| <= max_column_weight.
struct OFTable {
  std::vector<Partition> rows;
  std::vector<Partition> columns;
  std::vector<std::vector<Integer>> entries;          // [row][column]
  std::vector<std::vector<std::vector<OFTerm>>> terms;  // nonzero expansion terms
};

OFTable of_table(int max_row_weight, int max_column_weight);

/// Which corner of a marked tile the canonical fan triangulation starts from.
enum class FanApex { lowest, highest };

/// Brute-force overcount factor for one polygon size: materializes the marked
/// family B^lambda_mu, counts members in the fiber ff = nu, and divides by
/// the number of flip classes in that fiber.
class OvercountOracle {
 public:
  explicit OvercountOracle(int n);

  int n() const { return n_; }

  /// ae_{lambda,nu} by explicit flip-class search.
  Integer fiber_classes(const Partition& lambda, const Partition& nu) const;

  /// |ff^{-1}(nu) n B^lambda_mu|, every marking counted separately.
  Integer marked_hits(const Partition& lambda, const Partition& mu, const Partition& nu,
                      FanApex apex = FanApex::lowest) const;

  /// marked_hits / fiber_classes; throws DomainError when the fiber has no class.
  Rational overcount(const Partition& lambda, const Partition& mu, const Partition& nu,
                     FanApex apex = FanApex::lowest) const;

  /// Number of markings of B^lambda_mu; equals b_count when the construction is right.
  Integer marked_size(const Partition& lambda, const Partition& mu) const;

 private:
  template <class Visit>
  void for_each_marked(const Partition& lambda, const Partition& mu, FanApex apex,
                       Visit visit) const;

  int n_;
  PartitionMap<std::vector<Tiling>> by_shape_;
  std::map<std::pair<Partition, Partition>, Integer> fiber_classes_;
};

Rational of_bruteforce(const Partition& lambda, const Partition& mu, const Partition& nu, int n,
                       FanApex apex = FanApex::lowest);

}  // namespace flipcount
