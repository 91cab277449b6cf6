#include "flipcount/counting.hpp"

#include <algorithm>


namespace flipcount {

Integer binom(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Integer result = 1;
  for (long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

Integer catalan(int k) {
  if (k < 0) throw UsageError("catalan index must be >= 0");
  return binom(2L * k, k) / (k + 1);
}

Integer triangulation_count(int m) {
  if (m < 3) throw UsageError("triangulation_count requires m >= 3");
  return catalan(m - 2);
}

Integer class_size(const Partition& nu) {
  Integer product = 1;
  for (int part : nu.parts()) product *= triangulation_count(part + 3);
  return product;
}

}  // namespace flipcount
