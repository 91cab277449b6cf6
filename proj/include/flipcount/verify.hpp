#pragma once

#include <vector>

#include "flipcount/export.hpp"

namespace flipcount {

/// theorem_rhs(n, lambda) against explicit flip-class counts, 3 <= n <= max_n.
CheckReport verify_theorem(int max_n, int jobs = 1);

/// euler_char(n) = 1 for 4 <= n <= max_n, and F_r = 1 for 0 <= r <= max_n - 3.
std::vector<CheckReport> verify_euler(int max_n);

/// Signed column sums equal 1 and match prod_i F_{nu_i}, for 1 <= |nu| <= max_weight.
std::vector<CheckReport> verify_columns(int max_weight);

/// Brute-force overcount factors against the closed form, 4 <= n <= max_n,
/// over every lambda, every fiber nu with a class, and every mu with
/// |mu| <= |nu| + l(nu).
CheckReport verify_of(int max_n, int jobs = 1);

}  // namespace flipcount
