#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "flipcount/atlas.hpp"
#include "flipcount/census.hpp"
#include "flipcount/identities.hpp"
#include "flipcount/integer.hpp"

namespace flipcount {

using json = nlohmann::ordered_json;

/// Exact integers go out as JSON numbers while they fit in 64 bits, and as
/// decimal strings beyond that.
json integer_json(const Integer& value);

/// {"n":..,"total":..,"shapes":[{"lambda":..,"a":..,"ae":..,"fibers":[{"nu":..,"a":..,"ae":..}]}]}
/// `with_classes` = false drops ae and fibers (plain shape counts).
json census_json(const Census& census, bool with_classes = true, bool with_fibers = true);

/// Columns n,lambda,nu,a,ae. Each shape gets an aggregate row with nu "*",
/// followed by its fiber rows when `with_fibers` is set. Without classes the
/// columns are just n,lambda,a.
std::string census_csv(const Census& census, bool with_classes = true, bool with_fibers = true);

json of_table_json(const OFTable& table);
std::string of_table_csv(const OFTable& table);

json summary_json(const CellComplexSummary& summary);
std::string summary_markdown(const CellComplexSummary& summary);

json orbits_json(int n, SymmetryGroup group, const std::vector<std::vector<Tiling>>& orbits);

/// Outcome of one verification sweep: every instance is an exact identity.
struct CheckReport {
  std::string check;
  std::size_t instances = 0;
  std::vector<json> failures;

  bool passed() const { return failures.empty(); }
};

json report_json(const CheckReport& report);

}  // namespace flipcount
