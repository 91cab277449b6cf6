#include "flipcount/export.hpp"

#include <sstream>

namespace flipcount {

json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

json census_json(const Census& census, bool with_classes, bool with_fibers) {
  json out;
  out["n"] = census.n;
  out["total"] = integer_json(census.total());
  json shapes = json::array();
  for (const auto& [lambda, counts] : census.shapes) {
    json shape;
    shape["lambda"] = lambda.to_string();
    shape["a"] = integer_json(counts.a);
    if (with_classes) {
      shape["ae"] = integer_json(counts.ae);
      if (with_fibers) {
        json fibers = json::array();
        for (const auto& [nu, fc] : counts.fibers) {
          fibers.push_back({{"nu", nu.to_string()},
                            {"a", integer_json(fc.a)},
                            {"ae", integer_json(fc.ae)}});
        }
        shape["fibers"] = std::move(fibers);
      }
    }
    shapes.push_back(std::move(shape));
  }
  out["shapes"] = std::move(shapes);
  return out;
}

std::string census_csv(const Census& census, bool with_classes, bool with_fibers) {
  std::ostringstream out;
  if (!with_classes) {
    out << "n,lambda,a\n";
    for (const auto& [lambda, counts] : census.shapes) {
      out << census.n << ",\"" << lambda.to_string() << "\"," << counts.a << '\n';
    }
    return out.str();
  }
  out << "n,lambda,nu,a,ae\n";
  for (const auto& [lambda, counts] : census.shapes) {
    out << census.n << ",\"" << lambda.to_string() << "\",*," << counts.a << ',' << counts.ae
        << '\n';
    if (!with_fibers) continue;
    for (const auto& [nu, fc] : counts.fibers) {
      out << census.n << ",\"" << lambda.to_string() << "\",\"" << nu.to_string() << "\","
          << fc.a << ',' << fc.ae << '\n';
    }
  }
  return out.str();
}

json of_table_json(const OFTable& table) {
  json out;
  json rows = json::array();
  json columns = json::array();
  for (const auto& mu : table.rows) rows.push_back(mu.to_string());
  for (const auto& nu : table.columns) columns.push_back(nu.to_string());
  out["rows"] = std::move(rows);
  out["columns"] = std::move(columns);
  json entries = json::array();
  json cells = json::array();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      row.push_back(integer_json(table.entries[r][c]));
      if (table.terms[r][c].empty()) continue;
      json terms = json::array();
      for (const auto& term : table.terms[r][c]) {
        json filled = json::array();
        for (const auto& p : term.filled) filled.push_back(p.to_string());
        terms.push_back({{"gamma", term.gamma.to_string()},
                         {"filled", std::move(filled)},
                         {"product", integer_json(term.product)}});
      }
      cells.push_back({{"mu", table.rows[r].to_string()},
                       {"nu", table.columns[c].to_string()},
                       {"terms", std::move(terms)}});
    }
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  out["expansions"] = std::move(cells);
  return out;
}

std::string of_table_csv(const OFTable& table) {
  std::ostringstream out;
  out << "mu\\nu";
  for (const auto& nu : table.columns) out << ",\"" << nu.to_string() << '"';
  out << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << '"' << table.rows[r].to_string() << '"';
    for (const auto& value : table.entries[r]) out << ',' << value;
    out << '\n';
  }
  return out.str();
}

json summary_json(const CellComplexSummary& summary) {
  json out;
  out["n"] = summary.n;
  json f = json::array();
  for (const auto& v : summary.f_vector) f.push_back(integer_json(v));
  out["f_vector"] = std::move(f);
  out["euler"] = integer_json(summary.euler);
  json cells = json::array();
  for (const auto& entry : summary.cells_by_dim_mu) {
    json cell;
    cell["dimension"] = entry.dimension;
    cell["mu"] = entry.mu.to_string();
    cell["possible"] = entry.possible;
    if (entry.possible) {
      cell["lambda"] = entry.lambda.to_string();
      cell["product"] = product_label(entry.factors);
      cell["cells"] = integer_json(entry.cell_count);
      json reps = json::array();
      for (const auto& t : entry.representatives) reps.push_back(t.to_string());
      cell["representatives"] = std::move(reps);
    }
    cells.push_back(std::move(cell));
  }
  out["cells"] = std::move(cells);
  return out;
}

std::string summary_markdown(const CellComplexSummary& summary) {
  std::ostringstream out;
  out << "K_" << summary.n - 1 << " (tilings of the " << summary.n << "-gon), f-vector (";
  for (std::size_t i = 0; i < summary.f_vector.size(); ++i) {
    out << (i ? ", " : "") << summary.f_vector[i];
  }
  out << "), Euler characteristic " << summary.euler << "\n\n";
  out << "| dim | mu | lambda | product | cells | representatives |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& entry : summary.cells_by_dim_mu) {
    out << "| " << entry.dimension << " | " << entry.mu.to_exponential() << " | ";
    if (!entry.possible) {
      out << "IMPOSSIBLE | - | 0 | - |\n";
      continue;
    }
    out << entry.lambda.to_exponential() << " | " << product_label(entry.factors) << " | "
        << entry.cell_count << " | ";
    for (std::size_t k = 0; k < entry.representatives.size(); ++k) {
      out << (k ? "<br>" : "") << '`' << entry.representatives[k].to_string() << '`';
    }
    out << " |\n";
  }
  return out.str();
}

json orbits_json(int n, SymmetryGroup group, const std::vector<std::vector<Tiling>>& orbits) {
  json out;
  out["n"] = n;
  out["group"] = to_string(group);
  out["orbit_count"] = orbits.size();
  json list = json::array();
  for (const auto& orbit : orbits) {
    json members = json::array();
    for (const auto& t : orbit) members.push_back(t.to_string());
    list.push_back({{"size", orbit.size()},
                    {"dimension", cell_dim(orbit.front())},
                    {"shape", shape_of(orbit.front()).to_string()},
                    {"members", std::move(members)}});
  }
  out["orbits"] = std::move(list);
  return out;
}

json report_json(const CheckReport& report) {
  return {{"check", report.check},
          {"instances", report.instances},
          {"failures", report.failures}};
}

}  // namespace flipcount
