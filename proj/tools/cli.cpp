#include "cli.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "flipcount/atlas.hpp"
#include "flipcount/census.hpp"
#include "flipcount/export.hpp"
#include "flipcount/identities.hpp"
#include "flipcount/verify.hpp"

namespace flipcount::cli {

namespace {

enum class Format { json, csv, table };

// Above this the dynamic program alone answers `count`.
constexpr int kEnumerationCheckLimit = 12;

struct Outcome {
  json parameters = json::object();
  json result;
  std::vector<CheckReport> checks;
  std::string csv;
  std::string table;
};

struct Options {
  std::string format = "json";
  int jobs = 1;
  int n = 0;
  std::string shape;
  bool fibers = false;
  int max_n = 0;
  int max_weight = 0;
  std::string group = "cyclic";
  std::optional<int> dim;
};

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "table") return Format::table;
  throw UsageError("unknown format '" + name + "'");
}

std::string checks_csv(const std::vector<CheckReport>& checks) {
  std::ostringstream out;
  out << "check,instances,failures\n";
  for (const auto& c : checks) out << c.check << ',' << c.instances << ',' << c.failures.size() << '\n';
  return out.str();
}

std::string checks_table(const std::vector<CheckReport>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.check << ": " << c.instances << " instances, "
        << c.failures.size() << " failures\n";
    for (const auto& f : c.failures) out << "  " << f.dump() << '\n';
  }
  return out.str();
}

std::string census_table(const Census& c, bool with_classes, bool with_fibers) {
  std::ostringstream out;
  out << "n=" << c.n << "  total " << c.total() << '\n';
  for (const auto& [lambda, counts] : c.shapes) {
    out << "  " << lambda.to_exponential() << "  a=" << counts.a;
    if (with_classes) out << "  ae=" << counts.ae;
    out << '\n';
    if (!with_fibers) continue;
    for (const auto& [nu, fc] : counts.fibers) {
      out << "      nu=" << nu.to_exponential() << "  a=" << fc.a << "  ae=" << fc.ae << '\n';
    }
  }
  return out.str();
}

Census restrict(Census c, const std::optional<Partition>& shape) {
  if (!shape) return c;
  if (shape->weight() != c.n - 2) {
    throw UsageError("shape " + shape->to_exponential() + " does not have weight n-2 = " +
                     std::to_string(c.n - 2));
  }
  PartitionMap<ShapeCounts> kept;
  kept[*shape] = c.shapes[*shape];
  c.shapes = std::move(kept);
  return c;
}

void require_polygon(int n, int minimum) {
  if (n < minimum) {
    throw UsageError("--n must be at least " + std::to_string(minimum) + ", got " +
                     std::to_string(n));
  }
}

Outcome do_count(const Options& o) {
  require_polygon(o.n, 3);
  std::optional<Partition> shape;
  if (!o.shape.empty()) shape = Partition::parse(o.shape);
  Outcome out;
  out.parameters = {{"n", o.n}};
  if (shape) out.parameters["shape"] = shape->to_string();
  // Shape counts alone: no flip-class search needed.
  Census c;
  c.n = o.n;
  for (const auto& lambda : partitions_of(o.n - 2)) c.shapes[lambda].a = count_shape_dp(o.n, lambda);
  if (o.n <= kEnumerationCheckLimit) {
    Integer enumerated = 0;
    for_each_tiling(o.n, [&](const Tiling&) { enumerated += 1; });
    if (enumerated != c.total()) {
      throw std::logic_error("enumeration and dynamic program disagree on |A_n|");
    }
  }
  c = restrict(std::move(c), shape);
  out.result = census_json(c, false);
  out.csv = census_csv(c, false, false);
  out.table = census_table(c, false, false);
  return out;
}

Outcome do_classes(const Options& o) {
  require_polygon(o.n, 3);
  std::optional<Partition> shape;
  if (!o.shape.empty()) shape = Partition::parse(o.shape);
  Outcome out;
  out.parameters = {{"n", o.n}, {"fibers", o.fibers}};
  if (shape) out.parameters["shape"] = shape->to_string();
  Census c = restrict(census(o.n, o.jobs), shape);
  out.result = census_json(c, true, o.fibers);
  out.csv = census_csv(c, true, o.fibers);
  out.table = census_table(c, true, o.fibers);
  return out;
}

Outcome do_verify(const std::string& what, const Options& o) {
  Outcome out;
  if (what == "theorem") {
    out.parameters = {{"max_n", o.max_n}};
    out.checks.push_back(verify_theorem(o.max_n, o.jobs));
  } else if (what == "euler") {
    out.parameters = {{"max_n", o.max_n}};
    out.checks = verify_euler(o.max_n);
  } else if (what == "columns") {
    out.parameters = {{"max_weight", o.max_weight}};
    out.checks = verify_columns(o.max_weight);
  } else if (what == "of") {
    out.parameters = {{"max_n", o.max_n}};
    out.checks.push_back(verify_of(o.max_n, o.jobs));
  }
  out.result = json::array();
  for (const auto& c : out.checks) out.result.push_back(report_json(c));
  out.csv = checks_csv(out.checks);
  out.table = checks_table(out.checks);
  return out;
}

Outcome do_of_table(const Options& o) {
  if (o.max_weight < 0) throw UsageError("--max-weight must be >= 0");
  Outcome out;
  out.parameters = {{"max_weight", o.max_weight}};
  auto table = of_table(o.max_weight, o.max_weight);
  out.result = of_table_json(table);
  out.csv = of_table_csv(table);
  std::ostringstream text;
  text << "mu \\ nu";
  for (const auto& nu : table.columns) text << '\t' << nu.to_exponential();
  text << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    text << table.rows[r].to_exponential();
    for (const auto& v : table.entries[r]) text << '\t' << v;
    text << '\n';
  }
  out.table = text.str();
  return out;
}

Outcome do_fvector(const Options& o) {
  require_polygon(o.n, 4);
  Outcome out;
  out.parameters = {{"n", o.n}};
  auto f = f_vector(o.n);
  Integer chi = euler_char(o.n);
  json values = json::array();
  std::ostringstream csv, text;
  csv << "dimension,cells\n";
  text << "K_" << o.n - 1 << ":";
  for (std::size_t i = 0; i < f.size(); ++i) {
    values.push_back(integer_json(f[i]));
    csv << i << ',' << f[i] << '\n';
    text << ' ' << f[i];
  }
  text << "  (Euler characteristic " << chi << ")\n";
  out.result = {{"n", o.n}, {"f_vector", values}, {"euler", integer_json(chi)}};
  out.csv = csv.str();
  out.table = text.str();
  return out;
}

Outcome do_orbits(const Options& o) {
  require_polygon(o.n, 3);
  auto group = parse_group(o.group);
  Outcome out;
  out.parameters = {{"n", o.n}, {"group", to_string(group)}};
  if (o.dim) out.parameters["dim"] = *o.dim;
  auto orbits = isometry_orbits(o.n, group, o.dim);
  out.result = orbits_json(o.n, group, orbits);
  std::ostringstream csv, text;
  csv << "orbit,size,dimension,shape,member\n";
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const auto& orbit = orbits[k];
    text << "orbit " << k << " size " << orbit.size() << " dim " << cell_dim(orbit.front())
         << " shape " << shape_of(orbit.front()).to_exponential() << "  rep "
         << orbit.front().to_string() << '\n';
    for (const auto& t : orbit) {
      csv << k << ',' << orbit.size() << ',' << cell_dim(t) << ",\""
          << shape_of(t).to_string() << "\",\"" << t.to_string() << "\"\n";
    }
  }
  out.csv = csv.str();
  out.table = text.str();
  return out;
}

Outcome do_cells(const Options& o) {
  require_polygon(o.n, 4);
  Outcome out;
  out.parameters = {{"n", o.n}};
  auto summary = classification_table(o.n);
  out.result = summary_json(summary);
  std::ostringstream csv;
  csv << "dimension,mu,lambda,product,cells,representatives\n";
  for (const auto& e : summary.cells_by_dim_mu) {
    csv << e.dimension << ",\"" << e.mu.to_string() << "\",";
    if (!e.possible) {
      csv << "impossible,,0,\n";
      continue;
    }
    csv << '"' << e.lambda.to_string() << "\",\"" << product_label(e.factors) << "\","
        << e.cell_count << ",\"";
    for (std::size_t k = 0; k < e.representatives.size(); ++k) {
      csv << (k ? " " : "") << e.representatives[k].to_string();
    }
    csv << "\"\n";
  }
  out.csv = csv.str();
  out.table = summary_markdown(summary);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of polygon tilings up to flip equivalence", "flipcount"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format: json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string verify_what;
  std::function<Outcome()> action;
  std::string command;

  auto* count = app.add_subcommand("count", "Shape counts a_n(lambda)");
  count->add_option("--n", o.n, "Polygon size")->required();
  count->add_option("--shape", o.shape, "Restrict to one shape, e.g. 2,1,1 or \"1^2 2\"");
  count->callback([&] { command = "count"; action = [&] { return do_count(o); }; });

  auto* classes = app.add_subcommand("classes", "Flip-class counts ae_n(lambda)");
  classes->add_option("--n", o.n, "Polygon size")->required();
  classes->add_option("--shape", o.shape, "Restrict to one shape");
  classes->add_flag("--fibers", o.fibers, "Break counts down by ff fiber");
  classes->callback([&] { command = "classes"; action = [&] { return do_classes(o); }; });

  auto* verify = app.add_subcommand("verify", "Exhaustive identity checks");
  verify->require_subcommand(1);
  auto add_verify = [&](const std::string& name, const std::string& help, bool by_weight) {
    auto* sub = verify->add_subcommand(name, help);
    if (by_weight) {
      sub->add_option("--max-weight", o.max_weight, "Largest |nu|")->required();
    } else {
      sub->add_option("--max-n", o.max_n, "Largest polygon size")->required();
    }
    sub->callback([&, name] {
      command = "verify " + name;
      verify_what = name;
      action = [&] { return do_verify(verify_what, o); };
    });
  };
  add_verify("theorem", "Class-count formula against flip-class search", false);
  add_verify("euler", "Euler characteristics and F_r", false);
  add_verify("columns", "Signed column sums of the overcount table", true);
  add_verify("of", "Brute-force overcount factors against the closed form", false);

  auto* oft = app.add_subcommand("of-table", "Overcount factor table");
  oft->add_option("--max-weight", o.max_weight, "Largest |mu| and |nu|")->required();
  oft->callback([&] { command = "of-table"; action = [&] { return do_of_table(o); }; });

  auto* fv = app.add_subcommand("fvector", "f-vector of the associahedron");
  fv->add_option("--n", o.n, "Polygon size")->required();
  fv->callback([&] { command = "fvector"; action = [&] { return do_fvector(o); }; });

  auto* orb = app.add_subcommand("orbits", "Orbits under polygon symmetries");
  orb->add_option("--n", o.n, "Polygon size")->required();
  orb->add_option("--group", o.group, "cyclic, dihedral or trivial");
  orb->add_option("--dim", o.dim, "Only cells of this dimension");
  orb->callback([&] { command = "orbits"; action = [&] { return do_orbits(o); }; });

  auto* cells = app.add_subcommand("cells", "Cell classification table");
  cells->add_option("--n", o.n, "Polygon size")->required();
  cells->callback([&] { command = "cells"; action = [&] { return do_cells(o); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    Format format = parse_format(o.format);
    outcome = action();
    bool passed = true;
    for (const auto& c : outcome.checks) passed = passed && c.passed();

    switch (format) {
      case Format::json: {
        json report;
        report["command"] = command;
        report["parameters"] = outcome.parameters;
        report["result"] = outcome.result;
        json checks = json::array();
        for (const auto& c : outcome.checks) checks.push_back(report_json(c));
        report["verdict"] = {{"status", passed ? "pass" : "fail"}, {"checks", checks}};
        out << report.dump(2) << '\n';
        break;
      }
      case Format::csv:
        out << outcome.csv;
        break;
      case Format::table:
        out << outcome.table;
        if (!outcome.checks.empty()) out << (passed ? "verdict: pass\n" : "verdict: fail\n");
        break;
    }
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    err << command << ": " << elapsed.count() << " s\n";
    return passed ? kExitOk : kExitVerificationFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace flipcount::cli
