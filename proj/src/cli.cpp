#include "fqt/cli.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fqt/catalog.hpp"
#include "fqt/report.hpp"

namespace fqt {

namespace {

// Errors caused by malformed input rather than by the mathematics.
bool is_usage_error(Errc c) {
  switch (c) {
    case Errc::NotPrime:
    case Errc::FieldTooLarge:
    case Errc::SyntaxError:
    case Errc::UnboundName:
    case Errc::NotAWeierstrassEquation:
    case Errc::UnknownEntry:
      return true;
    default:
      return false;
  }
}

std::pair<int, int> prime_power_split(long q) {
  if (q < 2) fail(Errc::SyntaxError, "q must be a prime power");
  long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (p * p > q) p = q;
  int e = 0;
  long m = q;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) fail(Errc::SyntaxError, "q must be a prime power");
  return {(int)p, e};
}

FieldCtx make_field(long q, int ext_degree) {
  auto [p, e] = prime_power_split(q);
  return FieldCtx::create(p, e * ext_degree);
}

Bindings parse_bindings(const FieldCtx& F, const std::vector<std::string>& specs) {
  Bindings b;
  for (const std::string& s : specs) {
    size_t eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      fail(Errc::SyntaxError, "--bind expects name=value, got \"" + s + "\"");
    b.insert_or_assign(s.substr(0, eq), parse_constant(F, s.substr(eq + 1), b));
  }
  return b;
}

std::string binding_string(const FieldCtx& F, const Bindings& b) {
  std::string s;
  for (const auto& [name, val] : b) {
    if (!s.empty()) s += ",";
    s += name + "=" + F.to_expr(val);
  }
  return s;
}

int run_analyze(std::ostream& out, long q, int ext_degree, const std::string& curve_expr,
                const std::string& conductor_expr, const std::vector<std::string>& bind_specs,
                const std::string& format) {
  FieldCtx F = make_field(q, ext_degree);
  Bindings b = parse_bindings(F, bind_specs);
  Curve E = Curve::from_parsed(parse_curve(F, curve_expr, b));
  std::vector<Curve> classmates;
  bool class_verified = false;
  if (auto m = match_curve(E)) {
    classmates = classmates_for(*m->first, F, m->second);
    class_verified = true;
  }
  AnalysisReport rep = analyze(E, classmates);
  if (!conductor_expr.empty()) {
    Poly n = parse_poly(F, conductor_expr, b).monic();
    if (!(n == rep.conductor.finite_part))
      fail(Errc::ProfileInconsistent, "given conductor " + n.to_string() +
                                          " does not match computed conductor " +
                                          rep.conductor.finite_part.to_string());
  }
  nlohmann::ordered_json rec = analysis_record(F, rep, class_verified);
  if (format == "json")
    out << render_json(rec);
  else if (format == "tsv")
    out << render_tsv(rec);
  else
    out << render_table(rec);
  return 0;
}

struct CatalogRow {
  std::string entry_id;
  long q;
  std::string binding;
  std::string status;  // pass / fail / skip
  std::vector<EntryCheck> failed_checks;
  std::vector<std::string> findings;
};

nlohmann::ordered_json catalog_rows_json(const std::vector<CatalogRow>& rows, bool all_pass) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = "1";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CatalogRow& r : rows) {
    nlohmann::ordered_json jr;
    jr["entry"] = r.entry_id;
    jr["q"] = r.q;
    jr["binding"] = r.binding;
    jr["status"] = r.status;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const EntryCheck& c : r.failed_checks)
      checks.push_back({{"field", c.field}, {"expected", c.expected}, {"got", c.got}});
    jr["failed_checks"] = checks;
    jr["findings"] = r.findings;
    arr.push_back(jr);
  }
  doc["rows"] = arr;
  doc["passed"] = all_pass;
  return doc;
}

int run_catalog(std::ostream& out, const std::vector<long>& q_list, const std::string& entry_id,
                const std::string& format, bool dump) {
  if (dump) {
    out << catalog_to_json().dump(2) << "\n";
    return 0;
  }
  if (q_list.empty()) fail(Errc::SyntaxError, "--q-list is required unless --dump is given");
  std::vector<const CatalogEntry*> entries;
  if (!entry_id.empty())
    entries.push_back(&catalog_entry(entry_id));
  else
    for (const CatalogEntry& e : catalog()) entries.push_back(&e);

  std::vector<CatalogRow> rows;
  bool all_pass = true;
  for (long q : q_list) {
    FieldCtx F = make_field(q, 1);
    for (const CatalogEntry* e : entries) {
      if (!constraint_holds(e->q_constraint, F)) {
        rows.push_back({e->id, q, "", "skip", {}, {}});
        continue;
      }
      for (const Bindings& b : admissible_params(*e, F)) {
        CatalogRow row{e->id, q, binding_string(F, b), "pass", {}, {}};
        try {
          EntryReport rep = verify_entry(*e, F, b);
          row.findings = rep.findings;
          for (const EntryCheck& c : rep.checks)
            if (!c.pass) row.failed_checks.push_back(c);
          if (!rep.passed()) row.status = "fail";
        } catch (const Error& ex) {
          row.status = "fail";
          row.failed_checks.push_back({"error", false, "", ex.what()});
        }
        if (row.status == "fail") all_pass = false;
        rows.push_back(std::move(row));
      }
    }
  }

  if (format == "json") {
    out << render_json(catalog_rows_json(rows, all_pass));
  } else if (format == "tsv") {
    out << "entry\tq\tbinding\tstatus\tdetail\n";
    for (const CatalogRow& r : rows) {
      std::string detail;
      for (const EntryCheck& c : r.failed_checks) {
        if (!detail.empty()) detail += "; ";
        detail += c.field + ": expected " + c.expected + ", got " + c.got;
      }
      for (const std::string& f : r.findings) {
        if (!detail.empty()) detail += "; ";
        detail += "finding: " + f;
      }
      out << r.entry_id << "\t" << r.q << "\t" << r.binding << "\t" << r.status << "\t" << detail
          << "\n";
    }
  } else {
    int passed = 0, failed = 0, skipped = 0;
    for (const CatalogRow& r : rows) {
      std::string label = r.entry_id + "  q=" + std::to_string(r.q);
      if (!r.binding.empty()) label += "  " + r.binding;
      std::string status = r.status == "pass" ? "PASS" : r.status == "fail" ? "FAIL" : "SKIP";
      out << status << "  " << label << "\n";
      for (const EntryCheck& c : r.failed_checks)
        out << "      " << c.field << ": expected " << c.expected << ", got " << c.got << "\n";
      for (const std::string& f : r.findings) out << "      finding: " << f << "\n";
      (r.status == "pass" ? passed : r.status == "fail" ? failed : skipped)++;
    }
    out << "rows " << rows.size() << ": " << passed << " passed, " << failed << " failed, "
        << skipped << " skipped\n";
  }
  return all_pass ? 0 : 2;
}

int run_graph(std::ostream& out, long q, const std::string& conductor_expr,
              const std::string& format) {
  FieldCtx F = make_field(q, 1);
  Poly n = parse_poly(F, conductor_expr).monic();
  ConductorShape shape = classify_conductor(n);
  QuotientGraph g = build_graph(F, shape);
  if (format == "json")
    out << render_json(graph_record(F, shape, g));
  else
    out << graph_dot(g);
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic curves over F_q(T) with conductor of degree 3 at finite places:\n"
               "reduction profiles, quotient-graph homology, strong Weil curves."};
  app.require_subcommand(1);

  long q = 0;
  int ext_degree = 1;
  std::string curve_expr, conductor_expr, entry_id;
  std::vector<std::string> bind_specs;
  std::vector<long> q_list;
  std::string format_analyze = "table", format_catalog = "table", format_graph = "dot";
  bool dump = false;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze one curve over F_q(T)");
  analyze_cmd->add_option("--q", q, "Field size (prime power)")->required();
  analyze_cmd->add_option("--ext-degree", ext_degree, "Work over F_{q^k}")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--curve", curve_expr, "Weierstrass equation in T, X, Y")->required();
  analyze_cmd->add_option("--conductor", conductor_expr,
                          "Expected finite conductor (checked against the computed one)");
  analyze_cmd->add_option("--bind", bind_specs, "Constant binding name=value (repeatable)");
  analyze_cmd->add_option("--format", format_analyze, "Output format")
      ->check(CLI::IsMember({"table", "json", "tsv"}));

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "Verify built-in curve families");
  catalog_cmd->add_option("--q-list", q_list, "Comma-separated field sizes")->delimiter(',');
  catalog_cmd->add_option("--entry", entry_id, "Restrict to one entry id");
  catalog_cmd->add_option("--format", format_catalog, "Output format")
      ->check(CLI::IsMember({"table", "json", "tsv"}));
  catalog_cmd->add_flag("--dump", dump, "Print the catalog itself as JSON and exit");

  CLI::App* graph_cmd = app.add_subcommand("graph", "Describe the quotient graph of a conductor");
  graph_cmd->add_option("--q", q, "Field size (prime power)")->required();
  graph_cmd->add_option("--conductor", conductor_expr, "Finite conductor, a cubic in T")
      ->required();
  graph_cmd->add_option("--format", format_graph, "Output format")
      ->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& pe) {
    err << pe.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(analyze_cmd))
      return run_analyze(out, q, ext_degree, curve_expr, conductor_expr, bind_specs,
                         format_analyze);
    if (app.got_subcommand(catalog_cmd))
      return run_catalog(out, q_list, entry_id, format_catalog, dump);
    return run_graph(out, q, conductor_expr, format_graph);
  } catch (const Error& ex) {
    err << ex.what() << "\n";
    return is_usage_error(ex.code()) ? 1 : 2;
  }
}

}  // namespace fqt
