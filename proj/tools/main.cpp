#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "picenum/formulas.hpp"
#include "picenum/plaurent.hpp"
#include "picenum/verify.hpp"

namespace {

using namespace picenum;

RenderFormat parse_format(const std::string& s) {
  if (s == "text") return RenderFormat::text;
  if (s == "latex") return RenderFormat::latex;
  if (s == "json") return RenderFormat::json;
  throw CLI::ValidationError("--format", "must be text, latex or json");
}

void require_genus(int g) {
  if (g < 2) {
    std::cerr << "error: g must be >= 2 (the closed formulas are stated for genus >= 2)\n";
    std::exit(2);
  }
}

Kind parse_kind(const std::string& s) {
  if (s == "wt0" || s == "weight0") return Kind::weight0;
  if (s == "top") return Kind::top;
  throw CLI::ValidationError("--kind", "must be wt0 or top");
}

std::string sym_to_text(const SymSeries& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (const auto& [i, mult] : m) {
      if (!mono.empty()) mono += "*";
      mono += "p" + std::to_string(i);
      if (mult > 1) mono += "^" + std::to_string(mult);
    }
    if (mono.empty()) {
      out += rat_to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += rat_to_string(a) + " * " + mono;
    }
  }
  return out;
}

std::string sym_to_json(const SymSeries& f) {
  nlohmann::ordered_json out;
  out["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : f.terms()) {
    nlohmann::ordered_json term;
    term["coeff"] = rat_to_string(c);
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (const auto& [i, mult] : m) exps[std::to_string(i)] = mult;
    term["exps"] = std::move(exps);
    out["terms"].push_back(std::move(term));
  }
  return out.dump();
}

int print_report(const VerificationReport& report) {
  int failed = 0;
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.id << "  (" << c.reference
              << ")";
    if (!c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << "\n";
    if (!c.passed) ++failed;
  }
  std::cout << report.checks.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumerator for weight-zero and topological Euler characteristics "
               "of universal Picard stacks"};
  app.require_subcommand(1);

  int g = 2, max_n = 0, nn = 0, depth = 6;
  unsigned seed = 0;
  std::string format = "text", kind = "wt0", suite;

  auto add_compute = [&](const std::string& name, Kind k) {
    auto* cmd = app.add_subcommand(name, "Print the genus-g generating function");
    cmd->add_option("--g", g, "genus (>= 2)")->required();
    cmd->add_option("--format", format, "text, latex or json");
    cmd->callback([&, k] {
      require_genus(g);
      Laurent f = k == Kind::weight0 ? weight_zero_jacobian(g) : topological_jacobian(g);
      std::cout << render(f, parse_format(format)) << "\n";
    });
  };
  add_compute("wt0", Kind::weight0);
  add_compute("top", Kind::top);

  auto* chi = app.add_subcommand("chi", "Euler characteristics for n = 0..max-n marked points");
  chi->add_option("--g", g, "genus (>= 2)")->required();
  chi->add_option("--kind", kind, "wt0 or top");
  chi->add_option("--max-n", max_n, "largest number of marked points");
  chi->callback([&] {
    require_genus(g);
    auto series = chi_series(g, parse_kind(kind), max_n);
    for (int n = 0; n <= max_n; ++n)
      std::cout << n << "\t" << rat_to_string(series[n]) << "\n";
  });

  auto* eq = app.add_subcommand("equivariant",
                                "Frobenius characteristic of the degree-n equivariant part");
  eq->add_option("--g", g, "genus (>= 2)")->required();
  eq->add_option("--kind", kind, "wt0 or top");
  eq->add_option("--n", nn, "number of marked points");
  eq->add_option("--format", format, "text or json");
  eq->callback([&] {
    require_genus(g);
    SymSeries f = equivariant_chi(g, parse_kind(kind), nn);
    std::cout << (parse_format(format) == RenderFormat::json ? sym_to_json(f)
                                                             : sym_to_text(f))
              << "\n";
  });

  int exit_code = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "tables, properties, ncount or bounds")->required();
  verify->add_option("--seed", seed, "randomness seed for the property suite");
  verify->add_option("--depth", depth,
                     "truncation degree (properties), max r (ncount) or max genus (bounds)");
  verify->callback([&] {
    VerificationReport report;
    if (suite == "tables") {
      report = verify_tables();
    } else if (suite == "properties") {
      report = verify_properties(seed, depth);
    } else if (suite == "ncount") {
      report = verify_ncount(depth >= 2 ? depth : 14);
    } else if (suite == "bounds") {
      report = verify_bounds(depth >= 2 ? depth : 12);
    } else {
      throw CLI::ValidationError("suite", "must be tables, properties, ncount or bounds");
    }
    exit_code = print_report(report);
  });

  CLI11_PARSE(app, argc, argv);
  return exit_code;
}
