#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcalg/cli.hpp"

using namespace mcalg;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cli::spec_error(0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cli::Workbench load(const std::string& path) { return cli::build(cli::parse_spec(read_file(path))); }

json run_json(const cli::SuiteRun& r) {
  json j = {{"suite", r.report.suite},
            {"algebra", r.algebra},
            {"size", r.size},
            {"passed", r.report.applicable && r.report.passed},
            {"status", cli::status_word(r.report)},
            {"elapsed_ms", r.elapsed_ms}};
  if (r.report.witness) j["witness"] = {{"rule", r.report.witness->rule}, {"elements", r.witness_labels}};
  if (r.report.sampled) j["seed"] = r.report.seed;
  if (!r.report.note.empty()) j["note"] = r.report.note;
  return j;
}

int cmd_build(const std::string& path) {
  cli::Workbench w = load(path);
  std::cout << "algebra: " << w.description << "\nsize: " << w.size() << "\ntop: " << w.labels[w.base.top()] << "\n";
  for (Elem i = 0; i < w.size(); ++i) {
    std::cout << "  #" << i << " " << w.labels[i];
    if (w.T) std::cout << "  T=" << w.labels[(*w.T)[i]];
    std::cout << "\n";
  }
  return 0;
}

int cmd_check(const std::string& path, std::string suite, bool as_json) {
  cli::Workbench w = load(path);
  if (suite.empty()) suite = w.spec.suites.empty() ? "all" : cli::detail::join_list(w.spec.suites);
  const bool all = suite == "all";
  SuiteOptions opts = SuiteOptions::from_env();
  std::vector<cli::SuiteRun> runs;
  for (const cli::SuiteDef* d : cli::select_suites(w, suite)) runs.push_back(cli::run_one(w, *d, opts));
  if (as_json) {
    json arr = json::array();
    for (const auto& r : runs) arr.push_back(run_json(r));
    std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  } else {
    std::cout << "algebra: " << w.description << " (" << w.size() << " elements)\n";
    for (const auto& r : runs) {
      if (all && !r.report.applicable) continue;
      std::cout << cli::format_run(r) << "\n";
    }
  }
  return cli::exit_code(runs, all);
}

int cmd_decompose(const std::string& path) {
  cli::Workbench w = load(path);
  if (!w.mc) {
    FixContext C = w.fix_context();
    for (Elem x = 0; x < w.size(); ++x) {
      auto [d, b] = global_embed(C, x);
      std::cout << w.labels[x] << " -> (" << w.labels[d] << ", " << w.labels[b] << ")\n";
    }
    return 0;
  }
  auto parts = mc_decompose(*w.mc);
  for (Elem x = 0; x < w.size(); ++x)
    std::cout << w.labels[x] << " -> (" << to_string(parts[x].first) << ", " << to_string(parts[x].second) << ")\n";
  return 0;
}

std::string label_set(const cli::Workbench& w, const std::vector<Elem>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + w.labels[xs[i]];
  return s + "}";
}

int cmd_fixedpoints(const std::string& path, const std::string& at) {
  cli::Workbench w = load(path);
  FixContext C = w.fix_context();
  auto line = [&](Elem u) {
    std::cout << w.labels[u] << ": beta=" << w.labels[beta(C, u)] << " delta=" << w.labels[delta_fn(C, u)]
              << " nowhere-invariant=" << (is_nowhere_invariant(C, u) ? "yes" : "no") << "\n";
  };
  if (!at.empty()) {
    Elem u = w.find(at);
    line(u);
    std::cout << "Fix: " << label_set(w, fix_set(C, u)) << "\nPhi: " << label_set(w, phi_set(C, u)) << "\n";
    return 0;
  }
  for (Elem u = 0; u < w.size(); ++u) line(u);
  return 0;
}

int cmd_envelope(const std::string& path) {
  cli::Workbench w = load(path);
  SymAlgebra S = w.sym();
  EnvelopeResult R = envelope(make_presented(S));
  PresentedSpec P = to_presented(R.E);
  std::cout << "# envelope of " << w.description << ": " << R.E.size() << " elements, method=" << R.method << "\n";
  std::cout << cli::print_spec(cli::presented_to_spec(P));
  auto mask_of = coatom_codes(R.E).second;
  std::cout << "# e-table: input -> envelope element (mask)\n";
  for (Elem x = 0; x < S.size(); ++x)
    std::cout << "# " << w.labels[x] << " -> " << R.E.labels()[R.e[x]] << " (" << mask_of[R.e[x]] << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite cubic and multicubic implication algebras"};
  app.require_subcommand(1);
  std::string path, suite, at;
  bool as_json = false;

  auto* build = app.add_subcommand("build", "Construct the algebra and list its elements");
  build->add_option("spec", path, "spec file")->required();
  auto* check = app.add_subcommand("check", "Run verification suites");
  check->add_option("spec", path, "spec file")->required();
  check->add_option("--suite", suite, "suite name, comma list, or all");
  check->add_flag("--json", as_json, "JSON report");
  auto* decompose = app.add_subcommand("decompose", "Print x -> (nucleus part, fixed part)");
  decompose->add_option("spec", path, "spec file")->required();
  auto* fixed = app.add_subcommand("fixedpoints", "Print beta, delta and fixed-point sets");
  fixed->add_option("spec", path, "spec file")->required();
  fixed->add_option("--at", at, "element label or #index");
  auto* env = app.add_subcommand("envelope", "Print the locally symmetric envelope as a presented spec");
  env->add_option("spec", path, "spec file")->required();
  auto* dot = app.add_subcommand("export-dot", "Print the Hasse diagram in DOT");
  dot->add_option("spec", path, "spec file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kInputError;
  }

  try {
    if (*build) return cmd_build(path);
    if (*check) return cmd_check(path, suite, as_json);
    if (*decompose) return cmd_decompose(path);
    if (*fixed) return cmd_fixedpoints(path, at);
    if (*env) return cmd_envelope(path);
    if (*dot) {
      std::cout << cli::export_dot(load(path));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInputError;
  }
  return cli::kInputError;
}
