// compres: verification and computation front end.
//
//   compres verify <target> [flags]     target: all hecke rpoly hh0 clozel
//                                       commutator geomlemma torus engine
//   compres table <rpoly|commutator|pres> <a..b>
//   compres reduce "<hecke expression>"
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage or config error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "compres/engine.hpp"
#include "compres/expr.hpp"
#include "compres/hh0.hpp"
#include "compres/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw compres::verify::ConfigError("cannot write " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace compres;
  CLI::App app{"Exact Hecke algebra, HH0 and cyclic homology verification"};
  app.require_subcommand(1);
  app.fallthrough();

  verify::SuiteConfig cfg;
  std::optional<int> rank;
  std::string spec_file;
  std::string format_name = "text";
  std::string out_path;
  app.add_option("--nmax", cfg.nmax, "Largest n for the spectral identities")->capture_default_str();
  app.add_option("--lmax", cfg.lmax, "Largest l(w) for R-polynomial checks")->capture_default_str();
  app.add_option("--oracle-cutoff", cfg.oracle_cutoff, "Word length checked against the HH0 oracle")
      ->capture_default_str();
  app.add_option("--rank", rank, "Torus rank (default: 1 and 2)");
  app.add_option("--window", cfg.window, "Torus exponent window")->capture_default_str();
  app.add_option("--degree", cfg.degree, "Torus degree (default: all 0..rank)");
  app.add_option("--spec", spec_file, "Algebra spec file (JSON) for the engine suite");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--format", format_name, "text, json or csv")->capture_default_str();
  app.add_option("--out", out_path, "Write output to a file");

  std::string target;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("target", target, "Suite name or all")->required();

  std::string table_target;
  std::string range_text;
  auto* table_cmd = app.add_subcommand("table", "Print a table of values");
  table_cmd->add_option("target", table_target, "rpoly, commutator or pres")->required();
  table_cmd->add_option("range", range_text, "a..b")->required();

  std::string expression;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a Hecke expression to HH0");
  reduce_cmd->add_option("expr", expression, "e.g. \"T[sts]\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const verify::Format format = verify::parse_format(format_name);
    if (rank) cfg.ranks = {*rank};
    if (!spec_file.empty()) cfg.specs = {engine::read_algebra_file(spec_file)};

    if (*verify_cmd) {
      const verify::Report report = verify::run_suite(target, cfg);
      emit(verify::render(report, format), out_path);
      return report.pass() ? kExitPass : kExitFail;
    }
    if (*table_cmd) {
      const auto [from, to] = verify::parse_range(range_text);
      emit(verify::render(verify::make_table(table_target, from, to), format), out_path);
      return kExitPass;
    }
    if (*reduce_cmd) {
      emit(render(reduce_to_hh0(parse_hecke(expression))) + "\n", out_path);
      return kExitPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const verify::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const engine::AlgebraError& e) {
    std::cerr << "algebra error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const engine::TooLarge& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
