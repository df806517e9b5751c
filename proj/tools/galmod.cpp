#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "galmod/cli/commands.hpp"

int main(int argc, char** argv) {
  using galmod::cli::RunConfig;
  CLI::App app{"Modular group-algebra and Artin-Schreier computations with JSON reports"};
  app.require_subcommand(1);

  RunConfig config;
  std::string json_out;
  std::string module_file, builtin, delta;

  auto add_common = [&](CLI::App* sub, bool with_k) {
    sub->add_option("--p", config.p, "prime p")->capture_default_str();
    sub->add_option("--n", config.n, "G = Z/p^n")->capture_default_str();
    if (with_k) sub->add_option("--k", config.k, "rank k")->capture_default_str();
    sub->add_option("--seed", config.seed, "seed for sampled checks")->capture_default_str();
    sub->add_option("--max-enum", config.max_enum, "enumeration cutoff")->capture_default_str();
    sub->add_option("--json-out", json_out, "also write the report to this file");
  };

  auto* decompose = app.add_subcommand("decompose", "Cyclic summands of an F_p[G]-module");
  add_common(decompose, true);
  decompose->add_option("--module-file", module_file, "module JSON {p, n, dim, sigma}");
  decompose->add_option("--builtin", builtin, "regular | regular-plus-trivial | free | free-plus-trivial | trivial");
  auto* family = app.add_subcommand("family", "p^k free submodules of F_p[G]^k + F_p");
  add_common(family, true);
  auto* group = app.add_subcommand("group-verify", "Brute-force checks on F_p[G]^k x| G");
  add_common(group, true);
  auto* realize = app.add_subcommand("realize", "Defining polynomials for p^k extensions over F_p(t)");
  add_common(realize, true);
  realize->add_option("--delta", delta, "witness class as a rational function (default t)");
  auto* pairing = app.add_subcommand("pairing", "Artin-Schreier pairing over F_q inside F_(q^p)");
  add_common(pairing, false);

  CLI11_PARSE(app, argc, argv);

  config.command = app.get_subcommands().front()->get_name();
  if (!module_file.empty()) config.module_file = module_file;
  if (!builtin.empty()) config.builtin = builtin;
  if (!delta.empty()) config.delta = delta;

  const auto report = galmod::cli::run(config);
  const std::string text = galmod::cli::to_json(report).dump(2);
  std::cout << text << "\n";
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) {
      std::cerr << "cannot write " << json_out << "\n";
      return galmod::cli::kInputError;
    }
    out << text << "\n";
  }
  if (report.exit_code == galmod::cli::kInputError) {
    std::cerr << "error: " << report.result["error"]["message"].get<std::string>() << "\n";
  }
  return report.exit_code;
}
