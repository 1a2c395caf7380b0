#include <iostream>

#include <CLI11.hpp>

#include "interior/cli/run.hpp"
#include "interior/error.hpp"

using namespace interior;

int main(int argc, char** argv) {
  CLI::App app{"Interior polynomials of bipartite graphs"};

  cli::RunConfig config;
  std::string input;
  std::string method = "auto";
  std::string inject;
  bool json = false;
  bool verify = false;
  std::size_t upto = 0;

  auto* in_opt = app.add_option("--input", input, "graph file ('p bip nV nW nE' + 'e i j' lines)");
  auto* gen_opt = app.add_option("--gen", config.generator,
                                 "generator: complete m n | grid2 k | path k | cycle L | star n | random nV nW p [seed]");
  in_opt->excludes(gen_opt);
  app.add_option("--method", method, "ehrhart | nonexpanding | altcycle | closed-form | auto | verify")
      ->capture_default_str();
  app.add_flag("--verify", verify, "run every applicable method and compare (same as --method verify)");
  app.add_flag("--json", json, "machine-readable report");
  auto* upto_opt = app.add_option("--ehrhart-upto", upto, "also report lattice counts for dilations 0..S");
  app.add_option("--threads", config.enumeration.threads, "worker threads for lattice enumeration")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--max-points", config.enumeration.max_points, "lattice points allowed per dilation")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "seed for random generator specs without one")->capture_default_str();
  app.add_option("--inject-fault", inject, "add 1 to this method's result (testing verify mode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitInput;
  }

  try {
    if (!input.empty()) config.input = input;
    const auto m = cli::parse_method(verify ? "verify" : method);
    if (!m) throw InvalidInput("unknown method '" + method + "'");
    config.method = *m;
    if (!inject.empty()) {
      config.inject_fault = cli::parse_method(inject);
      if (!config.inject_fault) throw InvalidInput("unknown method '" + inject + "'");
    }
    if (*upto_opt) config.ehrhart_upto = upto;
    config.format = json ? cli::OutputFormat::Json : cli::OutputFormat::Text;

    const auto report = cli::run(config);
    if (config.format == cli::OutputFormat::Json)
      std::cout << cli::to_json(report).dump(2) << '\n';
    else
      std::cout << cli::to_text(report);
    cli::require_agreement(report);
    return cli::kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code_for(e);
  }
}
