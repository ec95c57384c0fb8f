#include <CLI11.hpp>
#include <iostream>

#include "anzai/cli.hpp"

int main(int argc, char** argv) {
  anzai::cli::RunConfig cfg;
  CLI::App app{"Skew-product dynamics, cohomology and invariant conditional expectations"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"report", "cohomology report (n_o, m_o, k_o, generators) as JSON"},
      {"average", "Birkhoff (and optionally exact Cesaro) averages as CSV"},
      {"diagnose", "unique-ergodicity diagnostic as CSV"},
      {"factorize", "Fejer-Riesz factorization of a positive trigonometric polynomial"},
      {"expect", "invariant conditional expectation E_A(h) or E_can(h) as JSON"},
      {"verify-ce", "conditional-expectation axiom suites"},
      {"dominate", "domination check m_o E_can(h) - E_A(h) >= 0"},
      {"absorb", "absorption check E_can(E_{m_o}(h)) = E_can(h)"},
      {"example-zinf", "golden suite for the flip cocycle over Z u {inf}"},
  };
  for (const auto& s : commands) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--system", cfg.system_path, "skew system JSON");
    sub->add_option("--observable", cfg.observable_path, "torus observable JSON");
    sub->add_option("--input", cfg.input_path, "input JSON (factorize)");
    sub->add_option("--matrix", cfg.matrix_path, "expectation matrix JSON");
    sub->add_option("--out", cfg.out_path, "output path (default stdout)");
    sub->add_option("--tol", cfg.tol, "tolerance")->capture_default_str();
    sub->add_option("--grid", cfg.grid, "circle grid size for factorization")->capture_default_str();
    sub->add_option("--zgrid", cfg.zgrid, "fiber grid size")->capture_default_str();
    sub->add_option("--schedule", cfg.schedule, "increasing N values, comma separated")
        ->delimiter(',');
    sub->add_option("--x", cfg.points, "base points, comma separated (inf, integers or angles)")
        ->delimiter(',');
    sub->add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
    sub->add_option("--n-max", cfg.n_max, "cohomology search bound")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "random samples per suite")->capture_default_str();
    sub->add_flag("--cesaro", cfg.cesaro, "average: add exact Cesaro values");
    sub->add_flag("--square", cfg.square, "dominate: test |p|^2 for the given p");
    sub->callback([&cfg, name = s.name] { cfg.subcommand = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : anzai::cli::kExitInput;
  }
  return anzai::cli::run(cfg, std::cout, std::cerr);
}
