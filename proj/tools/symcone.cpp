#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "symcone/cli.hpp"

int main(int argc, char** argv) {
  using symcone::cli::RunConfig;
  CLI::App app{"Exact computations for symmetric cones and monoids in R^n, n = 1, 2, ..."};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.threads = symcone::thread_count_from_env();

  const std::map<std::string, std::string> about{
      {"dual-chain", "dual chain basis F_r and its verification for n = r..nmax"},
      {"hilbert", "Hilbert basis of the lattice points of one cone"},
      {"gordan", "cone and Hilbert basis stabilization up to nmax"},
      {"stab-index", "certified stability index of the cone chain"},
      {"caratheodory", "decompose the target with at most |supp| terms"},
      {"min-terms", "fewest orbit elements whose conic hull holds the target"},
      {"oracle-hb", "irreducibles up to a norm bound by enumeration"},
      {"localize", "the slice C_n (n from --dim, default max width)"},
      {"dualize", "dual of the cone spanned by the generators"},
  };
  for (const auto& name : symcone::cli::commands()) {
    auto* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("input", cfg.input_path, "generator JSON file")->required();
    sub->add_option("--nmax", cfg.n_max, "largest dimension to process (default: max width + 3)");
    sub->add_option("--orbit-cap", cfg.orbit_cap, "largest orbit to enumerate")->capture_default_str();
    sub->add_option("--norm-bound", cfg.norm_bound, "1-norm bound for oracle-hb")->capture_default_str();
    sub->add_option("--budget", cfg.budget, "LP calls (min-terms) or enumerated points (oracle-hb)");
    sub->add_option("--dim", cfg.dim, "ambient dimension for single-cone commands");
    sub->add_option("--target", cfg.target, "target vector as a JSON array, e.g. '[1,\"1/2\",0]'");
    sub->add_option("--seed", cfg.seed, "reserved; all commands are deterministic");
    sub->add_flag("--witnesses", cfg.emit_witnesses, "include exact membership witnesses");
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : symcone::cli::kUsage;
  }
  return symcone::cli::run(cfg, std::cout, std::cerr);
}
