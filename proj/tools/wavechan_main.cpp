#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wavechan/commands.hpp"
#include "wavechan/scenario.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

extern "C" void openblas_set_num_threads(int);

namespace {
void apply_thread_cap() {
  const char* env = std::getenv("WAVECHAN_THREADS");
  if (!env) return;
  const int n = std::atoi(env);
  if (n < 1) return;
  openblas_set_num_threads(n);
#ifdef _OPENMP
  omp_set_num_threads(n);
#endif
}
}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();
  CLI::App app{"wavechan: shape-independent wave-channel bounds, capacities, "
               "and the brute-force Green's-operator oracle"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir = ".";
  long long seed = -1;
  int max_n = -1;
  double resolution = -1;

  auto add_common = [&](CLI::App* cmd, bool scenario_required) {
    auto* opt = cmd->add_option("--scenario", scenario_path, "scenario JSON file");
    if (scenario_required) opt->required();
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--seed", seed, "override the scenario seed");
    cmd->add_option("--max-n", max_n, "override the spectrum order limit");
    cmd->add_option("--resolution", resolution, "override the grid spacing");
  };

  auto* bounds = app.add_subcommand("bounds", "emit bound/staircase spectra");
  add_common(bounds, true);
  auto* count = app.add_subcommand("count", "channel counts vs domain radius");
  add_common(count, true);
  auto* capacity = app.add_subcommand("capacity", "capacity bounds vs radius");
  add_common(capacity, true);
  auto* oracle = app.add_subcommand("oracle", "discretized Green's-operator SVD");
  add_common(oracle, true);
  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  add_common(verify, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return wavechan::cmd_verify(out_dir);
    auto scn = wavechan::load_scenario(scenario_path);
    if (seed >= 0) scn.seed = static_cast<std::uint64_t>(seed);
    if (max_n >= 0) scn.max_order = max_n;
    if (resolution > 0) scn.resolution = resolution;
    if (bounds->parsed()) return wavechan::cmd_bounds(scn, out_dir);
    if (count->parsed()) return wavechan::cmd_count(scn, out_dir);
    if (capacity->parsed()) return wavechan::cmd_capacity(scn, out_dir);
    if (oracle->parsed()) return wavechan::cmd_oracle(scn, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
