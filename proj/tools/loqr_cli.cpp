// Copyright 2026 The loqr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "loqr/experiments.hpp"
#include "loqr/io.hpp"
#include "loqr/mesh.hpp"
#include "loqr/version.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out_dir;
  int realizations = 0;
  bool exact = false;
  std::vector<std::uint64_t> shots;
  std::vector<double> alpha_fb;
  std::vector<double> alpha_in;
  std::vector<int> horizons;
  std::vector<int> orders;
  int threads = -1;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON config file (flags override it)");
  cmd->add_option("--seed", flags.seed, "master seed")->each([&](const std::string&) {
    flags.seed_set = true;
  });
  cmd->add_option("--out", flags.out_dir, "output directory");
  cmd->add_option("--realizations", flags.realizations, "independent realizations");
  cmd->add_flag("--exact", flags.exact, "exact expectation values (no shot noise)");
  cmd->add_option("--shots", flags.shots, "per-step measurement budget(s)")->delimiter(',');
  cmd->add_option("--alpha-fb", flags.alpha_fb, "feedback strength sweep")->delimiter(',');
  cmd->add_option("--alpha-in", flags.alpha_in, "input strength(s)")->delimiter(',');
  cmd->add_option("--horizons", flags.horizons, "prediction horizons")->delimiter(',');
  cmd->add_option("--orders", flags.orders, "NARMA orders")->delimiter(',');
  cmd->add_option("--threads", flags.threads, "worker threads (0 = hardware)");
}

loqr::ExperimentSpec resolve_spec(const CommonFlags& flags, loqr::ExperimentKind kind) {
  loqr::ExperimentSpec spec;
  if (!flags.config_path.empty())
    spec = loqr::spec_from_json(loqr::read_file(flags.config_path));
  spec.kind = kind;
  if (flags.seed_set) spec.master_seed = flags.seed;
  if (!flags.out_dir.empty()) spec.out_dir = flags.out_dir;
  if (flags.realizations > 0) spec.realizations = flags.realizations;
  if (!flags.alpha_fb.empty()) spec.alpha_fb_list = flags.alpha_fb;
  if (!flags.alpha_in.empty()) spec.alpha_in_list = flags.alpha_in;
  if (!flags.horizons.empty()) spec.horizons = flags.horizons;
  if (!flags.orders.empty()) spec.narma_orders = flags.orders;
  if (flags.threads >= 0) spec.threads = flags.threads;
  if (!flags.shots.empty()) {
    spec.shot_list = flags.shots;
    if (kind != loqr::ExperimentKind::ShotNoise) spec.reservoir.shots = flags.shots.front();
  }
  if (flags.exact) spec.reservoir.shots = 0;
  if (kind == loqr::ExperimentKind::ShotNoise && !flags.alpha_in.empty())
    spec.alpha_in_list = flags.alpha_in;
  else if (!flags.alpha_in.empty())
    spec.reservoir.alpha_in = flags.alpha_in.front();
  return spec;
}

void report_written(const std::vector<std::string>& paths) {
  for (const auto& p : paths) std::cout << "wrote " << p << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loqr — feedback-driven linear-optical reservoir simulator"};
  app.set_version_flag("--version", loqr::kVersion);
  app.require_subcommand(1);

  CommonFlags mc_flags, fc_flags, sn_flags;
  std::string task_name = "mg";

  CLI::App* mc = app.add_subcommand("memory-capacity", "linear memory capacity sweep");
  add_common_flags(mc, mc_flags);

  CLI::App* fc = app.add_subcommand("forecast", "forecasting benchmark");
  fc->add_option("--task", task_name, "mg | narma | ising")->required();
  add_common_flags(fc, fc_flags);

  CLI::App* sn = app.add_subcommand("shot-noise", "finite measurement ensemble study");
  add_common_flags(sn, sn_flags);

  CLI::App* plot = app.add_subcommand("plot", "emit gnuplot scripts for result CSVs");
  std::vector<std::string> csvs;
  std::string plot_out = ".";
  plot->add_option("csv", csvs, "input CSV files")->required();
  plot->add_option("--out", plot_out, "output directory");

  CLI::App* layout_cmd = app.add_subcommand("layout", "print the mesh layout table");
  int layout_modes = 16, layout_photons = 4;
  layout_cmd->add_option("--modes", layout_modes, "mode count");
  layout_cmd->add_option("--photons", layout_photons, "photon count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mc->parsed()) {
      const auto spec = resolve_spec(mc_flags, loqr::ExperimentKind::MemoryCapacity);
      report_written(loqr::write_results(spec, loqr::run_memory_capacity(spec)));
    } else if (fc->parsed()) {
      auto spec = resolve_spec(fc_flags, loqr::ExperimentKind::Forecast);
      spec.task = loqr::forecast_task_from_string(task_name);
      const auto result = loqr::run_forecast(spec);
      if (result.failed_instances > 0)
        std::cerr << "warning: " << result.failed_instances
                  << " NARMA instance(s) diverged and were excluded\n";
      report_written(loqr::write_results(spec, result));
    } else if (sn->parsed()) {
      const auto spec = resolve_spec(sn_flags, loqr::ExperimentKind::ShotNoise);
      report_written(loqr::write_results(spec, loqr::run_shot_noise(spec)));
    } else if (plot->parsed()) {
      report_written(loqr::emit_plot_scripts(csvs, plot_out));
    } else if (layout_cmd->parsed()) {
      std::cout << loqr::build_default_layout(layout_modes, layout_photons).table();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
