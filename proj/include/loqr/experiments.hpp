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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loqr/benchmarks.hpp"
#include "loqr/reservoir.hpp"

namespace loqr {

enum class ExperimentKind { MemoryCapacity, Forecast, ShotNoise };
enum class ForecastTask { MackeyGlass, Narma, Ising };

const char* to_string(ExperimentKind kind);
const char* to_string(ForecastTask task);
ForecastTask forecast_task_from_string(const std::string& name);

/// Resolved description of one experiment sweep. Per-realization seeds are
/// derived from the master seed with derive_seed(master, realization, stream),
/// so a spec (including its master seed) pins every byte of the output.
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::MemoryCapacity;
  ForecastTask task = ForecastTask::MackeyGlass;
  ReservoirConfig reservoir;
  std::vector<double> alpha_fb_list{1.5, 2.2, 2.4, 3.2, 4.6};
  std::vector<double> alpha_in_list{0.001};
  std::vector<std::uint64_t> shot_list{1000, 10000, 100000, 10000000, 10000000000ULL};
  std::vector<int> horizons{1, 2, 4, 8, 16};
  std::vector<int> narma_orders{7, 10};
  int max_delay = 25;
  int realizations = 30;
  std::uint64_t master_seed = 42;
  int threads = 0;
  std::string out_dir = ".";
};

/// Throws std::invalid_argument on empty sweep lists or bad counts.
void validate(const ExperimentSpec& spec);

/// JSON round-trip of the resolved spec (versioned schema, version 1).
std::string spec_to_json(const ExperimentSpec& spec);
ExperimentSpec spec_from_json(const std::string& json_text);

ReservoirSeeds seeds_for(std::uint64_t master, std::uint64_t realization);

// ---------------------------------------------------------------------------
// In-memory result tables. Rows are sorted by key so output bytes do not
// depend on scheduling.

struct MemoryCapacityResult {
  struct DelayRow {
    double alpha_fb;
    int tau;
    double mc_mean;
  };
  struct TotalRow {
    double alpha_fb;
    double mc_tot_mean;
  };
  std::vector<DelayRow> per_delay;
  std::vector<TotalRow> totals;
};

struct ForecastResult {
  struct Row {
    std::string task;
    double alpha_fb;
    int horizon_or_order;
    double nmse_mean;
  };
  std::vector<Row> rows;
  int failed_instances = 0;
};

struct ShotNoiseResult {
  struct Row {
    double alpha_in;
    double alpha_fb;
    std::uint64_t n_m;
    double mc_tot_mean;
    double mc_tot_exact_mean;
  };
  std::vector<Row> rows;
};

/// Memory-capacity sweep over alpha_fb: fresh seeds and an i.i.d. U[0,1)
/// drive per realization, capacities averaged over realizations.
MemoryCapacityResult run_memory_capacity(const ExperimentSpec& spec);

/// Forecasting benchmark for spec.task: MG/Ising sweep the horizon list,
/// NARMA the order list. Diverged NARMA instances are excluded from the
/// mean and counted in failed_instances.
ForecastResult run_forecast(const ExperimentSpec& spec);

/// Finite-measurement sweep over (alpha_in, alpha_fb, N_m) with an
/// exact-mode reference column per (alpha_in, alpha_fb).
ShotNoiseResult run_shot_noise(const ExperimentSpec& spec);

// ---------------------------------------------------------------------------
// CSV + metadata sidecar emission. Each writer returns the paths written
// (CSV files first, sidecar last). Output is byte-deterministic for a fixed
// spec in exact mode.

std::vector<std::string> write_results(const ExperimentSpec& spec,
                                       const MemoryCapacityResult& result);
std::vector<std::string> write_results(const ExperimentSpec& spec, const ForecastResult& result);
std::vector<std::string> write_results(const ExperimentSpec& spec, const ShotNoiseResult& result);

/// Emit gnuplot scripts recreating the standard views of the given CSVs
/// (MC vs delay per gain, log-scale NMSE vs horizon, MC_tot vs budget).
/// Throws std::runtime_error on a missing or empty CSV.
std::vector<std::string> emit_plot_scripts(const std::vector<std::string>& csv_paths,
                                           const std::string& out_dir);

}  // namespace loqr
