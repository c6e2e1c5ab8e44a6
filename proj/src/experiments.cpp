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

#include "loqr/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "loqr/io.hpp"
#include "loqr/version.hpp"

namespace loqr {

namespace {

using nlohmann::json;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double mean_ignoring_nan(const std::vector<double>& xs, int* kept = nullptr) {
  double sum = 0.0;
  int n = 0;
  for (double x : xs)
    if (!std::isnan(x)) {
      sum += x;
      ++n;
    }
  if (kept) *kept = n;
  return n > 0 ? sum / n : kNan;
}

json seeds_json(const ExperimentSpec& spec) {
  json arr = json::array();
  for (int r = 0; r < spec.realizations; ++r) {
    const ReservoirSeeds s = seeds_for(spec.master_seed, r);
    arr.push_back({{"realization", r},
                   {"mesh", s.mesh},
                   {"feedback", s.feedback},
                   {"drive", s.drive},
                   {"shots", s.shots}});
  }
  return arr;
}

json metadata_json(const ExperimentSpec& spec) {
  const MeshLayout layout = build_default_layout(spec.reservoir.modes, spec.reservoir.photons);
  const std::string spec_json = spec_to_json(spec);
  return json{{"library_version", kVersion},
              {"experiment", to_string(spec.kind)},
              {"spec_hash", fnv1a_hex(spec_json)},
              {"spec", json::parse(spec_json)},
              {"master_seed", spec.master_seed},
              {"realizations", spec.realizations},
              {"layout",
               {{"modes", layout.modes},
                {"layers", layout.layers},
                {"r_fb", layout.feedback_mzi_count()},
                {"wedge_depth", layout.wedge_depth}}},
              {"seeds", seeds_json(spec)}};
}

std::string csv_path(const ExperimentSpec& spec, const std::string& name) {
  std::filesystem::create_directories(spec.out_dir);
  return (std::filesystem::path(spec.out_dir) / name).string();
}

ReservoirConfig config_for(const ExperimentSpec& spec, int realization) {
  ReservoirConfig config = spec.reservoir;
  config.seeds = seeds_for(spec.master_seed, static_cast<std::uint64_t>(realization));
  return config;
}

}  // namespace

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::MemoryCapacity: return "memory-capacity";
    case ExperimentKind::Forecast: return "forecast";
    case ExperimentKind::ShotNoise: return "shot-noise";
  }
  return "?";
}

const char* to_string(ForecastTask task) {
  switch (task) {
    case ForecastTask::MackeyGlass: return "mg";
    case ForecastTask::Narma: return "narma";
    case ForecastTask::Ising: return "ising";
  }
  return "?";
}

ForecastTask forecast_task_from_string(const std::string& name) {
  if (name == "mg") return ForecastTask::MackeyGlass;
  if (name == "narma") return ForecastTask::Narma;
  if (name == "ising") return ForecastTask::Ising;
  throw std::invalid_argument("unknown forecast task: " + name);
}

void validate(const ExperimentSpec& spec) {
  if (spec.realizations < 1)
    throw std::invalid_argument("ExperimentSpec: realizations must be >= 1");
  if (spec.alpha_fb_list.empty())
    throw std::invalid_argument("ExperimentSpec: alpha_fb sweep list is empty");
  if (spec.kind == ExperimentKind::ShotNoise &&
      (spec.alpha_in_list.empty() || spec.shot_list.empty()))
    throw std::invalid_argument("ExperimentSpec: shot-noise needs alpha_in and shot lists");
  if (spec.kind == ExperimentKind::Forecast) {
    if (spec.task == ForecastTask::Narma && spec.narma_orders.empty())
      throw std::invalid_argument("ExperimentSpec: NARMA order list is empty");
    if (spec.task != ForecastTask::Narma && spec.horizons.empty())
      throw std::invalid_argument("ExperimentSpec: horizon list is empty");
    for (int h : spec.horizons)
      if (h < 0) throw std::invalid_argument("ExperimentSpec: horizons must be >= 0");
  }
  if (spec.max_delay < 1 || spec.max_delay > spec.reservoir.windows.washout)
    throw std::invalid_argument("ExperimentSpec: need 1 <= max_delay <= washout");
}

ReservoirSeeds seeds_for(std::uint64_t master, std::uint64_t realization) {
  return ReservoirSeeds{derive_seed(master, realization, SeedStream::Mesh),
                        derive_seed(master, realization, SeedStream::Feedback),
                        derive_seed(master, realization, SeedStream::Drive),
                        derive_seed(master, realization, SeedStream::Shots)};
}

std::string spec_to_json(const ExperimentSpec& spec) {
  const ReservoirConfig& rc = spec.reservoir;
  json j{{"version", 1},
         {"experiment", to_string(spec.kind)},
         {"task", to_string(spec.task)},
         {"master_seed", spec.master_seed},
         {"realizations", spec.realizations},
         {"threads", spec.threads},
         {"out_dir", spec.out_dir},
         {"max_delay", spec.max_delay},
         {"reservoir",
          {{"modes", rc.modes},
           {"photons", rc.photons},
           {"alpha_in", rc.alpha_in},
           {"alpha_fb", rc.alpha_fb},
           {"eta_eff", rc.eta_eff},
           {"shots", rc.shots},
           {"gaussian_threshold", rc.gaussian_threshold},
           {"washout", rc.windows.washout},
           {"train_len", rc.windows.train_len},
           {"test_len", rc.windows.test_len}}},
         {"sweeps",
          {{"alpha_fb", spec.alpha_fb_list},
           {"alpha_in", spec.alpha_in_list},
           {"shots", spec.shot_list},
           {"horizons", spec.horizons},
           {"narma_orders", spec.narma_orders}}}};
  return j.dump(2);
}

ExperimentSpec spec_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  if (j.value("version", 0) != 1)
    throw std::invalid_argument("config: unsupported schema version (expected 1)");

  ExperimentSpec spec;
  const std::string kind = j.value("experiment", std::string(to_string(spec.kind)));
  if (kind == "memory-capacity") spec.kind = ExperimentKind::MemoryCapacity;
  else if (kind == "forecast") spec.kind = ExperimentKind::Forecast;
  else if (kind == "shot-noise") spec.kind = ExperimentKind::ShotNoise;
  else throw std::invalid_argument("config: unknown experiment kind: " + kind);
  spec.task = forecast_task_from_string(j.value("task", std::string("mg")));
  spec.master_seed = j.value("master_seed", spec.master_seed);
  spec.realizations = j.value("realizations", spec.realizations);
  spec.threads = j.value("threads", spec.threads);
  spec.out_dir = j.value("out_dir", spec.out_dir);
  spec.max_delay = j.value("max_delay", spec.max_delay);
  if (j.contains("reservoir")) {
    const json& r = j["reservoir"];
    ReservoirConfig& rc = spec.reservoir;
    rc.modes = r.value("modes", rc.modes);
    rc.photons = r.value("photons", rc.photons);
    rc.alpha_in = r.value("alpha_in", rc.alpha_in);
    rc.alpha_fb = r.value("alpha_fb", rc.alpha_fb);
    rc.eta_eff = r.value("eta_eff", rc.eta_eff);
    rc.shots = r.value("shots", rc.shots);
    rc.gaussian_threshold = r.value("gaussian_threshold", rc.gaussian_threshold);
    rc.windows.washout = r.value("washout", rc.windows.washout);
    rc.windows.train_len = r.value("train_len", rc.windows.train_len);
    rc.windows.test_len = r.value("test_len", rc.windows.test_len);
  }
  if (j.contains("sweeps")) {
    const json& s = j["sweeps"];
    if (s.contains("alpha_fb")) spec.alpha_fb_list = s["alpha_fb"].get<std::vector<double>>();
    if (s.contains("alpha_in")) spec.alpha_in_list = s["alpha_in"].get<std::vector<double>>();
    if (s.contains("shots")) spec.shot_list = s["shots"].get<std::vector<std::uint64_t>>();
    if (s.contains("horizons")) spec.horizons = s["horizons"].get<std::vector<int>>();
    if (s.contains("narma_orders")) spec.narma_orders = s["narma_orders"].get<std::vector<int>>();
  }
  return spec;
}

MemoryCapacityResult run_memory_capacity(const ExperimentSpec& spec) {
  validate(spec);
  const int gains = static_cast<int>(spec.alpha_fb_list.size());
  const int reals = spec.realizations;
  const int total = spec.reservoir.total_steps();

  std::vector<CapacityProfile> profiles(static_cast<std::size_t>(gains) * reals);
  parallel_for_index(profiles.size(), spec.threads, [&](std::size_t job) {
    const int g = static_cast<int>(job) / reals;
    const int r = static_cast<int>(job) % reals;
    ReservoirConfig config = config_for(spec, r);
    config.alpha_fb = spec.alpha_fb_list[g];
    RandomEngine drive_rng(config.seeds.drive);
    const std::vector<double> drive = iid_drive(total, 0.0, 1.0, drive_rng);
    const RunTrace trace = run_reservoir(config, drive);
    profiles[job] = memory_capacity(trace, config.windows, spec.max_delay);
  });

  // Sort gains for stable output; realization means per (gain, tau).
  std::vector<int> order(gains);
  for (int g = 0; g < gains; ++g) order[g] = g;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return spec.alpha_fb_list[a] < spec.alpha_fb_list[b]; });

  MemoryCapacityResult result;
  for (int g : order) {
    double tot = 0.0;
    for (int tau = 1; tau <= spec.max_delay; ++tau) {
      double mc = 0.0;
      for (int r = 0; r < reals; ++r)
        mc += profiles[static_cast<std::size_t>(g) * reals + r].clipped[tau - 1];
      mc /= reals;
      result.per_delay.push_back({spec.alpha_fb_list[g], tau, mc});
      tot += mc;
    }
    result.totals.push_back({spec.alpha_fb_list[g], tot});
  }
  return result;
}

ForecastResult run_forecast(const ExperimentSpec& spec) {
  validate(spec);
  const int gains = static_cast<int>(spec.alpha_fb_list.size());
  const int reals = spec.realizations;
  const int total = spec.reservoir.total_steps();
  const EvalWindows& windows = spec.reservoir.windows;
  const bool is_narma = spec.task == ForecastTask::Narma;
  const std::vector<int>& sweep = is_narma ? spec.narma_orders : spec.horizons;
  const int sweep_len = static_cast<int>(sweep.size());

  // MG and Ising inputs are deterministic; generate the normalized series
  // once at the largest horizon so all horizons share one reservoir run.
  std::vector<double> shared_series;
  if (!is_narma) {
    const int max_h = *std::max_element(sweep.begin(), sweep.end());
    if (spec.task == ForecastTask::MackeyGlass)
      shared_series = minmax_normalize(mg_raw_series(MgParams{}, total + max_h));
    else
      shared_series = ising_series(IsingParams{}, total + max_h);
  }

  // NARMA drives and targets per realization; diverged instances excluded.
  std::vector<std::vector<double>> narma_drive(reals);
  std::vector<std::vector<std::vector<double>>> narma_target(reals);
  int failed = 0;
  if (is_narma) {
    for (int r = 0; r < reals; ++r) {
      RandomEngine drive_rng(seeds_for(spec.master_seed, r).drive);
      NarmaParams base;
      narma_drive[r] = iid_drive(total, base.input_lo, base.input_hi, drive_rng);
      narma_target[r].resize(sweep_len);
      for (int s = 0; s < sweep_len; ++s) {
        NarmaParams params;
        params.order = sweep[s];
        try {
          narma_target[r][s] = narma(params, narma_drive[r]);
        } catch (const NarmaDivergence&) {
          ++failed;  // left empty; skipped below
        }
      }
    }
  }

  // nmse[(g * sweep_len + s) * reals + r]
  std::vector<double> nmse_table(static_cast<std::size_t>(gains) * sweep_len * reals, kNan);
  parallel_for_index(static_cast<std::size_t>(gains) * reals, spec.threads, [&](std::size_t job) {
    const int g = static_cast<int>(job) / reals;
    const int r = static_cast<int>(job) % reals;
    ReservoirConfig config = config_for(spec, r);
    config.alpha_fb = spec.alpha_fb_list[g];

    const std::vector<double>& inputs = is_narma ? narma_drive[r] : shared_series;
    const RunTrace trace = run_reservoir(
        config, std::span<const double>(inputs.data(), static_cast<std::size_t>(total)));

    const int train_begin = windows.washout;
    const int test_begin = windows.washout + windows.train_len;
    const Eigen::MatrixXd x_train = trace.features.middleRows(train_begin, windows.train_len);
    const Eigen::MatrixXd x_test = trace.features.middleRows(test_begin, windows.test_len);
    const Standardization stats = standardize_fit(x_train);
    const RidgeWorkspace workspace(standardize_apply(x_train, stats), 1e-11);
    const Eigen::MatrixXd x_test_std = standardize_apply(x_test, stats);

    Eigen::VectorXd y_train(windows.train_len), y_test(windows.test_len);
    for (int s = 0; s < sweep_len; ++s) {
      const std::vector<double>* target;
      if (is_narma) {
        if (narma_target[r][s].empty()) continue;
        target = &narma_target[r][s];
        for (int k = 0; k < windows.train_len; ++k) y_train[k] = (*target)[train_begin + k];
        for (int k = 0; k < windows.test_len; ++k) y_test[k] = (*target)[test_begin + k];
      } else {
        const int h = sweep[s];
        for (int k = 0; k < windows.train_len; ++k) y_train[k] = shared_series[train_begin + k + h];
        for (int k = 0; k < windows.test_len; ++k) y_test[k] = shared_series[test_begin + k + h];
      }
      const auto [weights, bias] = workspace.solve(y_train);
      const Eigen::VectorXd pred = (x_test_std * weights).array() + bias;
      nmse_table[(static_cast<std::size_t>(g) * sweep_len + s) * reals + r] = nmse(pred, y_test);
    }
  });

  std::vector<int> order(gains);
  for (int g = 0; g < gains; ++g) order[g] = g;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return spec.alpha_fb_list[a] < spec.alpha_fb_list[b]; });

  ForecastResult result;
  result.failed_instances = failed;
  for (int g : order)
    for (int s = 0; s < sweep_len; ++s) {
      std::vector<double> xs(reals);
      for (int r = 0; r < reals; ++r)
        xs[r] = nmse_table[(static_cast<std::size_t>(g) * sweep_len + s) * reals + r];
      result.rows.push_back(
          {to_string(spec.task), spec.alpha_fb_list[g], sweep[s], mean_ignoring_nan(xs)});
    }
  return result;
}

ShotNoiseResult run_shot_noise(const ExperimentSpec& spec) {
  validate(spec);
  const int ains = static_cast<int>(spec.alpha_in_list.size());
  const int gains = static_cast<int>(spec.alpha_fb_list.size());
  const int budgets = static_cast<int>(spec.shot_list.size());
  const int reals = spec.realizations;
  const int total = spec.reservoir.total_steps();

  std::vector<double> exact(static_cast<std::size_t>(ains) * gains * reals);
  std::vector<double> finite(static_cast<std::size_t>(ains) * gains * budgets * reals);
  parallel_for_index(static_cast<std::size_t>(ains) * gains * reals, spec.threads,
                     [&](std::size_t job) {
    const int r = static_cast<int>(job % reals);
    const int g = static_cast<int>((job / reals) % gains);
    const int a = static_cast<int>(job / (static_cast<std::size_t>(reals) * gains));
    ReservoirConfig config = config_for(spec, r);
    config.alpha_in = spec.alpha_in_list[a];
    config.alpha_fb = spec.alpha_fb_list[g];
    RandomEngine drive_rng(config.seeds.drive);
    const std::vector<double> drive = iid_drive(total, 0.0, 1.0, drive_rng);

    config.shots = 0;
    exact[job] =
        memory_capacity(run_reservoir(config, drive), config.windows, spec.max_delay).total;
    for (int b = 0; b < budgets; ++b) {
      config.shots = spec.shot_list[b];
      finite[(job * budgets) + b] =
          memory_capacity(run_reservoir(config, drive), config.windows, spec.max_delay).total;
    }
  });

  auto sorted_indices = [](const auto& values) {
    std::vector<int> order(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return values[x] < values[y]; });
    return order;
  };

  ShotNoiseResult result;
  for (int a : sorted_indices(spec.alpha_in_list))
    for (int g : sorted_indices(spec.alpha_fb_list)) {
      double exact_mean = 0.0;
      for (int r = 0; r < reals; ++r)
        exact_mean += exact[(static_cast<std::size_t>(a) * gains + g) * reals + r];
      exact_mean /= reals;
      for (int b : sorted_indices(spec.shot_list)) {
        double mc = 0.0;
        for (int r = 0; r < reals; ++r)
          mc += finite[((static_cast<std::size_t>(a) * gains + g) * reals + r) * budgets + b];
        mc /= reals;
        result.rows.push_back(
            {spec.alpha_in_list[a], spec.alpha_fb_list[g], spec.shot_list[b], mc, exact_mean});
      }
    }
  return result;
}

std::vector<std::string> write_results(const ExperimentSpec& spec,
                                       const MemoryCapacityResult& result) {
  std::ostringstream tau_csv;
  tau_csv << "alpha_fb,tau,mc_mean\n";
  for (const auto& row : result.per_delay)
    tau_csv << format_double(row.alpha_fb) << "," << row.tau << "," << format_double(row.mc_mean)
            << "\n";
  std::ostringstream tot_csv;
  tot_csv << "alpha_fb,mc_tot_mean\n";
  for (const auto& row : result.totals)
    tot_csv << format_double(row.alpha_fb) << "," << format_double(row.mc_tot_mean) << "\n";

  const std::string tau_path = csv_path(spec, "mc_tau.csv");
  const std::string tot_path = csv_path(spec, "mc_tot.csv");
  const std::string meta_path = csv_path(spec, "mc.meta.json");
  write_file(tau_path, tau_csv.str());
  write_file(tot_path, tot_csv.str());
  write_file(meta_path, metadata_json(spec).dump(2) + "\n");
  return {tau_path, tot_path, meta_path};
}

std::vector<std::string> write_results(const ExperimentSpec& spec, const ForecastResult& result) {
  std::ostringstream csv;
  csv << "task,alpha_fb,horizon_or_order,nmse_mean\n";
  for (const auto& row : result.rows)
    csv << row.task << "," << format_double(row.alpha_fb) << "," << row.horizon_or_order << ","
        << format_double(row.nmse_mean) << "\n";
  const std::string path = csv_path(spec, "forecast.csv");
  const std::string meta_path = csv_path(spec, "forecast.meta.json");
  write_file(path, csv.str());
  json meta = metadata_json(spec);
  meta["warnings"] = {{"narma_failed_instances", result.failed_instances}};
  write_file(meta_path, meta.dump(2) + "\n");
  return {path, meta_path};
}

std::vector<std::string> write_results(const ExperimentSpec& spec, const ShotNoiseResult& result) {
  std::ostringstream csv;
  csv << "alpha_in,alpha_fb,n_m,mc_tot_mean,mc_tot_exact_mean\n";
  for (const auto& row : result.rows)
    csv << format_double(row.alpha_in) << "," << format_double(row.alpha_fb) << "," << row.n_m
        << "," << format_double(row.mc_tot_mean) << "," << format_double(row.mc_tot_exact_mean)
        << "\n";
  const std::string path = csv_path(spec, "shot_noise.csv");
  const std::string meta_path = csv_path(spec, "shot_noise.meta.json");
  write_file(path, csv.str());
  write_file(meta_path, metadata_json(spec).dump(2) + "\n");
  return {path, meta_path};
}

namespace {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path) {
  const std::string text = read_file(path);
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream fl(line);
    std::string field;
    while (std::getline(fl, field, ',')) fields.push_back(field);
    if (first) {
      table.header = fields;
      first = false;
    } else {
      table.rows.push_back(fields);
    }
  }
  return table;
}

std::vector<std::string> unique_values(const CsvTable& table, std::size_t column) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& row : table.rows)
    if (seen.insert(row[column]).second) out.push_back(row[column]);
  return out;
}

std::string join_header(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i)
    out += (i ? "," : "") + table.header[i];
  return out;
}

}  // namespace

std::vector<std::string> emit_plot_scripts(const std::vector<std::string>& csv_paths,
                                           const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> written;
  for (const std::string& path : csv_paths) {
    const CsvTable table = read_csv(path);
    if (table.rows.empty())
      throw std::runtime_error("emit_plot_scripts: no data rows in " + path);
    const std::string header = join_header(table);
    const std::string stem = std::filesystem::path(path).stem().string();
    const std::string script_path =
        (std::filesystem::path(out_dir) / (stem + ".gp")).string();

    std::ostringstream gp;
    gp << "# gnuplot script generated from " << path << "\n";
    gp << "set datafile separator ','\n";
    gp << "set key outside\n";
    if (header == "alpha_fb,tau,mc_mean") {
      gp << "set xlabel 'delay'\nset ylabel 'MC'\nset yrange [-0.05:1.05]\n";
      gp << "plot \\\n";
      const auto gains = unique_values(table, 0);
      for (std::size_t i = 0; i < gains.size(); ++i)
        gp << "  '" << path << "' every ::1 using 2:(abs($1-" << gains[i]
           << ")<1e-12 ? $3 : 1/0) with linespoints title 'a_{fb}=" << gains[i] << "'"
           << (i + 1 < gains.size() ? ", \\\n" : "\n");
    } else if (header == "alpha_fb,mc_tot_mean") {
      gp << "set xlabel 'alpha_{fb}'\nset ylabel 'MC^{tot}'\n";
      gp << "plot '" << path << "' every ::1 using 1:2 with linespoints title 'MC^{tot}'\n";
    } else if (header == "task,alpha_fb,horizon_or_order,nmse_mean") {
      gp << "set xlabel 'horizon / order'\nset ylabel 'NMSE'\nset logscale y\n";
      gp << "plot \\\n";
      const auto gains = unique_values(table, 1);
      for (std::size_t i = 0; i < gains.size(); ++i)
        gp << "  '" << path << "' every ::1 using 3:(abs($2-" << gains[i]
           << ")<1e-12 ? $4 : 1/0) with linespoints title 'a_{fb}=" << gains[i] << "'"
           << (i + 1 < gains.size() ? ", \\\n" : "\n");
    } else if (header == "alpha_in,alpha_fb,n_m,mc_tot_mean,mc_tot_exact_mean") {
      gp << "set xlabel 'N_m'\nset ylabel 'MC^{tot}'\nset logscale x\n";
      gp << "plot \\\n";
      const auto gains = unique_values(table, 1);
      for (std::size_t i = 0; i < gains.size(); ++i) {
        gp << "  '" << path << "' every ::1 using 3:(abs($2-" << gains[i]
           << ")<1e-12 ? $4 : 1/0) with linespoints title 'a_{fb}=" << gains[i] << "', \\\n";
        gp << "  '" << path << "' every ::1 using 3:(abs($2-" << gains[i]
           << ")<1e-12 ? $5 : 1/0) with lines dashtype 2 title 'a_{fb}=" << gains[i]
           << " exact'" << (i + 1 < gains.size() ? ", \\\n" : "\n");
      }
    } else {
      throw std::runtime_error("emit_plot_scripts: unrecognized CSV schema in " + path);
    }
    write_file(script_path, gp.str());
    written.push_back(script_path);
  }
  return written;
}

}  // namespace loqr
