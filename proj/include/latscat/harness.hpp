/* Copyright 2026 The latscat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "latscat/evolve.hpp"
#include "latscat/planewave.hpp"

namespace latscat {

inline constexpr const char* kVersion = "latscat 1.0.0";

enum class RunMode { Scan, Resonances, Evolve, Compare };
enum class OutputFormat { Csv, Json, Both };

std::string to_string(RunMode mode);
std::string to_string(OutputFormat format);
RunMode parse_run_mode(const std::string& text);
OutputFormat parse_output_format(const std::string& text);

/// Wave-vector grid in units of pi / a, endpoints included.
struct KGrid {
  double min = 0.001;
  double max = 0.999;
  int points = 999;

  std::vector<double> ka_over_pi() const;
};

/// Packet parameters as the user states them: k0 in units of pi / a.
struct PacketConfig {
  double x0 = 600.0;
  double k0_over_pi = 0.5;
  double alpha = 50.0;

  GaussianPacketSpec spec() const;
};

/// Everything a run needs. Validated before execution and echoed verbatim
/// into every output.
struct RunConfig {
  RunMode mode = RunMode::Scan;
  std::string figure_id = "run";
  std::string preset;
  LatticeConfig lattice;
  std::optional<PacketConfig> packet;
  KGrid k_grid;
  std::vector<double> times{0.0, 250.0, 500.0, 750.0, 1000.0};
  /// compare: time at which reflected profiles are compared.
  double compare_time = 1000.0;
  /// scan: when set, add first/second-order reflection columns about this
  /// resonance (units of pi / a).
  std::optional<double> expansion_k0_over_pi;
  /// evolve: only sites in [window_first, window_last] go into the table;
  /// window_last = 0 means the last site.
  int window_first = 1;
  int window_last = 0;
  std::filesystem::path output_dir = ".";
  OutputFormat format = OutputFormat::Csv;

  /// Throws Error(InvalidConfig) (or the lattice's own errors).
  void validate() const;
};

nlohmann::json to_json(const RunConfig& config);
/// Missing keys keep the defaults of RunConfig.
RunConfig run_config_from_json(const nlohmann::json& j, RunConfig base = {});

/// Named real columns of equal length plus metadata.
struct FigureTable {
  std::string figure_id;
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  nlohmann::json metadata = nlohmann::json::object();

  void add_column(std::string name, std::vector<double> values);
  const std::vector<double>& column(const std::string& name) const;
  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
  /// Throws InvalidConfig on ragged columns or non-finite values.
  void validate() const;
};

/// Two '#' provenance lines (version and the run config), a header row, then
/// one row per entry with values printed as %.12e.
std::string to_csv(const FigureTable& table);
nlohmann::json to_json(const FigureTable& table);

/// Writes <figure_id>.csv and/or <figure_id>.json; returns the paths written.
std::vector<std::filesystem::path> write_table(const FigureTable& table,
                                               const std::filesystem::path& dir,
                                               OutputFormat format);

/// Eigen systems keyed by lattice (size, t0, barrier), holding at most
/// `capacity` of them; the least recently used is dropped first. A 6000-site
/// system is ~300 MB. Thread-safe.
class EigenCache {
 public:
  explicit EigenCache(std::size_t capacity = 2) : capacity_(capacity) {}

  std::shared_ptr<const EigenSystem> get(const LatticeConfig& lattice);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::size_t capacity_;
  std::list<std::pair<std::string, std::shared_ptr<const EigenSystem>>> entries_;
};

/// Lattice layout for one scattering run.
struct ScatteringGeometry {
  int n_sites = 3000;
  int start_site = 1500;
  double x0 = 600.0;
  /// Time by which the packet has fully left the barrier.
  double t_after = 1000.0;
};

/// The 3000-site layout (x0 = 600, barrier at 1500, t = 1000) when it keeps
/// 8 alpha between every packet and the periodic seam and 6 alpha between
/// packets and the barrier; otherwise a layout scaled to alpha that does.
ScatteringGeometry plan_geometry(double alpha, double k0, const BarrierSpec& barrier,
                                 const DispersionParams& params = {});

FigureTable run_scan(const RunConfig& config);
FigureTable run_resonances(const RunConfig& config);

struct EvolveResult {
  std::vector<Snapshot> snapshots;
  FigureTable table;
};

EvolveResult run_evolve(const RunConfig& config, EigenCache* cache = nullptr);

/// Numeric vs split-Gaussian reflected density over sites left of the
/// barrier at config.compare_time. Scalar results live in table.metadata:
/// "l2_error", "rho_prime_abs2", "reflection_shift", "normalization_ratio",
/// "p_left", "predicted_reflection".
FigureTable run_compare(const RunConfig& config, EigenCache* cache = nullptr);

std::vector<FigureTable> run(const RunConfig& config, EigenCache* cache = nullptr);

const std::vector<std::string>& preset_names();
/// Expands a preset into its runs. `mode` selects between modes a preset
/// supports (fig1 covers scan and resonances); nullopt takes its default.
std::vector<RunConfig> expand_preset(const std::string& name,
                                     std::optional<RunMode> mode = std::nullopt);

}  // namespace latscat
