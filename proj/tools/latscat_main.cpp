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

// latscat command-line front end: scan, resonances, evolve, compare.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "latscat/error.hpp"
#include "latscat/harness.hpp"

namespace {

using latscat::RunConfig;
using latscat::RunMode;

struct Flags {
  std::string preset;
  std::string config_path;
  std::optional<int> n_impurities, spacing, start_site, sites, k_points;
  std::optional<double> strength, t0, k0, x0, alpha, compare_time, k_min, k_max;
  std::vector<double> times;
  std::optional<std::string> out, format, figure_id;
  bool empty = false;
  bool auto_geometry = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--preset", f.preset, "Built-in parameter set (fig1, fig2, fig4, fig5, fig6a, fig6b, fig8)");
  cmd->add_option("--config", f.config_path, "JSON run config; flags override its values");
  cmd->add_option("--n-impurities", f.n_impurities, "Impurities in the barrier (N)");
  cmd->add_option("--spacing", f.spacing, "Sites between impurities (m)");
  cmd->add_option("--strength", f.strength, "Impurity potential V in units of t0");
  cmd->add_option("--start-site", f.start_site, "1-based site of the first impurity");
  cmd->add_option("--sites", f.sites, "Lattice size L");
  cmd->add_option("--t0", f.t0, "Hopping amplitude");
  cmd->add_option("--k0", f.k0, "Packet wave vector, units of pi/a");
  cmd->add_option("--x0", f.x0, "Packet centroid (site units)");
  cmd->add_option("--alpha", f.alpha, "Packet width");
  cmd->add_option("--times", f.times, "Snapshot times, comma separated")->delimiter(',');
  cmd->add_option("--compare-time", f.compare_time, "Time of the numeric/analytic comparison");
  cmd->add_option("--k-min", f.k_min, "Scan start, units of pi/a");
  cmd->add_option("--k-max", f.k_max, "Scan end, units of pi/a");
  cmd->add_option("--k-points", f.k_points, "Scan points");
  cmd->add_option("--figure-id", f.figure_id, "Output file stem");
  cmd->add_option("--out", f.out, "Output directory");
  cmd->add_option("--format", f.format, "csv, json or both")->check(CLI::IsMember({"csv", "json", "both"}));
  cmd->add_flag("--empty", f.empty, "Evolve on the empty lattice (no barrier)");
  cmd->add_flag("--auto-geometry", f.auto_geometry,
                "Lay out lattice, barrier start, x0 and compare time from alpha and the barrier");
}

void apply_flags(RunConfig& c, const Flags& f) {
  const bool touches_barrier = f.n_impurities || f.spacing || f.strength || f.start_site;
  if (touches_barrier || (!c.lattice.barrier && c.mode != RunMode::Evolve)) {
    latscat::BarrierSpec b = c.lattice.barrier.value_or(latscat::BarrierSpec{2, 1, 1.0, 1500});
    if (f.n_impurities) b.n_impurities = *f.n_impurities;
    if (f.spacing) b.spacing = *f.spacing;
    if (f.strength) b.strength = *f.strength;
    if (f.start_site) b.start_site = *f.start_site;
    c.lattice.barrier = b;
  }
  if (f.empty) c.lattice.barrier.reset();
  if (f.sites) c.lattice.n_sites = *f.sites;
  if (f.t0) c.lattice.t0 = *f.t0;
  if (c.mode == RunMode::Evolve || c.mode == RunMode::Compare || f.k0 || f.x0 || f.alpha) {
    latscat::PacketConfig p = c.packet.value_or(latscat::PacketConfig{});
    if (f.k0) p.k0_over_pi = *f.k0;
    if (f.x0) p.x0 = *f.x0;
    if (f.alpha) p.alpha = *f.alpha;
    c.packet = p;
  }
  if (!f.times.empty()) c.times = f.times;
  if (f.compare_time) c.compare_time = *f.compare_time;
  if (f.k_min) c.k_grid.min = *f.k_min;
  if (f.k_max) c.k_grid.max = *f.k_max;
  if (f.k_points) c.k_grid.points = *f.k_points;
  if (f.figure_id) c.figure_id = *f.figure_id;
  if (f.out) c.output_dir = *f.out;
  if (f.format) c.format = latscat::parse_output_format(*f.format);

  if (f.auto_geometry) {
    if (!c.packet || !c.lattice.barrier) {
      throw latscat::Error(latscat::ErrorKind::InvalidConfig,
                           "--auto-geometry needs a packet and a barrier");
    }
    const auto g = latscat::plan_geometry(c.packet->alpha, c.packet->spec().k0,
                                          *c.lattice.barrier, c.lattice.dispersion());
    c.lattice.n_sites = g.n_sites;
    c.lattice.barrier->start_site = g.start_site;
    c.packet->x0 = g.x0;
    c.compare_time = g.t_after;
    if (f.times.empty()) c.times = {0.0, g.t_after / 2.0, g.t_after};
  }
}

std::vector<RunConfig> build_configs(RunMode mode, const Flags& f) {
  std::vector<RunConfig> configs;
  if (!f.preset.empty()) {
    configs = latscat::expand_preset(f.preset, mode);
  } else {
    RunConfig c;
    c.mode = mode;
    c.figure_id = latscat::to_string(mode);
    configs.push_back(c);
  }
  if (!f.config_path.empty()) {
    std::ifstream is(f.config_path);
    if (!is) throw latscat::Error(latscat::ErrorKind::Io, "cannot read " + f.config_path);
    nlohmann::json j;
    try {
      is >> j;
    } catch (const nlohmann::json::exception& e) {
      throw latscat::Error(latscat::ErrorKind::InvalidConfig,
                           f.config_path + ": " + e.what());
    }
    for (auto& c : configs) {
      c = latscat::run_config_from_json(j, c);
      c.mode = mode;
    }
  }
  for (auto& c : configs) apply_flags(c, f);
  return configs;
}

void report_error(std::string_view kind, const std::string& message) {
  nlohmann::json record{{"error", kind}, {"message", message}};
  std::cerr << record.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wave-packet scattering on a 1D tight-binding lattice"};
  app.require_subcommand(1);
  app.set_version_flag("--version", latscat::kVersion);

  Flags flags;
  std::vector<std::pair<CLI::App*, RunMode>> commands;
  for (RunMode mode : {RunMode::Scan, RunMode::Resonances, RunMode::Evolve, RunMode::Compare}) {
    const char* help = "";
    switch (mode) {
      case RunMode::Scan: help = "Transmission and reflection over a k grid"; break;
      case RunMode::Resonances: help = "Resonant wave vectors of a barrier"; break;
      case RunMode::Evolve: help = "Evolve a Gaussian packet and record densities"; break;
      case RunMode::Compare: help = "Numeric vs split-Gaussian reflected profile"; break;
    }
    CLI::App* cmd = app.add_subcommand(latscat::to_string(mode), help);
    add_common(cmd, flags);
    commands.emplace_back(cmd, mode);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error(latscat::to_string(latscat::ErrorKind::InvalidConfig), e.what());
    return 2;
  }

  RunMode mode = RunMode::Scan;
  for (auto& [cmd, m] : commands) {
    if (cmd->parsed()) mode = m;
  }

  try {
    latscat::EigenCache cache;
    for (const RunConfig& config : build_configs(mode, flags)) {
      for (const auto& table : latscat::run(config, &cache)) {
        for (const auto& path : latscat::write_table(table, config.output_dir, config.format)) {
          std::cout << path.string() << '\n';
        }
      }
    }
  } catch (const latscat::Error& e) {
    report_error(latscat::to_string(e.kind()), e.what());
    return 2;
  } catch (const std::exception& e) {
    report_error("Internal", e.what());
    return 1;
  }
  return 0;
}
