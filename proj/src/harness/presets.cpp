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

#include "latscat/error.hpp"
#include "latscat/harness.hpp"

namespace latscat {

namespace {

BarrierSpec barrier(int n, int m, int start = 1500) { return {n, m, 1.0, start}; }

std::string barrier_tag(int n, int m) {
  return "N" + std::to_string(n) + "-m" + std::to_string(m);
}

std::vector<RunConfig> fig1(RunMode mode) {
  if (mode != RunMode::Scan && mode != RunMode::Resonances) {
    throw Error(ErrorKind::InvalidConfig, "preset fig1 supports scan and resonances");
  }
  std::vector<RunConfig> out;
  for (int n : {2, 3, 6}) {
    for (int m : {1, 9}) {
      RunConfig c;
      c.mode = mode;
      c.preset = "fig1";
      c.figure_id = "fig1-" + barrier_tag(n, m);
      if (mode == RunMode::Resonances) c.figure_id += "-resonances";
      c.lattice.barrier = barrier(n, m);
      c.k_grid = {0.001, 0.999, 999};
      out.push_back(c);
    }
  }
  return out;
}

RunConfig fig2_base(double k0_over_pi) {
  RunConfig c;
  c.mode = RunMode::Evolve;
  c.lattice.n_sites = 3000;
  c.lattice.barrier = barrier(2, 1);
  c.packet = PacketConfig{600.0, k0_over_pi, 50.0};
  c.times = {0.0, 250.0, 500.0, 750.0, 1000.0};
  return c;
}

std::vector<RunConfig> fig2() {
  RunConfig a = fig2_base(0.5);
  a.preset = "fig2";
  a.figure_id = "fig2a";
  RunConfig b = fig2_base(2.0 / 3.0);
  b.preset = "fig2";
  b.figure_id = "fig2b";
  return {a, b};
}

std::vector<RunConfig> fig4() {
  RunConfig c = fig2_base(2.0 / 3.0);
  c.preset = "fig4";
  c.figure_id = "fig4";
  c.times = {750.0, 1000.0};
  c.window_first = 1;
  c.window_last = 1499;
  return {c};
}

std::vector<RunConfig> fig5() {
  RunConfig c;
  c.mode = RunMode::Scan;
  c.preset = "fig5";
  c.figure_id = "fig5";
  c.lattice.barrier = barrier(2, 1);
  c.k_grid = {2.0 / 3.0 - 0.15, 2.0 / 3.0 + 0.15, 301};
  c.expansion_k0_over_pi = 2.0 / 3.0;
  return {c};
}

std::vector<RunConfig> compare_set(const std::string& name, double alpha) {
  std::vector<RunConfig> out;
  const std::pair<int, int> configs[] = {{3, 1}, {3, 9}, {6, 1}, {6, 9}};
  for (auto [n, m] : configs) {
    const BarrierSpec shape = barrier(n, m);
    const ScatteringGeometry g = plan_geometry(alpha, std::numbers::pi / 2.0, shape);
    RunConfig c;
    c.mode = RunMode::Compare;
    c.preset = name;
    c.figure_id = name + "-" + barrier_tag(n, m);
    c.lattice.n_sites = g.n_sites;
    c.lattice.barrier = barrier(n, m, g.start_site);
    c.packet = PacketConfig{g.x0, 0.5, alpha};
    c.compare_time = g.t_after;
    out.push_back(c);
  }
  return out;
}

RunMode default_mode(const std::string& name) {
  if (name == "fig1" || name == "fig5") return RunMode::Scan;
  if (name == "fig2" || name == "fig4") return RunMode::Evolve;
  return RunMode::Compare;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"fig1",  "fig2",  "fig4", "fig5",
                                              "fig6a", "fig6b", "fig8"};
  return names;
}

std::vector<RunConfig> expand_preset(const std::string& name, std::optional<RunMode> mode) {
  bool known = false;
  for (const auto& n : preset_names()) known = known || n == name;
  if (!known) throw Error(ErrorKind::InvalidConfig, "unknown preset '" + name + "'");

  const RunMode wanted = mode.value_or(default_mode(name));
  if (name == "fig1") return fig1(wanted);
  if (wanted != default_mode(name)) {
    throw Error(ErrorKind::InvalidConfig,
                "preset " + name + " runs in mode " + to_string(default_mode(name)));
  }
  if (name == "fig2") return fig2();
  if (name == "fig4") return fig4();
  if (name == "fig5") return fig5();
  if (name == "fig6a") return compare_set(name, 50.0);
  if (name == "fig6b") return compare_set(name, 200.0);
  return compare_set(name, 5.0);
}

}  // namespace latscat
