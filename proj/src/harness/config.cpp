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

#include <cmath>
#include <sstream>

#include "latscat/error.hpp"
#include "latscat/harness.hpp"

namespace latscat {

using nlohmann::json;

std::string to_string(RunMode mode) {
  switch (mode) {
    case RunMode::Scan: return "scan";
    case RunMode::Resonances: return "resonances";
    case RunMode::Evolve: return "evolve";
    case RunMode::Compare: return "compare";
  }
  return "scan";
}

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
    case OutputFormat::Both: return "both";
  }
  return "csv";
}

RunMode parse_run_mode(const std::string& text) {
  if (text == "scan") return RunMode::Scan;
  if (text == "resonances") return RunMode::Resonances;
  if (text == "evolve") return RunMode::Evolve;
  if (text == "compare") return RunMode::Compare;
  throw Error(ErrorKind::InvalidConfig, "unknown mode '" + text + "'");
}

OutputFormat parse_output_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  if (text == "both") return OutputFormat::Both;
  throw Error(ErrorKind::InvalidConfig, "unknown format '" + text + "'");
}

std::vector<double> KGrid::ka_over_pi() const {
  std::vector<double> out(static_cast<std::size_t>(points));
  if (points == 1) {
    out[0] = min;
    return out;
  }
  const double step = (max - min) / (points - 1);
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = min + step * i;
  out.back() = max;
  return out;
}

GaussianPacketSpec PacketConfig::spec() const {
  return {x0, k0_over_pi * std::numbers::pi, alpha};
}

void RunConfig::validate() const {
  if (figure_id.empty() || figure_id.find_first_of("/\\") != std::string::npos) {
    throw Error(ErrorKind::InvalidConfig, "figure_id must be a non-empty file stem");
  }
  lattice.validate();
  switch (mode) {
    case RunMode::Scan: {
      if (k_grid.points < 1) throw Error(ErrorKind::InvalidConfig, "k grid needs points >= 1");
      if (!(k_grid.min > 0.0 && k_grid.max < 1.0 && k_grid.min <= k_grid.max)) {
        throw Error(ErrorKind::InvalidConfig,
                    "k grid must satisfy 0 < min <= max < 1 (units of pi/a)");
      }
      if (!lattice.barrier) throw Error(ErrorKind::InvalidConfig, "scan needs a barrier");
      if (expansion_k0_over_pi) {
        const double k0 = *expansion_k0_over_pi * std::numbers::pi;
        for (double x : {k_grid.min, k_grid.max}) {
          if (std::abs(x * std::numbers::pi - k0) >= 0.5) {
            throw Error(ErrorKind::InvalidConfig,
                        "expansion columns need |k - k0| a < 0.5 over the whole grid");
          }
        }
      }
      break;
    }
    case RunMode::Resonances:
      if (!lattice.barrier) throw Error(ErrorKind::InvalidConfig, "resonances needs a barrier");
      break;
    case RunMode::Evolve:
    case RunMode::Compare: {
      if (!packet) throw Error(ErrorKind::InvalidConfig, "mode needs a packet");
      packet->spec().validate();
      if (!(packet->k0_over_pi > 0.0 && packet->k0_over_pi < 1.0)) {
        throw Error(ErrorKind::InvalidConfig, "packet k0 must lie in (0, 1) pi/a");
      }
      if (mode == RunMode::Evolve) {
        if (times.empty()) throw Error(ErrorKind::InvalidConfig, "evolve needs at least one time");
        for (double t : times) {
          if (!std::isfinite(t)) throw Error(ErrorKind::InvalidConfig, "times must be finite");
        }
        const int last = window_last == 0 ? lattice.n_sites : window_last;
        if (window_first < 1 || last > lattice.n_sites || window_first > last) {
          throw Error(ErrorKind::InvalidConfig, "site window outside the lattice");
        }
      } else {
        if (!lattice.barrier) throw Error(ErrorKind::InvalidConfig, "compare needs a barrier");
        if (!(compare_time > 0.0) || !std::isfinite(compare_time)) {
          throw Error(ErrorKind::InvalidConfig, "compare_time must be positive");
        }
      }
      break;
    }
  }
}

json to_json(const RunConfig& c) {
  json j;
  j["mode"] = to_string(c.mode);
  j["figure_id"] = c.figure_id;
  if (!c.preset.empty()) j["preset"] = c.preset;
  json lat;
  lat["n_sites"] = c.lattice.n_sites;
  lat["t0"] = c.lattice.t0;
  if (c.lattice.barrier) {
    const auto& b = *c.lattice.barrier;
    lat["barrier"] = {{"n_impurities", b.n_impurities},
                      {"spacing", b.spacing},
                      {"strength", b.strength},
                      {"start_site", b.start_site}};
  }
  j["lattice"] = lat;
  if (c.packet) {
    j["packet"] = {{"x0", c.packet->x0},
                   {"k0_over_pi", c.packet->k0_over_pi},
                   {"alpha", c.packet->alpha}};
  }
  j["k_grid"] = {{"min", c.k_grid.min}, {"max", c.k_grid.max}, {"points", c.k_grid.points}};
  j["times"] = c.times;
  j["compare_time"] = c.compare_time;
  if (c.expansion_k0_over_pi) j["expansion_k0_over_pi"] = *c.expansion_k0_over_pi;
  j["window"] = {c.window_first, c.window_last};
  j["output_dir"] = c.output_dir.generic_string();
  j["format"] = to_string(c.format);
  return j;
}

namespace {

template <typename T>
void read_if(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

RunConfig run_config_from_json(const json& j, RunConfig c) {
  try {
    if (j.contains("mode")) c.mode = parse_run_mode(j.at("mode").get<std::string>());
    read_if(j, "figure_id", c.figure_id);
    read_if(j, "preset", c.preset);
    if (j.contains("lattice")) {
      const auto& lat = j.at("lattice");
      read_if(lat, "n_sites", c.lattice.n_sites);
      read_if(lat, "t0", c.lattice.t0);
      if (lat.contains("barrier")) {
        const auto& bj = lat.at("barrier");
        if (bj.is_null()) {
          c.lattice.barrier.reset();
        } else {
          BarrierSpec b = c.lattice.barrier.value_or(BarrierSpec{});
          read_if(bj, "n_impurities", b.n_impurities);
          read_if(bj, "spacing", b.spacing);
          read_if(bj, "strength", b.strength);
          read_if(bj, "start_site", b.start_site);
          c.lattice.barrier = b;
        }
      }
    }
    if (j.contains("packet")) {
      const auto& pj = j.at("packet");
      if (pj.is_null()) {
        c.packet.reset();
      } else {
        PacketConfig p = c.packet.value_or(PacketConfig{});
        read_if(pj, "x0", p.x0);
        read_if(pj, "k0_over_pi", p.k0_over_pi);
        read_if(pj, "alpha", p.alpha);
        c.packet = p;
      }
    }
    if (j.contains("k_grid")) {
      const auto& kj = j.at("k_grid");
      read_if(kj, "min", c.k_grid.min);
      read_if(kj, "max", c.k_grid.max);
      read_if(kj, "points", c.k_grid.points);
    }
    read_if(j, "times", c.times);
    read_if(j, "compare_time", c.compare_time);
    if (j.contains("expansion_k0_over_pi")) {
      const auto& e = j.at("expansion_k0_over_pi");
      if (e.is_null()) c.expansion_k0_over_pi.reset();
      else c.expansion_k0_over_pi = e.get<double>();
    }
    if (j.contains("window")) {
      const auto w = j.at("window").get<std::vector<int>>();
      if (w.size() != 2) throw Error(ErrorKind::InvalidConfig, "window must be [first, last]");
      c.window_first = w[0];
      c.window_last = w[1];
    }
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("format")) c.format = parse_output_format(j.at("format").get<std::string>());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, std::string("bad config: ") + e.what());
  }
  return c;
}

std::shared_ptr<const EigenSystem> EigenCache::get(const LatticeConfig& lattice) {
  std::ostringstream key;
  key.precision(17);
  key << lattice.n_sites << '|' << lattice.t0;
  if (lattice.barrier) {
    const auto& b = *lattice.barrier;
    key << '|' << b.n_impurities << '|' << b.spacing << '|' << b.strength << '|'
        << b.start_site;
  }
  std::lock_guard lock(mutex_);
  for (auto it = entries_.begin(); it != entries_.end(); ++it) {
    if (it->first == key.str()) {
      entries_.splice(entries_.begin(), entries_, it);
      return entries_.front().second;
    }
  }
  auto eig = std::make_shared<const EigenSystem>(diagonalize(build_hamiltonian(lattice)));
  if (capacity_ == 0) return eig;
  while (entries_.size() >= capacity_) entries_.pop_back();
  entries_.emplace_front(key.str(), eig);
  return eig;
}

std::size_t EigenCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

namespace {

constexpr double kSeamMargin = 7.0;     // in units of alpha
constexpr double kBarrierMargin = 6.0;  // in units of alpha

bool geometry_is_clean(const ScatteringGeometry& g, double alpha, double v, int width) {
  const double slack = 2.0 * width + 10.0;
  const int last = g.start_site + width;
  const double reflected = 2.0 * g.start_site - g.x0 - v * g.t_after;
  // Near resonance the transmitted packet lags the ballistic position, the
  // reflected one trails it by up to the reflection shift.
  const double transmitted = g.x0 + v * g.t_after;
  return g.x0 - 1.0 >= kSeamMargin * alpha &&
         g.start_site - g.x0 >= kBarrierMargin * alpha &&
         reflected - 1.0 >= kSeamMargin * alpha &&
         g.start_site - (reflected + slack) >= kBarrierMargin * alpha &&
         transmitted - slack - last >= kBarrierMargin * alpha &&
         g.n_sites - transmitted >= kSeamMargin * alpha;
}

}  // namespace

ScatteringGeometry plan_geometry(double alpha, double k0, const BarrierSpec& barrier,
                                 const DispersionParams& params) {
  const double v = params.group_velocity(k0);
  if (!(alpha > 0.0) || !(v > 0.0)) {
    throw Error(ErrorKind::InvalidConfig, "geometry needs alpha > 0 and a right-moving packet");
  }
  const int width = barrier.width();
  ScatteringGeometry g;
  if (geometry_is_clean(g, alpha, v, width)) return g;

  const double slack = 2.0 * width + 10.0;
  g.x0 = std::ceil(8.0 * alpha) + 3.0 * width + 11.0;
  g.start_site = static_cast<int>(g.x0 + std::ceil(kBarrierMargin * alpha));
  g.t_after = (g.start_site - g.x0 + kBarrierMargin * alpha + slack + width + 1.0) / v;
  const double transmitted = g.x0 + v * g.t_after;
  g.n_sites = static_cast<int>(std::ceil(transmitted + 8.0 * alpha)) + 10;
  if (!geometry_is_clean(g, alpha, v, width)) {
    throw Error(ErrorKind::InvalidConfig, "could not lay out a clean scattering geometry");
  }
  return g;
}

}  // namespace latscat
