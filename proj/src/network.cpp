// Copyright 2026 The Flowline Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "flowline/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <tuple>

#include "flowline/errors.hpp"

namespace flowline {

std::int64_t to_fixed(double v, std::int64_t scale) {
  if (!std::isfinite(v)) throw BuildError("non-finite cost");
  const double scaled = v * static_cast<double>(scale);
  if (std::abs(scaled) >= 9.0e18) throw BuildError("fixed-point overflow");
  return std::llround(scaled);  // rounds halfway cases away from zero
}

bool can_transition(const CandidateBox& a, const CandidateBox& b, const Params& params) {
  const double min_w = std::min(a.w, b.w);
  const double h_gap = std::max(0.0, std::max(a.x, b.x) - std::min(a.x + a.w, b.x + b.w));
  if (!(h_gap / min_w < params.t_h)) return false;
  const double v_overlap = std::min(a.y + a.w, b.y + b.w) - std::max(a.y, b.y);
  if (!(v_overlap / min_w > params.t_v)) return false;
  const double size_diff = std::abs(a.w - b.w) / min_w;
  return size_diff < params.t_s;
}

double data_cost(const CandidateBox& c) { return -c.confidence; }

double smoothness_cost(const CandidateBox& a, const CandidateBox& b, const Params& params) {
  const double dx = a.center_x() - b.center_x();
  const double dy = a.center_y() - b.center_y();
  const double distance = std::sqrt(dx * dx + dy * dy) / ((a.w + b.w) / 2.0);
  const double size_diff = std::abs(a.w - b.w) / std::min(a.w, b.w);
  return params.alpha * distance + (1.0 - params.alpha) * size_diff;
}

namespace {

constexpr double kNoPredecessor = std::numeric_limits<double>::infinity();

// Propagates min (literal) or max (confidence_max) confidence along the
// DAG. `edges` must be forward edges of the sorted scene; forward is
// by ascending index and backward by descending, so one sweep covers
// the whole transitive set.
std::vector<double> propagate(int n, const std::vector<std::pair<int, int>>& edges,
                              const std::vector<double>& conf, bool forward, bool take_min) {
  std::vector<double> best(n, take_min ? kNoPredecessor : -kNoPredecessor);
  auto fold = [take_min](double acc, double v) {
    return take_min ? std::min(acc, v) : std::max(acc, v);
  };
  if (forward) {
    for (const auto& [from, to] : edges) {
      best[to] = fold(best[to], fold(best[from], conf[from]));
    }
  } else {
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
      best[it->first] = fold(best[it->first], fold(best[it->second], conf[it->second]));
    }
  }
  for (double& v : best) {
    if (!std::isfinite(v)) v = 0.0;  // empty predecessor/successor set
  }
  return best;
}

std::vector<double> effective_confidences(const Scene& scene,
                                          std::span<const double> override_values) {
  std::vector<double> conf;
  conf.reserve(scene.candidates.size());
  if (override_values.empty()) {
    for (const auto& c : scene.candidates) conf.push_back(c.confidence);
    return conf;
  }
  if (override_values.size() != scene.candidates.size()) {
    throw ValidationError("confidence override size does not match candidate count");
  }
  for (double v : override_values) {
    if (!(v >= 0.0 && v <= 1.0)) throw ValidationError("override confidence outside [0,1]");
    conf.push_back(v);
  }
  return conf;
}

void require_sorted(const Scene& scene) {
  const auto& cs = scene.candidates;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].id != static_cast<int>(i)) {
      throw ValidationError("scene must be sorted (ids dense in sorted order)");
    }
    if (i > 0) {
      const auto prev = std::tuple(cs[i - 1].center_x(), cs[i - 1].center_y());
      const auto cur = std::tuple(cs[i].center_x(), cs[i].center_y());
      if (cur < prev) throw ValidationError("scene must be sorted by center x, then y");
    }
  }
}

}  // namespace

EntryExitCosts entry_exit_costs(const Scene& sorted,
                                const std::vector<std::pair<int, int>>& edges,
                                const Params& params) {
  const int n = static_cast<int>(sorted.candidates.size());
  std::vector<double> conf;
  conf.reserve(n);
  for (const auto& c : sorted.candidates) conf.push_back(c.confidence);
  const bool take_min = params.entry_cost_mode == EntryCostMode::literal;
  EntryExitCosts costs;
  costs.entry = propagate(n, edges, conf, /*forward=*/true, take_min);
  costs.exit = propagate(n, edges, conf, /*forward=*/false, take_min);
  return costs;
}

FlowNetwork build_network(const Scene& sorted, const Params& params,
                          std::span<const double> confidence_override) {
  params.validate();
  require_sorted(sorted);
  const int n = static_cast<int>(sorted.candidates.size());
  const std::vector<double> conf = effective_confidences(sorted, confidence_override);

  FlowNetwork net;
  net.num_candidates = n;
  net.scale = params.cost_scale;
  net.confidence = conf;
  net.data_cost_fp.reserve(n);
  for (int i = 0; i < n; ++i) {
    net.data_cost_fp.push_back(to_fixed(params.beta * -conf[i], net.scale));
  }

  std::vector<std::pair<int, int>> pairs;
  net.edge_begin.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    net.edge_begin[i] = static_cast<int>(net.edges.size());
    for (int j = i + 1; j < n; ++j) {
      if (!can_transition(sorted.candidates[i], sorted.candidates[j], params)) continue;
      const double cost = smoothness_cost(sorted.candidates[i], sorted.candidates[j], params);
      net.edges.push_back({i, j, to_fixed(cost, net.scale)});
      pairs.emplace_back(i, j);
    }
  }
  net.edge_begin[n] = static_cast<int>(net.edges.size());

  const bool take_min = params.entry_cost_mode == EntryCostMode::literal;
  const auto entry = propagate(n, pairs, conf, /*forward=*/true, take_min);
  const auto exit = propagate(n, pairs, conf, /*forward=*/false, take_min);
  net.entry_cost_fp.reserve(n);
  net.exit_cost_fp.reserve(n);
  for (int i = 0; i < n; ++i) {
    net.entry_cost_fp.push_back(to_fixed(entry[i], net.scale));
    net.exit_cost_fp.push_back(to_fixed(exit[i], net.scale));
  }
  return net;
}

std::string to_dot(const FlowNetwork& net) {
  std::ostringstream out;
  out << "digraph flownet {\n  rankdir=LR;\n";
  out << "  source [shape=box label=\"S\"];\n  sink [shape=box label=\"T\"];\n";
  char conf_buf[32];
  for (int i = 0; i < net.num_candidates; ++i) {
    std::snprintf(conf_buf, sizeof(conf_buf), "%.3f", net.confidence[i]);
    out << "  c" << i << "_in [label=\"" << i << " p=" << conf_buf << "\"];\n";
    out << "  c" << i << "_out [label=\"" << i << "'\"];\n";
  }
  for (int i = 0; i < net.num_candidates; ++i) {
    out << "  source -> c" << i << "_in [label=\"" << net.entry_cost_fp[i] << "\"];\n";
    out << "  c" << i << "_in -> c" << i << "_out [label=\"" << net.data_cost_fp[i] << "\"];\n";
    out << "  c" << i << "_out -> sink [label=\"" << net.exit_cost_fp[i] << "\"];\n";
  }
  for (const auto& e : net.edges) {
    out << "  c" << e.from << "_out -> c" << e.to << "_in [label=\"" << e.cost_fp << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace flowline
