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

#ifndef FLOWLINE_NETWORK_HPP_
#define FLOWLINE_NETWORK_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flowline/model.hpp"

namespace flowline {

struct TransitionEdge {
  int from = 0;
  int to = 0;
  std::int64_t cost_fp = 0;  // smoothness cost, fixed point, >= 0
};

// The extraction graph over one sorted scene. Each candidate is a
// split node: source -> in (entry cost), in -> out (data cost),
// out -> sink (exit cost), out -> in of a later candidate (smoothness
// cost). All costs are fixed-point integers at `scale`; transitions
// only go from a lower sorted index to a strictly higher one, so the
// graph is a DAG in index order.
struct FlowNetwork {
  int num_candidates = 0;
  std::int64_t scale = 1'000'000;
  std::vector<double> confidence;           // effective (possibly overridden)
  std::vector<std::int64_t> data_cost_fp;   // beta * -confidence, <= 0
  std::vector<std::int64_t> entry_cost_fp;  // >= 0; 0 when no predecessor
  std::vector<std::int64_t> exit_cost_fp;   // >= 0; 0 when no successor
  std::vector<TransitionEdge> edges;        // sorted by (from, to)
  std::vector<int> edge_begin;              // CSR offsets, size n+1
};

// Rounds v * scale to integer, halfway cases away from zero.
// Throws BuildError on overflow or non-finite input.
std::int64_t to_fixed(double v, std::int64_t scale);

// The three transition constraints gating a directed edge a -> b:
//   horizontal gap H(a,b) / min(W_a, W_b) < t_h,
//   signed vertical overlap V(a,b) / min(W_a, W_b) > t_v,
//   |W_a - W_b| / min(W_a, W_b) < t_s.
// H is the gap between x-extents (0 when they overlap); V is the
// overlap of y-extents, negative when disjoint. Caller guarantees a
// precedes b in sorted order.
bool can_transition(const CandidateBox& a, const CandidateBox& b, const Params& params);

// Unary cost of passing through a candidate: -confidence.
double data_cost(const CandidateBox& c);

// Pairwise cost alpha * D + (1 - alpha) * S, where D is the center
// distance normalized by the mean side length and S the relative size
// difference. Non-negative whenever can_transition holds.
double smoothness_cost(const CandidateBox& a, const CandidateBox& b, const Params& params);

struct EntryExitCosts {
  std::vector<double> entry;
  std::vector<double> exit;
};

// Per-candidate costs of starting/ending a flow, derived from the
// confidences of all candidates that can reach / be reached from it
// (direct or transitive). Zero when that set is empty. `edges` must
// come from can_transition over the sorted scene.
EntryExitCosts entry_exit_costs(const Scene& sorted,
                                const std::vector<std::pair<int, int>>& edges,
                                const Params& params);

// Builds the full network for a scene already ordered by
// sort_candidates. `confidence_override`, when non-empty, replaces the
// stored confidences (one value in [0,1] per candidate).
FlowNetwork build_network(const Scene& sorted, const Params& params,
                          std::span<const double> confidence_override = {});

// GraphViz dump for eyeballing a network; nodes are labeled with
// id/confidence, edges with their fixed-point cost.
std::string to_dot(const FlowNetwork& net);

}  // namespace flowline

#endif  // FLOWLINE_NETWORK_HPP_
