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

#include "flowline/solver.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <vector>

#include "flowline/errors.hpp"

namespace flowline {

std::optional<FlowPath> min_cost_path(const FlowNetwork& net) {
  const int n = net.num_candidates;
  if (n == 0) return std::nullopt;

  // suffix[i]: cheapest way to finish a flow that has just entered i
  // (data cost of i included). Edges only point forward, so a single
  // reverse sweep settles every node.
  std::vector<std::int64_t> suffix(n);
  for (int i = n - 1; i >= 0; --i) {
    std::int64_t best = net.exit_cost_fp[i];
    for (int e = net.edge_begin[i]; e < net.edge_begin[i + 1]; ++e) {
      best = std::min(best, net.edges[e].cost_fp + suffix[net.edges[e].to]);
    }
    suffix[i] = net.data_cost_fp[i] + best;
  }

  std::int64_t best_total = std::numeric_limits<std::int64_t>::max();
  int start = 0;
  for (int i = 0; i < n; ++i) {
    const std::int64_t total = net.entry_cost_fp[i] + suffix[i];
    if (total < best_total) {  // keeps the smallest start on ties
      best_total = total;
      start = i;
    }
  }

  // Reconstruct greedily. Exiting is preferred over continuing and the
  // smallest admissible successor over larger ones, which makes the
  // member sequence the lexicographically smallest optimum (a proper
  // prefix sorts before its extensions).
  FlowPath path;
  path.cost_fp = best_total;
  int cur = start;
  while (true) {
    path.members.push_back(cur);
    const std::int64_t remaining = suffix[cur] - net.data_cost_fp[cur];
    if (net.exit_cost_fp[cur] == remaining) break;
    int next = -1;
    for (int e = net.edge_begin[cur]; e < net.edge_begin[cur + 1]; ++e) {
      if (net.edges[e].cost_fp + suffix[net.edges[e].to] == remaining) {
        next = net.edges[e].to;  // edges per node are sorted by target
        break;
      }
    }
    if (next < 0) throw std::logic_error("path reconstruction lost the optimum");
    cur = next;
  }
  assert(recompute_path_cost(net, path.members) == path.cost_fp);
  return path;
}

std::int64_t recompute_path_cost(const FlowNetwork& net, const std::vector<int>& members) {
  if (members.empty()) throw ValidationError("path has no members");
  std::int64_t total = net.entry_cost_fp[members.front()] + net.exit_cost_fp[members.back()];
  for (size_t k = 0; k < members.size(); ++k) {
    total += net.data_cost_fp[members[k]];
    if (k + 1 == members.size()) break;
    bool found = false;
    for (int e = net.edge_begin[members[k]]; e < net.edge_begin[members[k] + 1]; ++e) {
      if (net.edges[e].to == members[k + 1]) {
        total += net.edges[e].cost_fp;
        found = true;
        break;
      }
    }
    if (!found) throw ValidationError("path uses a transition that is not in the network");
  }
  return total;
}

std::vector<int> suppress_overlaps(const Scene& remaining, const FlowPath& path,
                                   const Params& params) {
  std::vector<bool> is_member(remaining.candidates.size(), false);
  for (int id : path.members) is_member[id] = true;

  std::vector<int> removed;
  for (const auto& c : remaining.candidates) {
    if (is_member[c.id]) {
      removed.push_back(c.id);
      continue;
    }
    for (int m : path.members) {
      if (iou(c.rect(), remaining.candidates[m].rect()) > params.overlap_delete) {
        removed.push_back(c.id);
        break;
      }
    }
  }
  return removed;  // candidates iterate in id order, so this is ascending
}

ExtractionResult extract_all(const Scene& scene, const Params& params) {
  params.validate();
  SortResult sorted = sort_candidates(scene);

  // Working set in sorted order; ids stay dense across iterations by
  // re-labeling, with orig_ids tracking the input scene's ids.
  std::vector<CandidateBox> current = sorted.scene.candidates;
  std::vector<int> orig_ids = sorted.original_ids;

  ExtractionResult result;
  while (!current.empty()) {
    Scene view;
    view.candidates = current;
    const FlowNetwork net = build_network(view, params);
    const auto path = min_cost_path(net);
    if (path->cost_fp > 0) {
      result.rejected_final_cost_fp = path->cost_fp;
      break;
    }

    FlowPath accepted;
    accepted.cost_fp = path->cost_fp;
    for (int id : path->members) accepted.members.push_back(orig_ids[id]);
    result.accepted.push_back(std::move(accepted));

    const std::vector<int> removed = suppress_overlaps(view, *path, params);
    std::vector<int>& deleted = result.deleted.emplace_back();
    for (int id : removed) deleted.push_back(orig_ids[id]);
    std::sort(deleted.begin(), deleted.end());

    std::vector<bool> drop(current.size(), false);
    for (int id : removed) drop[id] = true;
    std::vector<CandidateBox> next_boxes;
    std::vector<int> next_orig;
    for (size_t i = 0; i < current.size(); ++i) {
      if (drop[i]) continue;
      CandidateBox c = current[i];
      c.id = static_cast<int>(next_boxes.size());
      next_boxes.push_back(c);
      next_orig.push_back(orig_ids[i]);
    }
    current = std::move(next_boxes);
    orig_ids = std::move(next_orig);
  }
  return result;
}

}  // namespace flowline
