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

// Independent reference implementations used as oracles. These stay
// deliberately naive (exhaustive enumeration) and must not share code
// with the library paths they check.

#ifndef FLOWLINE_TESTS_TEST_SUPPORT_HPP_
#define FLOWLINE_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "flowline/model.hpp"
#include "flowline/network.hpp"
#include "flowline/rng.hpp"

namespace flowline::testing {

struct OraclePath {
  std::vector<int> members;
  std::int64_t cost_fp = 0;
};

// Enumerates every source-to-sink path of the network by DFS and keeps
// the cheapest; ties resolve to the lexicographically smallest member
// sequence. Intended for networks of at most ~15 candidates.
inline std::optional<OraclePath> enumerate_min_cost_path(const FlowNetwork& net) {
  const int n = net.num_candidates;
  if (n == 0) return std::nullopt;

  std::optional<OraclePath> best;
  std::vector<int> stack;

  auto consider = [&](std::int64_t cost) {
    if (!best || cost < best->cost_fp ||
        (cost == best->cost_fp && stack < best->members)) {
      best = OraclePath{stack, cost};
    }
  };

  // walk(i, cost): cost includes entry of the first member and data of
  // every member pushed so far, but not the exit.
  auto walk = [&](auto&& self, int node, std::int64_t cost) -> void {
    consider(cost + net.exit_cost_fp[node]);
    for (int e = net.edge_begin[node]; e < net.edge_begin[node + 1]; ++e) {
      const auto& edge = net.edges[e];
      stack.push_back(edge.to);
      self(self, edge.to, cost + edge.cost_fp + net.data_cost_fp[edge.to]);
      stack.pop_back();
    }
  };

  for (int first = 0; first < n; ++first) {
    stack.push_back(first);
    walk(walk, first, net.entry_cost_fp[first] + net.data_cost_fp[first]);
    stack.pop_back();
  }
  return best;
}

// Random compact scenes whose candidates often chain, for exercising
// the solver against the enumeration oracle.
inline Scene random_scene(Rng& rng, int max_candidates) {
  Scene scene;
  const int n = rng.uniform_int(0, max_candidates);
  for (int i = 0; i < n; ++i) {
    const double w = rng.uniform(8.0, 14.0);
    const double x = rng.uniform(0.0, 120.0);
    const double y = rng.uniform(0.0, 30.0);
    const double conf = rng.uniform(0.0, 1.0);
    scene.candidates.emplace_back(i, x, y, w, conf);
  }
  return scene;
}

// Largest one-to-one match count over all assignments with pair IoU
// above the threshold, by exhaustive recursion. Usable up to ~6 boxes.
inline int max_matching_oracle(const std::vector<Rect>& detections,
                               const std::vector<Rect>& truth, double threshold) {
  std::vector<bool> used(truth.size(), false);
  auto go = [&](auto&& self, size_t d) -> int {
    if (d == detections.size()) return 0;
    int best = self(self, d + 1);  // leave detection d unmatched
    for (size_t g = 0; g < truth.size(); ++g) {
      if (used[g] || !(iou(detections[d], truth[g]) > threshold)) continue;
      used[g] = true;
      best = std::max(best, 1 + self(self, d + 1));
      used[g] = false;
    }
    return best;
  };
  return go(go, 0);
}

}  // namespace flowline::testing

#endif  // FLOWLINE_TESTS_TEST_SUPPORT_HPP_
