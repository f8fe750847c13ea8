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

#ifndef FLOWLINE_SOLVER_HPP_
#define FLOWLINE_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "flowline/network.hpp"

namespace flowline {

// One extracted flow: the candidates it passes through, in sorted-index
// order, and its exact fixed-point cost
//   entry(first) + sum(data) + sum(smoothness) + exit(last).
struct FlowPath {
  std::vector<int> members;
  std::int64_t cost_fp = 0;
};

struct ExtractionResult {
  std::vector<FlowPath> accepted;  // in extraction order, all cost_fp <= 0
  // Cost of the first positive-cost path, which terminates the loop and
  // is discarded. Absent if the graph emptied first.
  std::optional<std::int64_t> rejected_final_cost_fp;
  // Per accepted iteration: candidate ids removed by overlap
  // suppression (path members included), ascending input-scene ids.
  std::vector<std::vector<int>> deleted;
};

// Minimum-cost source-to-sink path. A flow of value 1 on this
// unit-capacity DAG is exactly a shortest path, so a single relaxation
// pass in topological (= sorted index) order is exact despite the
// negative data costs. Ties are broken toward the lexicographically
// smallest member sequence. Empty networks yield nullopt.
std::optional<FlowPath> min_cost_path(const FlowNetwork& net);

// Independent re-accumulation of a path's cost from the network's cost
// tables; used to audit solver output.
std::int64_t recompute_path_cost(const FlowNetwork& net, const std::vector<int>& members);

// Ids to delete after accepting `path`: every member, plus every other
// candidate of `remaining` whose IoU with some member exceeds
// params.overlap_delete. Ascending id order.
std::vector<int> suppress_overlaps(const Scene& remaining, const FlowPath& path,
                                   const Params& params);

// Iterative extraction: rebuild the network on the remaining
// candidates (entry/exit costs recomputed each round), take the
// minimum-cost flow, stop once its cost turns positive, otherwise
// accept it and suppress overlaps. Runs at most |candidates| rounds.
// Member ids in the result refer to the input scene's ids.
ExtractionResult extract_all(const Scene& scene, const Params& params);

}  // namespace flowline

#endif  // FLOWLINE_SOLVER_HPP_
