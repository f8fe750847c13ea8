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

#ifndef FLOWLINE_MODEL_HPP_
#define FLOWLINE_MODEL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "flowline/geometry.hpp"

namespace flowline {

// A square image region hypothesized to contain one whole character,
// with a text-confidence score in [0, 1].
struct CandidateBox {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;  // side length; boxes are squares
  double confidence = 0.0;

  CandidateBox() = default;

  // Throws ValidationError unless w > 0 and confidence in [0, 1].
  CandidateBox(int id, double x, double y, double w, double confidence);

  // Rectangular form: rejects w != h.
  CandidateBox(int id, double x, double y, double w, double h, double confidence);

  double center_x() const { return x + w / 2.0; }
  double center_y() const { return y + w / 2.0; }
  Rect rect() const { return Rect{x, y, w, w}; }
};

// Row-major grayscale intensity grid.
struct Raster {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;

  double at(int r, int c) const { return values[static_cast<size_t>(r) * cols + c]; }
  // Border-replicating access for out-of-range indices.
  double at_clamped(int r, int c) const;
};

struct Scene {
  std::vector<CandidateBox> candidates;
  double image_width = 0.0;   // 0 = unknown
  double image_height = 0.0;  // 0 = unknown
  std::optional<Raster> raster;
  // Optional per-line gradient profiles keyed by extracted line index,
  // for exercising word splitting without a raster.
  std::map<int, std::vector<double>> profiles;
};

// Checks id density (a permutation of 0..n-1), raster shape, and that
// candidates fit the image bounds when bounds are known.
void validate_scene(const Scene& scene);

enum class EntryCostMode {
  // Entry cost of a candidate = minimum confidence over its
  // (transitive) predecessors; exit symmetric over successors.
  literal,
  // Maximum instead of minimum.
  confidence_max,
};

struct Params {
  double t_h = 2.0;   // horizontal gap / min width upper bound
  double t_v = 0.6;   // vertical overlap / min width lower bound
  double t_s = 0.2;   // size difference / min width upper bound
  double alpha = 0.4; // distance vs size weight in the smoothness cost
  double beta = 2.0;  // data cost weight in the objective
  double overlap_delete = 0.5;             // IoU suppression threshold
  std::int64_t cost_scale = 1'000'000;     // fixed-point multiplier
  EntryCostMode entry_cost_mode = EntryCostMode::literal;

  void validate() const;  // throws ValidationError naming the field

  bool operator==(const Params&) const = default;
};

// Final detection: the tight bounding rectangle of a flow's members.
struct TextLine {
  Rect box;
  std::vector<int> members;  // candidate ids, left to right
  double cost = 0.0;         // flow cost of the generating path
  std::vector<Rect> words;   // optional word sub-boxes
};

struct SortResult {
  Scene scene;                    // ids re-densified 0..n-1 in sorted order
  std::vector<int> original_ids;  // original_ids[new_id] == input id
};

// Orders candidates by center x, ties by center y, then original id.
SortResult sort_candidates(const Scene& scene);

}  // namespace flowline

#endif  // FLOWLINE_MODEL_HPP_
