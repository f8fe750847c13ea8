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

#ifndef FLOWLINE_LINES_HPP_
#define FLOWLINE_LINES_HPP_

#include <vector>

#include "flowline/model.hpp"
#include "flowline/solver.hpp"

namespace flowline {

enum class ProfileSource { supplied, computed };

// Column-wise gradient energy across a text line box; one value per
// pixel column of the box, all >= 0.
struct GradientProfile {
  std::vector<double> values;
  ProfileSource source = ProfileSource::computed;
};

// Tight bounding rectangle over the path's member boxes. Members must
// already be in left-to-right order; within equal center x they are
// reordered by id. `cost_scale` converts the path's fixed-point cost
// back to a real value.
TextLine path_to_line(const FlowPath& path, const Scene& scene, std::int64_t cost_scale = 1);

// Per-column sum, over the rows of the line box, of absolute horizontal
// central differences of intensity, with border-replicated sampling.
// Throws if the box misses the raster entirely.
GradientProfile compute_profile(const TextLine& line, const Raster& raster);

// Splits a line into words at wide low-gradient runs. The profile is
// normalized by its maximum; a blank is a maximal run of columns below
// blank_ratio whose length is at least min_gap_ratio * line height.
// Interior blanks split at their centers, boundary blanks trim the
// outermost words. An all-zero profile yields the whole line as one
// word. Always returns at least one rectangle, left to right.
std::vector<Rect> split_words(const TextLine& line, const GradientProfile& profile,
                              double blank_ratio = 0.15, double min_gap_ratio = 0.3);

}  // namespace flowline

#endif  // FLOWLINE_LINES_HPP_
