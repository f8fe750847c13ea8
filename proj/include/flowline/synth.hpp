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

#ifndef FLOWLINE_SYNTH_HPP_
#define FLOWLINE_SYNTH_HPP_

#include <cstdint>

#include "flowline/eval.hpp"
#include "flowline/model.hpp"

namespace flowline {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Range&) const = default;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
  bool operator==(const IntRange&) const = default;
};

// Deterministic scene generator: horizontal rows of square character
// candidates with jittered sizes and gaps, plus distractor boxes.
// Distractors model a multi-scale detector firing repeatedly around
// text: they are placed as tight stacks straddling the gaps inside a
// row, size-compatible with the surrounding characters, and never
// exceed 0.5 IoU with any text candidate.
struct SynthConfig {
  std::uint64_t seed = 0;
  int num_lines = 3;
  IntRange chars_per_line{4, 10};
  Range char_size{16.0, 32.0};   // px
  Range gap_ratio{0.15, 0.3};    // inter-character gap as fraction of char size
  double size_jitter = 0.05;     // per-character size variation, fraction
  double y_jitter = 0.04;        // vertical offset, fraction of char size
  Range text_conf{0.8, 1.0};
  int noise_count = 20;
  Range noise_conf{0.0, 0.3};
  Range noise_size{0.9, 1.1};    // relative to the local character size
  double canvas_width = 640.0;
  double canvas_height = 480.0;
  bool emit_raster = false;

  void validate() const;  // throws ValidationError naming the field
};

struct SynthOutput {
  Scene scene;
  GroundTruth truth;  // tight line boxes, line granularity
};

// Identical configs produce bit-identical output. Throws
// ValidationError when a feasible layout cannot be found within a
// bounded number of retries.
SynthOutput generate(const SynthConfig& config);

}  // namespace flowline

#endif  // FLOWLINE_SYNTH_HPP_
