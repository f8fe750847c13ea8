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

#include <algorithm>
#include <vector>

#include <doctest.h>

#include "flowline/errors.hpp"
#include "flowline/json_io.hpp"
#include "flowline/network.hpp"
#include "flowline/synth.hpp"

using namespace flowline;

namespace {

SynthConfig quiet_config() {
  SynthConfig c;
  c.seed = 7;
  c.num_lines = 1;
  c.chars_per_line = {5, 5};
  c.gap_ratio = {0.2, 0.2};
  c.size_jitter = 0.0;
  c.y_jitter = 0.0;
  c.noise_count = 0;
  return c;
}

}  // namespace

TEST_CASE("an empty request generates an empty scene") {
  SynthConfig c = quiet_config();
  c.num_lines = 0;
  const SynthOutput out = generate(c);
  CHECK(out.scene.candidates.empty());
  CHECK(out.truth.boxes.empty());
}

TEST_CASE("a jitter-free row is equally spaced equal squares that chain") {
  const SynthOutput out = generate(quiet_config());
  REQUIRE(out.scene.candidates.size() == 5);
  const double side = out.scene.candidates[0].w;
  const double step = out.scene.candidates[1].x - out.scene.candidates[0].x;
  const Params params;
  for (size_t i = 0; i < 5; ++i) {
    const auto& c = out.scene.candidates[i];
    CHECK(c.w == doctest::Approx(side));
    if (i > 0) {
      CHECK(c.x - out.scene.candidates[i - 1].x == doctest::Approx(step));
      CHECK(can_transition(out.scene.candidates[i - 1], c, params));
    }
  }
  REQUIRE(out.truth.boxes.size() == 1);
}

TEST_CASE("a fixed seed reproduces the scene byte for byte") {
  SynthConfig c;  // defaults: 3 lines, 20 distractors
  c.seed = 42;
  const std::string first = scene_to_json(generate(c).scene).dump(2);
  const std::string second = scene_to_json(generate(c).scene).dump(2);
  CHECK(first == second);

  c.seed = 43;
  const std::string other = scene_to_json(generate(c).scene).dump(2);
  CHECK(first != other);
}

TEST_CASE("generated scenes satisfy the in-line and distractor guarantees") {
  const Params params;
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 17ULL, 99ULL}) {
    SynthConfig c;  // defaults include 20 distractors
    c.seed = seed;
    const SynthOutput out = generate(c);
    CHECK_NOTHROW(validate_scene(out.scene));
    REQUIRE(static_cast<int>(out.truth.boxes.size()) == c.num_lines);

    // replay the transition constraints over each row; text candidates
    // come first, line by line, followed by the distractors
    const int total = static_cast<int>(out.scene.candidates.size());
    const int text_count = total - c.noise_count;
    REQUIRE(text_count >= 0);
    int index = 0;
    for (const auto& line_box : out.truth.boxes) {
      std::vector<const CandidateBox*> row;
      while (index < text_count) {
        const auto& cand = out.scene.candidates[index];
        const bool inside = cand.x >= line_box.x - 1e-9 && cand.y >= line_box.y - 1e-9 &&
                            cand.x + cand.w <= line_box.x + line_box.w + 1e-9 &&
                            cand.y + cand.w <= line_box.y + line_box.h + 1e-9;
        if (!inside) break;
        row.push_back(&cand);
        ++index;
      }
      CHECK(row.size() >= static_cast<size_t>(c.chars_per_line.lo));
      for (size_t k = 0; k + 1 < row.size(); ++k) {
        CHECK(can_transition(*row[k], *row[k + 1], params));
      }

      // ground truth really is the tight bound of its row
      double x0 = row.front()->x, y0 = row.front()->y, x1 = 0, y1 = 0;
      for (const auto* b : row) {
        x0 = std::min(x0, b->x);
        y0 = std::min(y0, b->y);
        x1 = std::max(x1, b->x + b->w);
        y1 = std::max(y1, b->y + b->w);
      }
      CHECK(line_box.x == doctest::Approx(x0));
      CHECK(line_box.y == doctest::Approx(y0));
      CHECK(line_box.w == doctest::Approx(x1 - x0));
      CHECK(line_box.h == doctest::Approx(y1 - y0));
    }
    CHECK(index == text_count);  // every text candidate fell inside its row box

    // the remainder are the distractors; none overlaps text beyond 0.5
    for (int noise = text_count; noise < total; ++noise) {
      for (int text = 0; text < text_count; ++text) {
        CHECK(iou(out.scene.candidates[noise].rect(), out.scene.candidates[text].rect()) <=
              0.5);
      }
      CHECK(out.scene.candidates[noise].confidence <= c.noise_conf.hi);
    }
  }
}

TEST_CASE("raster output marks exactly the text boxes") {
  SynthConfig c = quiet_config();
  c.emit_raster = true;
  const SynthOutput out = generate(c);
  REQUIRE(out.scene.raster.has_value());
  const auto& raster = *out.scene.raster;
  CHECK(raster.rows == 480);
  CHECK(raster.cols == 640);
  double filled = 0.0;
  for (double v : raster.values) filled += v;
  // five squares of roughly side^2 pixels each
  const double side = out.scene.candidates[0].w;
  CHECK(filled > 4.0 * side * side);
  CHECK(filled < 6.0 * side * side);
}

TEST_CASE("config validation names the offending field") {
  SynthConfig c = quiet_config();
  c.char_size = {-4.0, 10.0};
  try {
    c.validate();
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("char_size") != std::string::npos);
  }

  SynthConfig tall = quiet_config();
  tall.num_lines = 100;  // cannot fit 100 rows of 16..32 px in 480 px
  CHECK_THROWS_AS(tall.validate(), ValidationError);
}
