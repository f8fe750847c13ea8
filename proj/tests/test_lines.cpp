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
#include <cmath>
#include <vector>

#include <doctest.h>

#include "flowline/errors.hpp"
#include "flowline/lines.hpp"

using namespace flowline;

namespace {

Raster constant_raster(int rows, int cols, double value) {
  Raster r;
  r.rows = rows;
  r.cols = cols;
  r.values.assign(static_cast<size_t>(rows) * cols, value);
  return r;
}

TextLine line_box(double x, double y, double w, double h) {
  TextLine line;
  line.box = Rect{x, y, w, h};
  return line;
}

// Independent blank-run enumeration used to predict the word count.
int count_interior_qualifying_runs(const std::vector<double>& values, double blank_ratio,
                                   double min_len) {
  const double peak = *std::max_element(values.begin(), values.end());
  if (peak <= 0.0) return 0;
  int count = 0;
  size_t i = 0;
  while (i < values.size()) {
    if (values[i] / peak < blank_ratio) {
      size_t j = i;
      while (j < values.size() && values[j] / peak < blank_ratio) ++j;
      if (i != 0 && j != values.size() && static_cast<double>(j - i) >= min_len) ++count;
      i = j;
    } else {
      ++i;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("a single member maps to its own box") {
  Scene scene;
  scene.candidates.emplace_back(0, 10, 10, 20, 0.9);
  FlowPath path;
  path.members = {0};
  path.cost_fp = -1'800'000;
  const TextLine line = path_to_line(path, scene, 1'000'000);
  CHECK(line.box == Rect{10, 10, 20, 20});
  CHECK(line.members == std::vector<int>{0});
  CHECK(line.cost == doctest::Approx(-1.8));
}

TEST_CASE("the line box is the tight bound over members") {
  Scene scene;
  scene.candidates.emplace_back(0, 0, 0, 10, 0.9);
  scene.candidates.emplace_back(1, 20, 2, 10, 0.9);
  FlowPath path;
  path.members = {0, 1};
  const TextLine line = path_to_line(path, scene);
  CHECK(line.box == Rect{0, 0, 30, 12});
}

TEST_CASE("out-of-x-order members are rejected") {
  Scene scene;
  scene.candidates.emplace_back(0, 0, 0, 10, 0.9);
  scene.candidates.emplace_back(1, 20, 2, 10, 0.9);
  FlowPath path;
  path.members = {1, 0};
  CHECK_THROWS_AS(path_to_line(path, scene), ValidationError);
}

TEST_CASE("members outside the scene are rejected") {
  Scene scene;
  scene.candidates.emplace_back(0, 0, 0, 10, 0.9);
  FlowPath path;
  path.members = {3};
  CHECK_THROWS_AS(path_to_line(path, scene), ValidationError);
}

TEST_CASE("a constant raster yields an all-zero profile") {
  const Raster raster = constant_raster(40, 60, 0.5);
  const TextLine line = line_box(5, 10, 30, 20);
  const GradientProfile profile = compute_profile(line, raster);
  CHECK(profile.values.size() == 30);
  for (double v : profile.values) CHECK(v == 0.0);
}

TEST_CASE("a vertical step edge lights up only the adjacent columns") {
  Raster raster = constant_raster(20, 40, 0.0);
  const int k = 17;  // intensity jumps between columns k-1 and k
  for (int r = 0; r < raster.rows; ++r) {
    for (int c = k; c < raster.cols; ++c) raster.values[r * raster.cols + c] = 1.0;
  }
  const TextLine line = line_box(2, 2, 36, 16);
  const GradientProfile profile = compute_profile(line, raster);
  for (size_t i = 0; i < profile.values.size(); ++i) {
    const int col = 2 + static_cast<int>(i);
    if (col == k - 1 || col == k) {
      CHECK(profile.values[i] > 0.0);
    } else {
      CHECK(profile.values[i] == 0.0);
    }
  }
}

TEST_CASE("two blobs with a flat gap leave a wide zero run") {
  Raster raster = constant_raster(30, 80, 0.0);
  auto fill = [&](int c0, int c1) {
    for (int r = 8; r < 22; ++r) {
      for (int c = c0; c < c1; ++c) raster.values[r * raster.cols + c] = 1.0;
    }
  };
  fill(10, 30);
  fill(42, 62);  // gap columns 30..41 inclusive
  const TextLine line = line_box(8, 6, 58, 18);
  const GradientProfile profile = compute_profile(line, raster);

  int longest_zero_run = 0, run = 0;
  bool positive_before = false, positive_after = false;
  for (size_t i = 0; i < profile.values.size(); ++i) {
    if (profile.values[i] == 0.0) {
      run = (i > 0 && profile.values[i - 1] == 0.0) ? run + 1 : 1;
      if (run >= 10 && run > longest_zero_run) {
        longest_zero_run = run;
        positive_before = false;
        for (size_t b = 0; b < i + 1 - run; ++b) positive_before |= profile.values[b] > 0.0;
        positive_after = false;
        for (size_t a = i + 1; a < profile.values.size(); ++a) {
          positive_after |= profile.values[a] > 0.0;
        }
      }
    } else {
      run = 0;
    }
  }
  CHECK(longest_zero_run >= 10);
  CHECK(positive_before);
  CHECK(positive_after);
}

TEST_CASE("a line box fully outside the raster is an error") {
  const Raster raster = constant_raster(20, 20, 0.0);
  CHECK_THROWS_AS(compute_profile(line_box(100, 100, 10, 10), raster), ValidationError);
}

TEST_CASE("profiles are unchanged when raster and line shift together") {
  Raster raster = constant_raster(40, 60, 0.0);
  for (int r = 10; r < 25; ++r) {
    for (int c = 12; c < 20; ++c) raster.values[r * raster.cols + c] = 0.7;
  }
  const TextLine line = line_box(8, 8, 20, 20);
  const GradientProfile base = compute_profile(line, raster);

  const int dx = 13, dy = 7;
  Raster shifted = constant_raster(60, 90, 0.0);
  for (int r = 0; r < raster.rows; ++r) {
    for (int c = 0; c < raster.cols; ++c) {
      shifted.values[(r + dy) * shifted.cols + (c + dx)] = raster.values[r * raster.cols + c];
    }
  }
  const TextLine moved = line_box(8 + dx, 8 + dy, 20, 20);
  const GradientProfile after = compute_profile(moved, shifted);
  CHECK(after.values == base.values);
}

TEST_CASE("an all-zero profile keeps the whole line as one word") {
  const TextLine line = line_box(10, 10, 40, 12);
  GradientProfile profile;
  profile.values.assign(40, 0.0);
  const auto words = split_words(line, profile);
  REQUIRE(words.size() == 1);
  CHECK(words[0] == line.box);
}

TEST_CASE("a wide central blank splits the line at the run center") {
  const TextLine line = line_box(0, 0, 40, 10);
  GradientProfile profile;
  profile.values.assign(40, 0.0);
  for (int c = 0; c < 15; ++c) profile.values[c] = 5.0;
  for (int c = 27; c < 40; ++c) profile.values[c] = 4.0;
  // blank run covers columns 15..26: 12 columns >= 0.3 * 10, center 21
  const auto words = split_words(line, profile);
  REQUIRE(words.size() == 2);
  CHECK(words[0].x == doctest::Approx(0.0));
  CHECK(words[0].w == doctest::Approx(21.0));
  CHECK(words[1].x == doctest::Approx(21.0));
  CHECK(words[1].w == doctest::Approx(19.0));
  CHECK(words[0].y == 0.0);
  CHECK(words[0].h == 10.0);
}

TEST_CASE("narrow dips between characters do not split") {
  const TextLine line = line_box(0, 0, 30, 12);
  GradientProfile profile;
  profile.values.assign(30, 6.0);
  // two-column dips, below 0.3 * 12 = 3.6 columns
  profile.values[9] = 0.0;
  profile.values[10] = 0.0;
  profile.values[19] = 0.0;
  profile.values[20] = 0.0;
  const auto words = split_words(line, profile);
  REQUIRE(words.size() == 1);
  CHECK(words[0] == line.box);
}

TEST_CASE("boundary blanks trim the outer words") {
  const TextLine line = line_box(0, 0, 30, 10);
  GradientProfile profile;
  profile.values.assign(30, 0.0);
  for (int c = 6; c < 24; ++c) profile.values[c] = 2.0;
  const auto words = split_words(line, profile);
  REQUIRE(words.size() == 1);
  CHECK(words[0].x == doctest::Approx(6.0));
  CHECK(words[0].w == doctest::Approx(18.0));
}

TEST_CASE("profile length must match the line width") {
  const TextLine line = line_box(0, 0, 30, 10);
  GradientProfile profile;
  profile.values.assign(29, 1.0);
  CHECK_THROWS_AS(split_words(line, profile), ValidationError);
}

TEST_CASE("word count follows the interior qualifying runs") {
  // a few deterministic profiles with mixed run lengths
  const TextLine line = line_box(0, 0, 60, 10);
  const std::vector<std::vector<int>> plans = {
      {10, 4, 10, 2, 10, 8, 16},  // alternating text/blank lengths, starts with text
      {5, 3, 20, 12, 20},
      {60},
      {8, 6, 8, 6, 8, 6, 8, 6, 4},
  };
  for (const auto& plan : plans) {
    std::vector<double> values;
    bool text = true;
    for (int len : plan) {
      for (int i = 0; i < len; ++i) values.push_back(text ? 3.0 : 0.0);
      text = !text;
    }
    values.resize(60, 0.0);
    GradientProfile profile{values, ProfileSource::supplied};
    const auto words = split_words(line, profile);
    const int expected = 1 + count_interior_qualifying_runs(values, 0.15, 0.3 * line.box.h);
    CHECK(static_cast<int>(words.size()) == expected);

    // words are disjoint, ordered, inside the line's x extent
    for (size_t i = 0; i < words.size(); ++i) {
      CHECK(words[i].w > 0.0);
      CHECK(words[i].x >= line.box.x - 1e-9);
      CHECK(words[i].x + words[i].w <= line.box.x + line.box.w + 1e-9);
      if (i > 0) CHECK(words[i].x >= words[i - 1].x + words[i - 1].w - 1e-9);
    }
  }
}
