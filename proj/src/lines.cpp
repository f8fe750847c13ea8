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

#include "flowline/lines.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "flowline/errors.hpp"

namespace flowline {

TextLine path_to_line(const FlowPath& path, const Scene& scene, std::int64_t cost_scale) {
  if (path.members.empty()) throw ValidationError("path has no members");
  const int n = static_cast<int>(scene.candidates.size());
  std::vector<int> index_of_id(n, -1);
  for (int i = 0; i < n; ++i) index_of_id[scene.candidates[i].id] = i;
  auto box_of = [&](int id) -> const CandidateBox& {
    if (id < 0 || id >= n || index_of_id[id] < 0) {
      throw ValidationError("path member " + std::to_string(id) + " is not in the scene");
    }
    return scene.candidates[index_of_id[id]];
  };

  TextLine line;
  line.cost = static_cast<double>(path.cost_fp) / static_cast<double>(cost_scale);
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
  double prev_cx = 0.0;
  for (size_t k = 0; k < path.members.size(); ++k) {
    const auto& c = box_of(path.members[k]);
    if (k == 0) {
      x0 = c.x;
      y0 = c.y;
      x1 = c.x + c.w;
      y1 = c.y + c.w;
    } else {
      if (c.center_x() < prev_cx) {
        throw ValidationError("path members are out of x order");
      }
      x0 = std::min(x0, c.x);
      y0 = std::min(y0, c.y);
      x1 = std::max(x1, c.x + c.w);
      y1 = std::max(y1, c.y + c.w);
    }
    prev_cx = c.center_x();
  }
  line.box = Rect{x0, y0, x1 - x0, y1 - y0};
  line.members = path.members;
  std::sort(line.members.begin(), line.members.end(), [&](int a, int b) {
    return std::tuple(box_of(a).center_x(), a) < std::tuple(box_of(b).center_x(), b);
  });
  return line;
}

GradientProfile compute_profile(const TextLine& line, const Raster& raster) {
  if (raster.rows <= 0 || raster.cols <= 0) throw ValidationError("empty raster");
  const int c0 = static_cast<int>(std::llround(line.box.x));
  const int r0 = static_cast<int>(std::llround(line.box.y));
  const int ncols = static_cast<int>(std::llround(line.box.w));
  const int nrows = static_cast<int>(std::llround(line.box.h));
  if (c0 + ncols <= 0 || r0 + nrows <= 0 || c0 >= raster.cols || r0 >= raster.rows) {
    throw ValidationError("line box lies outside the raster");
  }

  GradientProfile profile;
  profile.source = ProfileSource::computed;
  profile.values.assign(static_cast<size_t>(std::max(ncols, 0)), 0.0);
  for (int i = 0; i < ncols; ++i) {
    const int c = c0 + i;
    double sum = 0.0;
    for (int r = r0; r < r0 + nrows; ++r) {
      sum += std::abs(raster.at_clamped(r, c + 1) - raster.at_clamped(r, c - 1));
    }
    profile.values[i] = sum;
  }
  return profile;
}

namespace {

struct Run {
  int begin = 0;  // inclusive column
  int end = 0;    // exclusive column
  int length() const { return end - begin; }
};

}  // namespace

std::vector<Rect> split_words(const TextLine& line, const GradientProfile& profile,
                              double blank_ratio, double min_gap_ratio) {
  const int ncols = static_cast<int>(profile.values.size());
  if (ncols != static_cast<int>(std::llround(line.box.w))) {
    throw ValidationError("profile length does not match line width");
  }

  const double peak = ncols == 0 ? 0.0
                                 : *std::max_element(profile.values.begin(), profile.values.end());
  if (peak <= 0.0) {
    return {line.box};  // nothing to normalize against: one word, whole line
  }

  // Maximal runs of columns whose normalized value falls below
  // blank_ratio, kept only when long enough relative to line height.
  const double min_len = min_gap_ratio * line.box.h;
  std::vector<Run> blanks;
  for (int c = 0; c < ncols;) {
    if (profile.values[c] / peak < blank_ratio) {
      Run run{c, c + 1};
      while (run.end < ncols && profile.values[run.end] / peak < blank_ratio) ++run.end;
      if (run.length() >= min_len) blanks.push_back(run);
      c = run.end;
    } else {
      ++c;
    }
  }

  // Boundary blanks trim; interior blanks contribute a split column at
  // their center. Boundaries are measured in column offsets from the
  // left edge of the line box.
  double left = 0.0;
  double right = ncols;
  std::vector<double> cuts;
  for (const Run& run : blanks) {
    if (run.begin == 0) {
      left = run.end;
    } else if (run.end == ncols) {
      right = run.begin;
    } else {
      cuts.push_back((run.begin + run.end) / 2.0);
    }
  }

  if (left >= right) return {line.box};  // everything blank after normalization

  std::vector<Rect> words;
  double word_start = left;
  for (double cut : cuts) {
    words.push_back(Rect{line.box.x + word_start, line.box.y, cut - word_start, line.box.h});
    word_start = cut;
  }
  words.push_back(Rect{line.box.x + word_start, line.box.y, right - word_start, line.box.h});
  return words;
}

}  // namespace flowline
