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

#include "flowline/synth.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "flowline/errors.hpp"
#include "flowline/network.hpp"
#include "flowline/rng.hpp"

namespace flowline {

namespace {

constexpr int kRowRetries = 200;
constexpr int kNoiseRetries = 2000;

// Jitter of stack members around the stack anchor, as fractions of the
// base size. Kept small so members overlap each other well above the
// suppression threshold.
constexpr double kStackCenterJitter = 0.02;
constexpr double kStackSizeJitter = 0.03;

void check_range(const Range& r, const char* name, double lo_min) {
  if (!(r.lo <= r.hi)) throw ValidationError(std::string(name) + ": range is not ordered");
  if (!(r.lo >= lo_min)) {
    throw ValidationError(std::string(name) + ": values must be >= " + std::to_string(lo_min));
  }
}

struct RowBox {
  double x, y, w;
};

}  // namespace

void SynthConfig::validate() const {
  if (num_lines < 0) throw ValidationError("num_lines: must be >= 0");
  if (noise_count < 0) throw ValidationError("noise_count: must be >= 0");
  if (chars_per_line.lo > chars_per_line.hi || chars_per_line.lo < 1) {
    throw ValidationError("chars_per_line: need an ordered range with lo >= 1");
  }
  check_range(char_size, "char_size", 1e-9);
  check_range(gap_ratio, "gap_ratio", 0.0);
  check_range(text_conf, "text_conf", 0.0);
  check_range(noise_conf, "noise_conf", 0.0);
  check_range(noise_size, "noise_size", 1e-9);
  if (text_conf.hi > 1.0) throw ValidationError("text_conf: values must be <= 1");
  if (noise_conf.hi > 1.0) throw ValidationError("noise_conf: values must be <= 1");
  if (size_jitter < 0.0 || size_jitter > 0.4) {
    throw ValidationError("size_jitter: must be in [0, 0.4]");
  }
  if (y_jitter < 0.0 || y_jitter > 0.4) throw ValidationError("y_jitter: must be in [0, 0.4]");
  if (num_lines > 0 || noise_count > 0) {
    if (canvas_width <= 0.0) throw ValidationError("canvas: width must be > 0");
    if (canvas_height <= 0.0) throw ValidationError("canvas: height must be > 0");
    const double band = canvas_height / std::max(1, num_lines);
    const double tallest = char_size.hi * (1.0 + size_jitter + 2.0 * y_jitter);
    if (num_lines > 0 && band < tallest + 2.0) {
      throw ValidationError("canvas: height too small for num_lines rows of char_size boxes");
    }
  }
  if (noise_count > 0 && (num_lines == 0 || chars_per_line.hi < 2)) {
    throw ValidationError("noise_count: distractors need at least one row of 2+ characters");
  }
}

SynthOutput generate(const SynthConfig& config) {
  config.validate();
  Rng rng(config.seed);

  SynthOutput out;
  out.scene.image_width = config.canvas_width;
  out.scene.image_height = config.canvas_height;
  out.truth.granularity = Granularity::line;

  const Params default_params;
  const double band_h = config.canvas_height / std::max(1, config.num_lines);
  const double margin = std::max(2.0, config.char_size.hi * 0.25);

  std::vector<std::vector<RowBox>> rows;
  for (int line = 0; line < config.num_lines; ++line) {
    bool placed = false;
    for (int attempt = 0; attempt < kRowRetries && !placed; ++attempt) {
      const int n_chars = rng.uniform_int(config.chars_per_line.lo, config.chars_per_line.hi);
      const double base = rng.uniform(config.char_size.lo, config.char_size.hi);
      const double y_center = (line + 0.5) * band_h;

      std::vector<RowBox> row;
      double x = 0.0;
      for (int k = 0; k < n_chars; ++k) {
        const double side =
            base * (1.0 + rng.uniform(-config.size_jitter, config.size_jitter));
        const double dy = base * rng.uniform(-config.y_jitter, config.y_jitter);
        row.push_back({x, y_center - side / 2.0 + dy, side});
        if (k + 1 < n_chars) {
          x += side + base * rng.uniform(config.gap_ratio.lo, config.gap_ratio.hi);
        }
      }

      const double width = row.back().x + row.back().w;
      if (width + 2.0 * margin > config.canvas_width) continue;
      const double x0 = rng.uniform(margin, config.canvas_width - width - margin);
      for (auto& b : row) b.x += x0;

      // Rows must stay inside their horizontal band so no cross-row
      // transition can satisfy the vertical overlap constraint.
      bool in_band = true;
      for (const auto& b : row) {
        if (b.y < line * band_h || b.y + b.w > (line + 1) * band_h) in_band = false;
      }
      if (!in_band) continue;

      bool chained = true;
      for (size_t k = 0; k + 1 < row.size(); ++k) {
        const CandidateBox a(0, row[k].x, row[k].y, row[k].w, 1.0);
        const CandidateBox b(1, row[k + 1].x, row[k + 1].y, row[k + 1].w, 1.0);
        if (!can_transition(a, b, default_params)) chained = false;
      }
      if (!chained) continue;

      rows.push_back(std::move(row));
      placed = true;
    }
    if (!placed) {
      throw ValidationError("could not place row " + std::to_string(line) +
                            " after bounded retries; canvas or ranges too tight");
    }
  }

  int next_id = 0;
  for (const auto& row : rows) {
    double x0 = row.front().x, y0 = row.front().y;
    double x1 = 0.0, y1 = 0.0;
    for (const auto& b : row) {
      const double conf = rng.uniform(config.text_conf.lo, config.text_conf.hi);
      out.scene.candidates.emplace_back(next_id++, b.x, b.y, b.w, conf);
      x0 = std::min(x0, b.x);
      y0 = std::min(y0, b.y);
      x1 = std::max(x1, b.x + b.w);
      y1 = std::max(y1, b.y + b.w);
    }
    out.truth.boxes.push_back(Rect{x0, y0, x1 - x0, y1 - y0});
  }
  const int num_text = next_id;

  // Distractors: stacks of mutually overlapping boxes anchored at the
  // midpoint between two adjacent characters. The stack is
  // size-compatible with its row, so flows absorb the profitable
  // members and suppression removes the rest.
  int remaining = config.noise_count;
  int attempts = 0;
  while (remaining > 0) {
    if (++attempts > kNoiseRetries) {
      throw ValidationError("could not place distractors after bounded retries");
    }
    const int line = rng.uniform_int(0, static_cast<int>(rows.size()) - 1);
    const auto& row = rows[line];
    if (row.size() < 2) continue;
    const int gap = rng.uniform_int(0, static_cast<int>(row.size()) - 2);
    const RowBox& a = row[gap];
    const RowBox& b = row[gap + 1];
    const int stack = std::min(remaining, rng.uniform_int(2, 4));

    const double local = (a.w + b.w) / 2.0;
    const double base = local * rng.uniform(config.noise_size.lo, config.noise_size.hi);
    const double cx0 = (a.x + a.w / 2.0 + b.x + b.w / 2.0) / 2.0;
    const double cy0 = (a.y + a.w / 2.0 + b.y + b.w / 2.0) / 2.0;

    std::vector<CandidateBox> stack_boxes;
    bool ok = true;
    for (int s = 0; s < stack; ++s) {
      const double side = base * (1.0 + rng.uniform(-kStackSizeJitter, kStackSizeJitter));
      const double cx = cx0 + base * rng.uniform(-kStackCenterJitter, kStackCenterJitter);
      const double cy = cy0 + base * rng.uniform(-kStackCenterJitter, kStackCenterJitter);
      const double x = cx - side / 2.0;
      const double y = cy - side / 2.0;
      if (x < 0.0 || y < 0.0 || x + side > config.canvas_width ||
          y + side > config.canvas_height) {
        ok = false;
        break;
      }
      const double conf = rng.uniform(config.noise_conf.lo, config.noise_conf.hi);
      stack_boxes.emplace_back(next_id + s, x, y, side, conf);
    }
    if (ok) {
      for (const auto& nb : stack_boxes) {
        for (int t = 0; t < num_text && ok; ++t) {
          if (iou(nb.rect(), out.scene.candidates[t].rect()) > 0.5) ok = false;
        }
        if (!ok) break;
      }
    }
    if (!ok) continue;

    for (auto& nb : stack_boxes) out.scene.candidates.push_back(nb);
    next_id += stack;
    remaining -= stack;
  }

  if (config.emit_raster) {
    Raster raster;
    raster.rows = static_cast<int>(std::llround(config.canvas_height));
    raster.cols = static_cast<int>(std::llround(config.canvas_width));
    raster.values.assign(static_cast<size_t>(raster.rows) * raster.cols, 0.0);
    for (int t = 0; t < num_text; ++t) {
      const auto& c = out.scene.candidates[t];
      const int r_begin = std::max(0, static_cast<int>(std::ceil(c.y - 0.5)));
      const int r_end = std::min(raster.rows, static_cast<int>(std::ceil(c.y + c.w - 0.5)));
      const int c_begin = std::max(0, static_cast<int>(std::ceil(c.x - 0.5)));
      const int c_end = std::min(raster.cols, static_cast<int>(std::ceil(c.x + c.w - 0.5)));
      for (int r = r_begin; r < r_end; ++r) {
        for (int cc = c_begin; cc < c_end; ++cc) {
          raster.values[static_cast<size_t>(r) * raster.cols + cc] = 1.0;
        }
      }
    }
    out.scene.raster = std::move(raster);
  }

  validate_scene(out.scene);
  return out;
}

}  // namespace flowline
