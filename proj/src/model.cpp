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

#include "flowline/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "flowline/errors.hpp"

namespace flowline {

namespace {

void check_box(int id, double x, double y, double w, double confidence) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(w)) {
    throw ValidationError("candidate " + std::to_string(id) + ": non-finite geometry");
  }
  if (w <= 0.0) {
    throw ValidationError("candidate " + std::to_string(id) +
                          ": side length must be > 0, got " + std::to_string(w));
  }
  if (!(confidence >= 0.0 && confidence <= 1.0)) {
    throw ValidationError("candidate " + std::to_string(id) +
                          ": confidence must be in [0,1], got " + std::to_string(confidence));
  }
}

}  // namespace

CandidateBox::CandidateBox(int id, double x, double y, double w, double confidence)
    : id(id), x(x), y(y), w(w), confidence(confidence) {
  check_box(id, x, y, w, confidence);
}

CandidateBox::CandidateBox(int id, double x, double y, double w, double h, double confidence)
    : CandidateBox(id, x, y, w, confidence) {
  if (w != h) {
    throw ValidationError("candidate " + std::to_string(id) + ": boxes are squares, got " +
                          std::to_string(w) + "x" + std::to_string(h));
  }
}

double Raster::at_clamped(int r, int c) const {
  r = std::clamp(r, 0, rows - 1);
  c = std::clamp(c, 0, cols - 1);
  return at(r, c);
}

void validate_scene(const Scene& scene) {
  const int n = static_cast<int>(scene.candidates.size());
  std::vector<bool> seen(n, false);
  for (const auto& c : scene.candidates) {
    check_box(c.id, c.x, c.y, c.w, c.confidence);
    if (c.id < 0 || c.id >= n || seen[c.id]) {
      throw ValidationError("candidate ids must be unique and dense from 0; bad id " +
                            std::to_string(c.id));
    }
    seen[c.id] = true;
    if (scene.image_width > 0.0 && scene.image_height > 0.0) {
      if (c.x < 0.0 || c.y < 0.0 || c.x + c.w > scene.image_width ||
          c.y + c.w > scene.image_height) {
        throw ValidationError("candidate " + std::to_string(c.id) + " exceeds image bounds");
      }
    }
  }
  if (scene.raster) {
    const auto& r = *scene.raster;
    if (r.rows < 0 || r.cols < 0 ||
        r.values.size() != static_cast<size_t>(r.rows) * static_cast<size_t>(r.cols)) {
      throw ValidationError("raster values length does not match rows*cols");
    }
  }
  for (const auto& [index, profile] : scene.profiles) {
    if (index < 0) throw ValidationError("profile line index must be >= 0");
    for (double v : profile) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw ValidationError("profile values must be finite and >= 0");
      }
    }
  }
}

void Params::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("alpha must be in [0,1]");
  if (!(beta > 0.0)) throw ValidationError("beta must be > 0");
  if (!(overlap_delete > 0.0 && overlap_delete <= 1.0)) {
    throw ValidationError("overlap_delete must be in (0,1]");
  }
  if (cost_scale < 1) throw ValidationError("cost_scale must be a positive integer");
  for (auto [name, v] : {std::pair{"t_h", t_h}, {"t_v", t_v}, {"t_s", t_s}}) {
    if (!std::isfinite(v)) throw ValidationError(std::string(name) + " must be finite");
  }
}

SortResult sort_candidates(const Scene& scene) {
  std::vector<int> order(scene.candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ca = scene.candidates[a];
    const auto& cb = scene.candidates[b];
    return std::tuple(ca.center_x(), ca.center_y(), ca.id) <
           std::tuple(cb.center_x(), cb.center_y(), cb.id);
  });

  SortResult result;
  result.scene = scene;
  result.scene.candidates.clear();
  result.scene.candidates.reserve(order.size());
  result.original_ids.reserve(order.size());
  for (size_t pos = 0; pos < order.size(); ++pos) {
    CandidateBox c = scene.candidates[order[pos]];
    result.original_ids.push_back(c.id);
    c.id = static_cast<int>(pos);
    result.scene.candidates.push_back(c);
  }
  return result;
}

}  // namespace flowline
