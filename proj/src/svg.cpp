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

#include "flowline/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "flowline/errors.hpp"

namespace flowline {

namespace {

const char* kLineColors[] = {"#2aa02a", "#d62728", "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Scene& scene, const std::vector<TextLine>& lines) {
  double width = scene.image_width;
  double height = scene.image_height;
  if (width <= 0.0 || height <= 0.0) {
    for (const auto& c : scene.candidates) {
      width = std::max(width, c.x + c.w + 4.0);
      height = std::max(height, c.y + c.w + 4.0);
    }
    width = std::max(width, 16.0);
    height = std::max(height, 16.0);
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" fill=\"white\"/>\n";

  for (const auto& c : scene.candidates) {
    out << "  <rect x=\"" << num(c.x) << "\" y=\"" << num(c.y) << "\" width=\"" << num(c.w)
        << "\" height=\"" << num(c.w)
        << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }

  std::vector<int> index_of_id;
  for (const auto& c : scene.candidates) {
    if (c.id >= static_cast<int>(index_of_id.size())) index_of_id.resize(c.id + 1, -1);
  }
  for (size_t i = 0; i < scene.candidates.size(); ++i) {
    index_of_id[scene.candidates[i].id] = static_cast<int>(i);
  }
  auto center = [&](int id) {
    if (id < 0 || id >= static_cast<int>(index_of_id.size()) || index_of_id[id] < 0) {
      throw ValidationError("detection member " + std::to_string(id) +
                            " is not in the scene");
    }
    const auto& c = scene.candidates[index_of_id[id]];
    return std::pair(c.center_x(), c.center_y());
  };

  for (size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const char* color = kLineColors[i % (sizeof(kLineColors) / sizeof(kLineColors[0]))];
    out << "  <rect x=\"" << num(line.box.x) << "\" y=\"" << num(line.box.y) << "\" width=\""
        << num(line.box.w) << "\" height=\"" << num(line.box.h) << "\" fill=\"none\" stroke=\""
        << color << "\" stroke-width=\"1.5\"/>\n";
    for (const auto& w : line.words) {
      out << "  <rect x=\"" << num(w.x) << "\" y=\"" << num(w.y) << "\" width=\"" << num(w.w)
          << "\" height=\"" << num(w.h) << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1\" stroke-dasharray=\"3,2\"/>\n";
    }
    out << "  <polyline points=\"";
    for (size_t k = 0; k < line.members.size(); ++k) {
      const auto [cx, cy] = center(line.members[k]);
      if (k > 0) out << " ";
      out << num(cx) << "," << num(cy);
    }
    out << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    for (int m : line.members) {
      const auto [cx, cy] = center(m);
      out << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"2\" fill=\""
          << color << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace flowline
