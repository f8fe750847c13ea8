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

#ifndef FLOWLINE_GEOMETRY_HPP_
#define FLOWLINE_GEOMETRY_HPP_

namespace flowline {

// Axis-aligned rectangle, top-left corner plus extents, in pixels.
struct Rect {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double right() const { return x + w; }
  double bottom() const { return y + h; }
  double center_x() const { return x + w / 2.0; }
  double center_y() const { return y + h / 2.0; }

  bool operator==(const Rect&) const = default;
};

double area(const Rect& r);
double intersection_area(const Rect& a, const Rect& b);

// Intersection over union. Degenerate (zero-area) inputs yield 0.
double iou(const Rect& a, const Rect& b);

}  // namespace flowline

#endif  // FLOWLINE_GEOMETRY_HPP_
