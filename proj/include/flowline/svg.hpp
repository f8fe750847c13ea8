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

#ifndef FLOWLINE_SVG_HPP_
#define FLOWLINE_SVG_HPP_

#include <string>
#include <vector>

#include "flowline/model.hpp"

namespace flowline {

// Renders candidate boxes plus, per detected line, its bounding box
// and one polyline through the member centers (dots at the centers).
// Word sub-boxes are drawn dashed when present.
std::string render_svg(const Scene& scene, const std::vector<TextLine>& lines);

}  // namespace flowline

#endif  // FLOWLINE_SVG_HPP_
