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

#ifndef FLOWLINE_JSON_IO_HPP_
#define FLOWLINE_JSON_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "flowline/eval.hpp"
#include "flowline/model.hpp"
#include "flowline/synth.hpp"

// JSON (de)serialization for every file format the CLI reads or
// writes. Parsers are strict: an unknown field raises ValidationError
// naming the field, so typos in hand-written inputs fail loudly.

namespace flowline {

nlohmann::json scene_to_json(const Scene& scene);
Scene scene_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const Params& params);
// Every field is optional; absent fields keep the value from `base`.
Params params_from_json(const nlohmann::json& j, const Params& base = {});

struct TruthImage {
  int id = 0;
  GroundTruth truth;
};

nlohmann::json truth_to_json(const std::vector<TruthImage>& images);
std::vector<TruthImage> truth_from_json(const nlohmann::json& j);

nlohmann::json detections_to_json(const std::vector<TextLine>& lines);
std::vector<TextLine> detections_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const EvalReport& report);

nlohmann::json synth_config_to_json(const SynthConfig& config);
SynthConfig synth_config_from_json(const nlohmann::json& j);

// File helpers. Writers end the file with a newline; readers wrap
// parse failures in ValidationError with the byte offset.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace flowline

#endif  // FLOWLINE_JSON_IO_HPP_
