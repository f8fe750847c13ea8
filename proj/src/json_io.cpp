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

#include "flowline/json_io.hpp"

#include <fstream>
#include <initializer_list>
#include <string>

#include "flowline/errors.hpp"

namespace flowline {

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& j, std::initializer_list<const char*> known,
                           const char* context) {
  if (!j.is_object()) {
    throw ValidationError(std::string(context) + ": expected a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    bool found = false;
    for (const char* k : known) {
      if (key == k) found = true;
    }
    if (!found) {
      throw ValidationError(std::string("unknown field \"") + key + "\" in " + context);
    }
  }
}

const json& require(const json& j, const char* field, const char* context) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw ValidationError(std::string("missing field \"") + field + "\" in " + context);
  }
  return *it;
}

double as_number(const json& j, const char* field, const char* context) {
  const json& v = require(j, field, context);
  if (!v.is_number()) {
    throw ValidationError(std::string("field \"") + field + "\" in " + context +
                          " must be a number");
  }
  return v.get<double>();
}

json rect_to_json(const Rect& r) {
  return json{{"x", r.x}, {"y", r.y}, {"w", r.w}, {"h", r.h}};
}

Rect rect_from_json(const json& j, const char* context) {
  reject_unknown_fields(j, {"x", "y", "w", "h"}, context);
  return Rect{as_number(j, "x", context), as_number(j, "y", context),
              as_number(j, "w", context), as_number(j, "h", context)};
}

Range range_from_json(const json& j, const char* field, const char* context) {
  const json& v = require(j, field, context);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ValidationError(std::string("field \"") + field + "\" in " + context +
                          " must be [lo, hi]");
  }
  return Range{v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

json scene_to_json(const Scene& scene) {
  json candidates = json::array();
  for (const auto& c : scene.candidates) {
    candidates.push_back(json{
        {"id", c.id}, {"x", c.x}, {"y", c.y}, {"w", c.w}, {"confidence", c.confidence}});
  }
  json j{{"image_width", scene.image_width},
         {"image_height", scene.image_height},
         {"candidates", std::move(candidates)}};
  if (scene.raster) {
    j["raster"] = json{
        {"rows", scene.raster->rows}, {"cols", scene.raster->cols},
        {"values", scene.raster->values}};
  }
  if (!scene.profiles.empty()) {
    json profiles = json::object();
    for (const auto& [index, values] : scene.profiles) {
      profiles[std::to_string(index)] = values;
    }
    j["profiles"] = std::move(profiles);
  }
  return j;
}

Scene scene_from_json(const json& j) {
  reject_unknown_fields(
      j, {"image_width", "image_height", "candidates", "raster", "profiles"}, "scene");
  Scene scene;
  if (j.contains("image_width")) scene.image_width = as_number(j, "image_width", "scene");
  if (j.contains("image_height")) scene.image_height = as_number(j, "image_height", "scene");
  const json& candidates = require(j, "candidates", "scene");
  if (!candidates.is_array()) throw ValidationError("\"candidates\" must be an array");
  for (const auto& c : candidates) {
    reject_unknown_fields(c, {"id", "x", "y", "w", "confidence"}, "candidate");
    scene.candidates.emplace_back(static_cast<int>(as_number(c, "id", "candidate")),
                                  as_number(c, "x", "candidate"), as_number(c, "y", "candidate"),
                                  as_number(c, "w", "candidate"),
                                  as_number(c, "confidence", "candidate"));
  }
  if (j.contains("raster")) {
    const json& r = j["raster"];
    reject_unknown_fields(r, {"rows", "cols", "values"}, "raster");
    Raster raster;
    raster.rows = static_cast<int>(as_number(r, "rows", "raster"));
    raster.cols = static_cast<int>(as_number(r, "cols", "raster"));
    const json& values = require(r, "values", "raster");
    if (!values.is_array()) throw ValidationError("raster \"values\" must be an array");
    raster.values.reserve(values.size());
    for (const auto& v : values) raster.values.push_back(v.get<double>());
    scene.raster = std::move(raster);
  }
  if (j.contains("profiles")) {
    const json& profiles = j["profiles"];
    if (!profiles.is_object()) throw ValidationError("\"profiles\" must be an object");
    for (const auto& [key, values] : profiles.items()) {
      int index = 0;
      try {
        index = std::stoi(key);
      } catch (const std::exception&) {
        throw ValidationError("profile key \"" + key + "\" is not a line index");
      }
      if (!values.is_array()) throw ValidationError("profile values must be an array");
      std::vector<double> profile;
      profile.reserve(values.size());
      for (const auto& v : values) profile.push_back(v.get<double>());
      scene.profiles[index] = std::move(profile);
    }
  }
  validate_scene(scene);
  return scene;
}

json params_to_json(const Params& params) {
  return json{{"t_h", params.t_h},
              {"t_v", params.t_v},
              {"t_s", params.t_s},
              {"alpha", params.alpha},
              {"beta", params.beta},
              {"overlap_delete", params.overlap_delete},
              {"cost_scale", params.cost_scale},
              {"entry_cost_mode", params.entry_cost_mode == EntryCostMode::literal
                                      ? "literal"
                                      : "confidence_max"}};
}

Params params_from_json(const json& j, const Params& base) {
  reject_unknown_fields(j,
                        {"t_h", "t_v", "t_s", "alpha", "beta", "overlap_delete", "cost_scale",
                         "entry_cost_mode"},
                        "params");
  Params p = base;
  if (j.contains("t_h")) p.t_h = as_number(j, "t_h", "params");
  if (j.contains("t_v")) p.t_v = as_number(j, "t_v", "params");
  if (j.contains("t_s")) p.t_s = as_number(j, "t_s", "params");
  if (j.contains("alpha")) p.alpha = as_number(j, "alpha", "params");
  if (j.contains("beta")) p.beta = as_number(j, "beta", "params");
  if (j.contains("overlap_delete")) p.overlap_delete = as_number(j, "overlap_delete", "params");
  if (j.contains("cost_scale")) {
    p.cost_scale = j["cost_scale"].get<std::int64_t>();
  }
  if (j.contains("entry_cost_mode")) {
    const std::string mode = j["entry_cost_mode"].get<std::string>();
    if (mode == "literal") {
      p.entry_cost_mode = EntryCostMode::literal;
    } else if (mode == "confidence_max") {
      p.entry_cost_mode = EntryCostMode::confidence_max;
    } else {
      throw ValidationError("entry_cost_mode must be \"literal\" or \"confidence_max\"");
    }
  }
  p.validate();
  return p;
}

json truth_to_json(const std::vector<TruthImage>& images) {
  json arr = json::array();
  for (const auto& img : images) {
    json boxes = json::array();
    for (const auto& b : img.truth.boxes) boxes.push_back(rect_to_json(b));
    arr.push_back(json{{"id", img.id},
                       {"granularity",
                        img.truth.granularity == Granularity::line ? "line" : "word"},
                       {"boxes", std::move(boxes)}});
  }
  return json{{"images", std::move(arr)}};
}

std::vector<TruthImage> truth_from_json(const json& j) {
  reject_unknown_fields(j, {"images"}, "truth");
  const json& images = require(j, "images", "truth");
  if (!images.is_array()) throw ValidationError("\"images\" must be an array");
  std::vector<TruthImage> result;
  for (const auto& img : images) {
    reject_unknown_fields(img, {"id", "granularity", "boxes"}, "truth image");
    TruthImage t;
    t.id = static_cast<int>(as_number(img, "id", "truth image"));
    const std::string g = require(img, "granularity", "truth image").get<std::string>();
    if (g == "line") {
      t.truth.granularity = Granularity::line;
    } else if (g == "word") {
      t.truth.granularity = Granularity::word;
    } else {
      throw ValidationError("granularity must be \"line\" or \"word\"");
    }
    const json& boxes = require(img, "boxes", "truth image");
    if (!boxes.is_array()) throw ValidationError("truth \"boxes\" must be an array");
    for (const auto& b : boxes) {
      const Rect rect = rect_from_json(b, "truth box");
      if (!(rect.w > 0.0 && rect.h > 0.0)) {
        throw ValidationError("truth boxes must have positive area");
      }
      t.truth.boxes.push_back(rect);
    }
    result.push_back(std::move(t));
  }
  return result;
}

json detections_to_json(const std::vector<TextLine>& lines) {
  json arr = json::array();
  for (const auto& line : lines) {
    json entry{{"box", rect_to_json(line.box)},
               {"members", line.members},
               {"cost", line.cost}};
    if (!line.words.empty()) {
      json words = json::array();
      for (const auto& w : line.words) words.push_back(rect_to_json(w));
      entry["words"] = std::move(words);
    }
    arr.push_back(std::move(entry));
  }
  return json{{"lines", std::move(arr)}};
}

std::vector<TextLine> detections_from_json(const json& j) {
  reject_unknown_fields(j, {"lines"}, "detections");
  const json& lines = require(j, "lines", "detections");
  if (!lines.is_array()) throw ValidationError("\"lines\" must be an array");
  std::vector<TextLine> result;
  for (const auto& entry : lines) {
    reject_unknown_fields(entry, {"box", "members", "cost", "words"}, "detection line");
    TextLine line;
    line.box = rect_from_json(require(entry, "box", "detection line"), "line box");
    const json& members = require(entry, "members", "detection line");
    if (!members.is_array()) throw ValidationError("\"members\" must be an array");
    for (const auto& m : members) line.members.push_back(m.get<int>());
    line.cost = as_number(entry, "cost", "detection line");
    if (entry.contains("words")) {
      for (const auto& w : entry["words"]) {
        line.words.push_back(rect_from_json(w, "word box"));
      }
    }
    result.push_back(std::move(line));
  }
  return result;
}

json report_to_json(const EvalReport& report) {
  json per_image = json::array();
  for (const auto& s : report.per_image) {
    per_image.push_back(json{
        {"precision", s.precision}, {"recall", s.recall}, {"f_score", s.f_score}});
  }
  return json{{"protocol", protocol_name(report.protocol)},
              {"precision", report.precision},
              {"recall", report.recall},
              {"f_score", report.f_score},
              {"per_image", std::move(per_image)}};
}

json synth_config_to_json(const SynthConfig& c) {
  return json{{"seed", c.seed},
              {"num_lines", c.num_lines},
              {"chars_per_line", {c.chars_per_line.lo, c.chars_per_line.hi}},
              {"char_size", {c.char_size.lo, c.char_size.hi}},
              {"gap_ratio", {c.gap_ratio.lo, c.gap_ratio.hi}},
              {"size_jitter", c.size_jitter},
              {"y_jitter", c.y_jitter},
              {"text_conf", {c.text_conf.lo, c.text_conf.hi}},
              {"noise_count", c.noise_count},
              {"noise_conf", {c.noise_conf.lo, c.noise_conf.hi}},
              {"noise_size", {c.noise_size.lo, c.noise_size.hi}},
              {"canvas", {c.canvas_width, c.canvas_height}},
              {"emit_raster", c.emit_raster}};
}

SynthConfig synth_config_from_json(const json& j) {
  reject_unknown_fields(j,
                        {"seed", "num_lines", "chars_per_line", "char_size", "gap_ratio",
                         "size_jitter", "y_jitter", "text_conf", "noise_count", "noise_conf",
                         "noise_size", "canvas", "emit_raster"},
                        "synth config");
  SynthConfig c;
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("num_lines")) c.num_lines = static_cast<int>(as_number(j, "num_lines", "synth config"));
  if (j.contains("chars_per_line")) {
    const Range r = range_from_json(j, "chars_per_line", "synth config");
    c.chars_per_line = IntRange{static_cast<int>(r.lo), static_cast<int>(r.hi)};
  }
  if (j.contains("char_size")) c.char_size = range_from_json(j, "char_size", "synth config");
  if (j.contains("gap_ratio")) c.gap_ratio = range_from_json(j, "gap_ratio", "synth config");
  if (j.contains("size_jitter")) c.size_jitter = as_number(j, "size_jitter", "synth config");
  if (j.contains("y_jitter")) c.y_jitter = as_number(j, "y_jitter", "synth config");
  if (j.contains("text_conf")) c.text_conf = range_from_json(j, "text_conf", "synth config");
  if (j.contains("noise_count")) {
    c.noise_count = static_cast<int>(as_number(j, "noise_count", "synth config"));
  }
  if (j.contains("noise_conf")) c.noise_conf = range_from_json(j, "noise_conf", "synth config");
  if (j.contains("noise_size")) c.noise_size = range_from_json(j, "noise_size", "synth config");
  if (j.contains("canvas")) {
    const Range r = range_from_json(j, "canvas", "synth config");
    c.canvas_width = r.lo;
    c.canvas_height = r.hi;
  }
  if (j.contains("emit_raster")) c.emit_raster = j["emit_raster"].get<bool>();
  c.validate();
  return c;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace flowline
