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

// Command-line front end: generate synthetic scenes, extract text
// lines, evaluate detections, render SVG overlays.
//
// Exit codes: 0 success, 1 runtime failure, 2 input validation failure.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flowline/errors.hpp"
#include "flowline/json_io.hpp"
#include "flowline/lines.hpp"
#include "flowline/solver.hpp"
#include "flowline/svg.hpp"
#include "flowline/synth.hpp"
#include "flowline/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_manifest(const std::string& path, const std::string& command,
                    const flowline::Params& params, const json& inputs, const json& outputs,
                    const json& timings_ms) {
  json manifest{{"version", flowline::kVersion},
                {"command", command},
                {"params", flowline::params_to_json(params)},
                {"inputs", inputs},
                {"outputs", outputs},
                {"timings_ms", timings_ms}};
  flowline::save_json_file(path, manifest);
}

flowline::Params load_params(const std::string& path) {
  if (path.empty()) return flowline::Params{};
  return flowline::params_from_json(flowline::load_json_file(path));
}

struct ExtractOutputs {
  std::vector<flowline::TextLine> lines;
  flowline::ExtractionResult result;
};

ExtractOutputs run_extract(const flowline::Scene& scene, const flowline::Params& params) {
  ExtractOutputs out;
  out.result = flowline::extract_all(scene, params);
  int line_index = 0;
  for (const auto& path : out.result.accepted) {
    flowline::TextLine line = flowline::path_to_line(path, scene, params.cost_scale);
    if (scene.raster) {
      const auto profile = flowline::compute_profile(line, *scene.raster);
      line.words = flowline::split_words(line, profile);
    } else if (auto it = scene.profiles.find(line_index); it != scene.profiles.end()) {
      flowline::GradientProfile profile{it->second, flowline::ProfileSource::supplied};
      line.words = flowline::split_words(line, profile);
    }
    out.lines.push_back(std::move(line));
    ++line_index;
  }
  return out;
}

void extract_one(const std::string& scene_path, const std::string& out_path,
                 const flowline::Params& params, const std::string& dot_path,
                 const std::string& svg_path) {
  const auto t_load = Clock::now();
  const flowline::Scene scene = flowline::scene_from_json(flowline::load_json_file(scene_path));
  const double load_ms = ms_since(t_load);

  const auto t_extract = Clock::now();
  ExtractOutputs outputs = run_extract(scene, params);
  const double extract_ms = ms_since(t_extract);

  const auto t_write = Clock::now();
  flowline::save_json_file(out_path, flowline::detections_to_json(outputs.lines));
  json extra_outputs{{"detections", out_path}};
  if (!dot_path.empty()) {
    const auto sorted = flowline::sort_candidates(scene);
    write_text_file(dot_path, flowline::to_dot(flowline::build_network(sorted.scene, params)));
    extra_outputs["dot"] = dot_path;
  }
  if (!svg_path.empty()) {
    write_text_file(svg_path, flowline::render_svg(scene, outputs.lines));
    extra_outputs["svg"] = svg_path;
  }
  const double write_ms = ms_since(t_write);

  write_manifest(out_path + ".manifest.json", "extract", params, json{{"scene", scene_path}},
                 extra_outputs,
                 json{{"load", load_ms}, {"extract", extract_ms}, {"write", write_ms}});
}

int cmd_synth(const std::string& config_path, const std::string& out_dir, bool has_seed,
              std::uint64_t seed_override) {
  const auto t_total = Clock::now();
  flowline::SynthConfig config =
      flowline::synth_config_from_json(flowline::load_json_file(config_path));
  if (has_seed) config.seed = seed_override;

  const auto t_generate = Clock::now();
  const flowline::SynthOutput generated = flowline::generate(config);
  const double generate_ms = ms_since(t_generate);

  fs::create_directories(out_dir);
  const std::string scene_path = (fs::path(out_dir) / "scene.json").string();
  const std::string truth_path = (fs::path(out_dir) / "truth.json").string();
  flowline::save_json_file(scene_path, flowline::scene_to_json(generated.scene));
  flowline::save_json_file(truth_path,
                           flowline::truth_to_json({{0, generated.truth}}));

  json manifest{{"version", flowline::kVersion},
                {"command", "synth"},
                {"config", flowline::synth_config_to_json(config)},
                {"inputs", json{{"config", config_path}}},
                {"outputs", json{{"scene", scene_path}, {"truth", truth_path}}},
                {"timings_ms",
                 json{{"generate", generate_ms}, {"total", ms_since(t_total)}}}};
  flowline::save_json_file((fs::path(out_dir) / "manifest.json").string(), manifest);
  return 0;
}

int cmd_extract(const std::vector<std::string>& scene_paths, const std::string& params_path,
                const std::string& out_path, const std::string& out_dir,
                const std::string& dot_path, const std::string& svg_path, int jobs) {
  const flowline::Params params = load_params(params_path);
  if (scene_paths.size() == 1) {
    std::string target = out_path;
    if (target.empty()) {
      if (out_dir.empty()) throw flowline::ValidationError("extract: --out or --out-dir needed");
      fs::create_directories(out_dir);
      target =
          (fs::path(out_dir) / (fs::path(scene_paths[0]).stem().string() + ".lines.json"))
              .string();
    }
    extract_one(scene_paths[0], target, params, dot_path, svg_path);
    return 0;
  }

  // Batch mode: scenes are independent, so they run in parallel.
  if (out_dir.empty()) {
    throw flowline::ValidationError("extract: --out-dir is required with multiple scenes");
  }
  if (!dot_path.empty() || !svg_path.empty()) {
    throw flowline::ValidationError("extract: --dot/--svg need a single scene");
  }
  fs::create_directories(out_dir);
  const int workers =
      std::max(1, std::min<int>(jobs > 0 ? jobs : std::thread::hardware_concurrency(),
                                static_cast<int>(scene_paths.size())));
  std::atomic<size_t> cursor{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = cursor.fetch_add(1); i < scene_paths.size(); i = cursor.fetch_add(1)) {
        try {
          const std::string target =
              (fs::path(out_dir) / (fs::path(scene_paths[i]).stem().string() + ".lines.json"))
                  .string();
          extract_one(scene_paths[i], target, params, "", "");
        } catch (const std::exception& e) {
          std::scoped_lock lock(error_mutex);
          if (!failed.exchange(true)) first_error = e.what();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failed) throw std::runtime_error("batch extract failed: " + first_error);
  return 0;
}

std::vector<flowline::Rect> detection_boxes(const std::vector<flowline::TextLine>& lines,
                                            flowline::Granularity truth_granularity) {
  const bool have_words = std::any_of(lines.begin(), lines.end(),
                                      [](const auto& l) { return !l.words.empty(); });
  std::vector<flowline::Rect> boxes;
  if (truth_granularity == flowline::Granularity::word) {
    if (have_words) {
      for (const auto& l : lines) {
        for (const auto& w : l.words) boxes.push_back(w);
      }
      return boxes;
    }
    std::cerr << "warning: word-level truth but line-level detections; "
                 "evaluating line boxes\n";
  } else if (have_words) {
    std::cerr << "warning: word detections vs line truth; evaluating at line level\n";
  }
  for (const auto& l : lines) boxes.push_back(l.box);
  return boxes;
}

int cmd_eval(const std::vector<std::string>& detection_paths, const std::string& truth_path,
             const std::string& protocol_name, double match_threshold,
             const flowline::WolfJolionParams& wj, const std::string& out_path,
             const std::string& table_path) {
  const auto t_total = Clock::now();
  flowline::Protocol protocol;
  if (protocol_name == "one_to_one") {
    protocol = flowline::Protocol::one_to_one;
  } else if (protocol_name == "wolf_jolion") {
    protocol = flowline::Protocol::wolf_jolion;
  } else {
    throw flowline::ValidationError("--protocol must be one_to_one or wolf_jolion");
  }

  const auto truth_images = flowline::truth_from_json(flowline::load_json_file(truth_path));
  if (truth_images.size() != detection_paths.size()) {
    throw flowline::ValidationError(
        "eval: number of detection files must match truth image count");
  }

  std::vector<flowline::ImagePair> pairs;
  for (size_t i = 0; i < detection_paths.size(); ++i) {
    const auto lines =
        flowline::detections_from_json(flowline::load_json_file(detection_paths[i]));
    pairs.push_back({detection_boxes(lines, truth_images[i].truth.granularity),
                     truth_images[i].truth});
  }

  const auto report = flowline::eval_images(pairs, protocol, match_threshold, wj);
  const std::string table = flowline::format_report_table(report);
  std::cout << table;
  flowline::save_json_file(out_path, flowline::report_to_json(report));
  if (!table_path.empty()) write_text_file(table_path, table);

  json inputs{{"truth", truth_path}, {"detections", detection_paths}};
  json outputs{{"report", out_path}};
  if (!table_path.empty()) outputs["table"] = table_path;
  write_manifest(out_path + ".manifest.json", "eval", flowline::Params{}, inputs, outputs,
                 json{{"total", ms_since(t_total)}});
  return 0;
}

int cmd_render(const std::string& scene_path, const std::string& detections_path,
               const std::string& out_path) {
  const auto t_total = Clock::now();
  const flowline::Scene scene = flowline::scene_from_json(flowline::load_json_file(scene_path));
  std::vector<flowline::TextLine> lines;
  if (!detections_path.empty()) {
    lines = flowline::detections_from_json(flowline::load_json_file(detections_path));
  }
  write_text_file(out_path, flowline::render_svg(scene, lines));
  json inputs{{"scene", scene_path}};
  if (!detections_path.empty()) inputs["detections"] = detections_path;
  write_manifest(out_path + ".manifest.json", "render", flowline::Params{}, inputs,
                 json{{"svg", out_path}}, json{{"total", ms_since(t_total)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flowline: text line extraction from scored character candidates"};
  app.set_version_flag("--version", flowline::kVersion);
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "generate a synthetic scene with ground truth");
  std::string synth_config, synth_out;
  std::uint64_t synth_seed = 0;
  synth->add_option("--config", synth_config, "SynthConfig JSON file")->required();
  synth->add_option("--out", synth_out, "output directory")->required();
  auto* seed_opt = synth->add_option("--seed", synth_seed, "override the config seed");

  // extract
  auto* extract = app.add_subcommand("extract", "extract text lines from a scene");
  std::vector<std::string> extract_scenes;
  std::string extract_params, extract_out, extract_out_dir, extract_dot, extract_svg;
  int extract_jobs = 0;
  extract->add_option("--scene", extract_scenes, "scene JSON file(s)")->required();
  extract->add_option("--params", extract_params, "params JSON file (partial overrides)");
  extract->add_option("--out", extract_out, "detections output file (single scene)");
  extract->add_option("--out-dir", extract_out_dir, "output directory (batch mode)");
  extract->add_option("--dot", extract_dot, "also dump the flow network as GraphViz DOT");
  extract->add_option("--svg", extract_svg, "also render detections as SVG");
  extract->add_option("--jobs", extract_jobs, "parallel workers in batch mode");

  // eval
  auto* eval = app.add_subcommand("eval", "score detections against ground truth");
  std::vector<std::string> eval_detections;
  std::string eval_truth, eval_protocol = "one_to_one", eval_out, eval_table;
  double eval_threshold = 0.5;
  flowline::WolfJolionParams wj;
  eval->add_option("--detections", eval_detections, "detections JSON file(s)")->required();
  eval->add_option("--truth", eval_truth, "ground truth JSON file")->required();
  eval->add_option("--protocol", eval_protocol, "one_to_one | wolf_jolion");
  eval->add_option("--match-threshold", eval_threshold, "IoU threshold (one_to_one)");
  eval->add_option("--tr", wj.t_r, "recall coverage threshold (wolf_jolion)");
  eval->add_option("--tp", wj.t_p, "precision coverage threshold (wolf_jolion)");
  eval->add_option("--scatter", wj.scatter, "split/merge credit (wolf_jolion)");
  eval->add_option("--out", eval_out, "report JSON output")->required();
  eval->add_option("--table", eval_table, "also write the plain-text table here");

  // render
  auto* render = app.add_subcommand("render", "render a scene (and detections) as SVG");
  std::string render_scene, render_detections, render_out;
  render->add_option("--scene", render_scene, "scene JSON file")->required();
  render->add_option("--detections", render_detections, "detections JSON file");
  render->add_option("--out", render_out, "SVG output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (synth->parsed()) {
      return cmd_synth(synth_config, synth_out, !seed_opt->empty(), synth_seed);
    }
    if (extract->parsed()) {
      return cmd_extract(extract_scenes, extract_params, extract_out, extract_out_dir,
                         extract_dot, extract_svg, extract_jobs);
    }
    if (eval->parsed()) {
      return cmd_eval(eval_detections, eval_truth, eval_protocol, eval_threshold, wj, eval_out,
                      eval_table);
    }
    if (render->parsed()) {
      return cmd_render(render_scene, render_detections, render_out);
    }
  } catch (const flowline::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
