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

#ifndef FLOWLINE_EVAL_HPP_
#define FLOWLINE_EVAL_HPP_

#include <string>
#include <vector>

#include "flowline/geometry.hpp"

namespace flowline {

enum class Granularity { line, word };

struct GroundTruth {
  std::vector<Rect> boxes;  // may be non-square
  Granularity granularity = Granularity::line;
};

enum class Protocol { one_to_one, wolf_jolion };

struct ImageScore {
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
};

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
  Protocol protocol = Protocol::one_to_one;
  std::vector<ImageScore> per_image;
};

// Greedy one-to-one assignment by descending IoU; a pair matches when
// IoU > match_threshold. precision = matches/|detections|,
// recall = matches/|truth|; an empty denominator scores 1 (vacuous).
EvalReport eval_one_to_one(const std::vector<Rect>& detections, const GroundTruth& truth,
                           double match_threshold = 0.5);

// Coverage-matrix protocol crediting one-to-one matches with 1 and
// one-to-many / many-to-one groupings with `scatter`, using the recall
// matrix sigma_ij = A(G_i & D_j)/A(G_i) against t_r and the precision
// matrix tau_ij = A(G_i & D_j)/A(D_j) against t_p:
//   - (i, j) is one-to-one when sigma_ij > t_r, tau_ij > t_p, and both
//     row i and column j contain no other entry above its threshold;
//   - G_i is split across the detections with tau_ij > t_p when their
//     summed sigma clears t_r;
//   - D_j merges the truths with sigma_ij > t_r when their summed tau
//     clears t_p.
// Each side scores the best applicable rule.
EvalReport eval_wolf_jolion(const std::vector<Rect>& detections, const GroundTruth& truth,
                            double t_r = 0.8, double t_p = 0.4, double scatter = 0.8);

struct ImagePair {
  std::vector<Rect> detections;
  GroundTruth truth;
};

struct WolfJolionParams {
  double t_r = 0.8;
  double t_p = 0.4;
  double scatter = 0.8;
};

// Macro-average over images: precision/recall are arithmetic means of
// the per-image values, f_score their harmonic mean.
EvalReport eval_images(const std::vector<ImagePair>& images, Protocol protocol,
                       double match_threshold = 0.5, const WolfJolionParams& wj = {});

// Aligned plain-text table, one row per image plus the aggregate.
std::string format_report_table(const EvalReport& report);

const char* protocol_name(Protocol p);

}  // namespace flowline

#endif  // FLOWLINE_EVAL_HPP_
