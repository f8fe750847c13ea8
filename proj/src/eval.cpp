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

#include "flowline/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>
#include <vector>

namespace flowline {

namespace {

double harmonic(double p, double r) {
  if (p + r <= 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

ImageScore finalize(double matches_det, double matches_truth, size_t n_det, size_t n_truth) {
  ImageScore s;
  s.precision = n_det == 0 ? 1.0 : matches_det / static_cast<double>(n_det);
  s.recall = n_truth == 0 ? 1.0 : matches_truth / static_cast<double>(n_truth);
  s.f_score = harmonic(s.precision, s.recall);
  return s;
}

ImageScore score_one_to_one(const std::vector<Rect>& detections, const GroundTruth& truth,
                            double match_threshold) {
  struct Pair {
    double overlap;
    int det;
    int gt;
  };
  std::vector<Pair> pairs;
  for (size_t d = 0; d < detections.size(); ++d) {
    for (size_t g = 0; g < truth.boxes.size(); ++g) {
      const double overlap = iou(detections[d], truth.boxes[g]);
      if (overlap > match_threshold) {
        pairs.push_back({overlap, static_cast<int>(d), static_cast<int>(g)});
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    return std::tuple(-a.overlap, a.det, a.gt) < std::tuple(-b.overlap, b.det, b.gt);
  });

  std::vector<bool> det_used(detections.size(), false);
  std::vector<bool> gt_used(truth.boxes.size(), false);
  int matches = 0;
  for (const Pair& p : pairs) {
    if (det_used[p.det] || gt_used[p.gt]) continue;
    det_used[p.det] = true;
    gt_used[p.gt] = true;
    ++matches;
  }
  return finalize(matches, matches, detections.size(), truth.boxes.size());
}

ImageScore score_wolf_jolion(const std::vector<Rect>& detections, const GroundTruth& truth,
                             double t_r, double t_p, double scatter) {
  const size_t ng = truth.boxes.size();
  const size_t nd = detections.size();
  std::vector<std::vector<double>> sigma(ng, std::vector<double>(nd, 0.0));
  std::vector<std::vector<double>> tau(ng, std::vector<double>(nd, 0.0));
  for (size_t i = 0; i < ng; ++i) {
    for (size_t j = 0; j < nd; ++j) {
      const double inter = intersection_area(truth.boxes[i], detections[j]);
      const double ag = area(truth.boxes[i]);
      const double ad = area(detections[j]);
      sigma[i][j] = ag > 0.0 ? inter / ag : 0.0;
      tau[i][j] = ad > 0.0 ? inter / ad : 0.0;
    }
  }

  // Per-row / per-column counts of entries above their threshold, used
  // to require exclusivity for a full-credit one-to-one match.
  std::vector<int> row_sigma(ng, 0), row_tau(ng, 0), col_sigma(nd, 0), col_tau(nd, 0);
  for (size_t i = 0; i < ng; ++i) {
    for (size_t j = 0; j < nd; ++j) {
      if (sigma[i][j] > t_r) {
        ++row_sigma[i];
        ++col_sigma[j];
      }
      if (tau[i][j] > t_p) {
        ++row_tau[i];
        ++col_tau[j];
      }
    }
  }

  auto one_to_one = [&](size_t i, size_t j) {
    return sigma[i][j] > t_r && tau[i][j] > t_p && row_sigma[i] == 1 && row_tau[i] == 1 &&
           col_sigma[j] == 1 && col_tau[j] == 1;
  };
  // Summed coverage of truth i by the detections that individually
  // clear the precision threshold.
  auto split_covers = [&](size_t i) {
    double total = 0.0;
    for (size_t j = 0; j < nd; ++j) {
      if (tau[i][j] > t_p) total += sigma[i][j];
    }
    return total > t_r;
  };
  // Summed precision of detection j over the truths it individually
  // covers well.
  auto merge_covers = [&](size_t j) {
    double total = 0.0;
    for (size_t i = 0; i < ng; ++i) {
      if (sigma[i][j] > t_r) total += tau[i][j];
    }
    return total > t_p;
  };

  double matched_truth = 0.0;
  for (size_t i = 0; i < ng; ++i) {
    double credit = 0.0;
    for (size_t j = 0; j < nd && credit < 1.0; ++j) {
      if (one_to_one(i, j)) credit = 1.0;
    }
    if (credit < scatter && split_covers(i)) credit = scatter;
    if (credit < scatter) {
      for (size_t j = 0; j < nd; ++j) {
        if (sigma[i][j] > t_r && merge_covers(j)) {
          credit = scatter;
          break;
        }
      }
    }
    matched_truth += credit;
  }

  double matched_det = 0.0;
  for (size_t j = 0; j < nd; ++j) {
    double credit = 0.0;
    for (size_t i = 0; i < ng && credit < 1.0; ++i) {
      if (one_to_one(i, j)) credit = 1.0;
    }
    if (credit < scatter && merge_covers(j)) credit = scatter;
    if (credit < scatter) {
      for (size_t i = 0; i < ng; ++i) {
        if (tau[i][j] > t_p && split_covers(i)) {
          credit = scatter;
          break;
        }
      }
    }
    matched_det += credit;
  }

  return finalize(matched_det, matched_truth, nd, ng);
}

EvalReport single_image(ImageScore s, Protocol protocol) {
  EvalReport report;
  report.protocol = protocol;
  report.precision = s.precision;
  report.recall = s.recall;
  report.f_score = s.f_score;
  report.per_image = {s};
  return report;
}

}  // namespace

EvalReport eval_one_to_one(const std::vector<Rect>& detections, const GroundTruth& truth,
                           double match_threshold) {
  return single_image(score_one_to_one(detections, truth, match_threshold),
                      Protocol::one_to_one);
}

EvalReport eval_wolf_jolion(const std::vector<Rect>& detections, const GroundTruth& truth,
                            double t_r, double t_p, double scatter) {
  return single_image(score_wolf_jolion(detections, truth, t_r, t_p, scatter),
                      Protocol::wolf_jolion);
}

EvalReport eval_images(const std::vector<ImagePair>& images, Protocol protocol,
                       double match_threshold, const WolfJolionParams& wj) {
  EvalReport report;
  report.protocol = protocol;
  for (const auto& img : images) {
    const ImageScore s =
        protocol == Protocol::one_to_one
            ? score_one_to_one(img.detections, img.truth, match_threshold)
            : score_wolf_jolion(img.detections, img.truth, wj.t_r, wj.t_p, wj.scatter);
    report.per_image.push_back(s);
  }
  if (!report.per_image.empty()) {
    double p = 0.0, r = 0.0;
    for (const auto& s : report.per_image) {
      p += s.precision;
      r += s.recall;
    }
    report.precision = p / static_cast<double>(report.per_image.size());
    report.recall = r / static_cast<double>(report.per_image.size());
  } else {
    report.precision = 1.0;
    report.recall = 1.0;
  }
  report.f_score = harmonic(report.precision, report.recall);
  return report;
}

const char* protocol_name(Protocol p) {
  return p == Protocol::one_to_one ? "one_to_one" : "wolf_jolion";
}

std::string format_report_table(const EvalReport& report) {
  std::ostringstream out;
  char row[128];
  std::snprintf(row, sizeof(row), "%-12s %8s %10s %8s\n", "image", "Recall", "Precision",
                "F-score");
  out << "protocol: " << protocol_name(report.protocol) << "\n" << row;
  for (size_t i = 0; i < report.per_image.size(); ++i) {
    std::snprintf(row, sizeof(row), "%-12zu %8.4f %10.4f %8.4f\n", i, report.per_image[i].recall,
                  report.per_image[i].precision, report.per_image[i].f_score);
    out << row;
  }
  std::snprintf(row, sizeof(row), "%-12s %8.4f %10.4f %8.4f\n", "all", report.recall,
                report.precision, report.f_score);
  out << row;
  return out.str();
}

}  // namespace flowline
