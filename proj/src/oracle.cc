// src/oracle.cc

// Copyright 2026  The latgraph authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "latgraph/oracle.h"

#include <cmath>
#include <string>

#include "latgraph/error.h"
#include "latgraph/math_util.h"

namespace latgraph {

namespace {

constexpr uint64_t kMaxSequences = 1000000;

// Collapse pi under B (merge contiguous repeats, drop blanks), recording the
// first frame of each surviving token run.
void Collapse(std::span<const Label> pi, std::vector<Label>* collapsed,
              std::vector<int32_t>* first_frames) {
  collapsed->clear();
  first_frames->clear();
  Label prev = kFinalLabel;  // sentinel unequal to every symbol
  for (int32_t t = 0; t < static_cast<int32_t>(pi.size()); ++t) {
    Label c = pi[t];
    if (c != kBlank && c != prev) {
      collapsed->push_back(c);
      first_frames->push_back(t);
    }
    prev = c;
  }
}

}  // namespace

std::vector<AlignmentPath> EnumerateAlignments(int32_t num_frames,
                                               std::span<const Label> labels,
                                               int32_t vocab_size) {
  if (num_frames < 1) throw BadShapeError("num_frames must be >= 1");
  if (vocab_size < 1) throw InvalidVocabSizeError("vocab_size must be >= 1");
  for (Label y : labels) {
    if (y < 1 || y > vocab_size)
      throw LabelOutOfRangeError("label " + std::to_string(y) +
                                 " outside 1.." + std::to_string(vocab_size));
  }
  uint64_t total = 1;
  for (int32_t t = 0; t < num_frames; ++t) {
    total *= static_cast<uint64_t>(vocab_size) + 1;
    if (total > kMaxSequences)
      throw InstanceTooLargeError(
          "(V+1)^T exceeds " + std::to_string(kMaxSequences));
  }

  const double midpoint = (num_frames - 1) / 2.0;
  std::vector<AlignmentPath> out;
  std::vector<Label> pi(num_frames, 0);
  std::vector<Label> collapsed;
  std::vector<int32_t> first_frames;
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    for (int32_t t = 0; t < num_frames; ++t) {
      pi[t] = static_cast<Label>(c % (vocab_size + 1));
      c /= vocab_size + 1;
    }
    Collapse(pi, &collapsed, &first_frames);
    if (collapsed.size() != labels.size() ||
        !std::equal(collapsed.begin(), collapsed.end(), labels.begin()))
      continue;
    AlignmentPath path;
    path.pi = pi;
    path.first_emit_frames = first_frames;
    for (int32_t q : first_frames) path.delay_score += midpoint - q;
    out.push_back(std::move(path));
  }
  return out;
}

OracleLosses ComputeOracleLosses(
    const Eigen::Ref<const Eigen::MatrixXd>& logprobs,
    std::span<const Label> labels, double lambda) {
  const auto T = static_cast<int32_t>(logprobs.rows());
  const auto vocab_size = static_cast<int32_t>(logprobs.cols()) - 1;
  std::vector<AlignmentPath> paths =
      EnumerateAlignments(T, labels, vocab_size);
  if (paths.empty())
    throw NoValidAlignmentError("no alignment of length " +
                                std::to_string(T));

  std::vector<double> scores, penalized;
  scores.reserve(paths.size());
  penalized.reserve(paths.size());
  for (AlignmentPath& p : paths) {
    p.score = 0.0;
    for (int32_t t = 0; t < T; ++t) p.score += logprobs(t, p.pi[t]);
    scores.push_back(p.score);
    penalized.push_back(p.score + lambda * p.delay_score);
  }

  OracleLosses out;
  out.total = LogSumExp(scores);
  out.aug_approx = LogSumExp(penalized);
  // Same sum with the Bayes-risk grouping exp(s) * exp(lambda d).
  {
    double sum = 0.0;
    for (const AlignmentPath& p : paths)
      sum += std::exp(p.score) * std::exp(lambda * p.delay_score);
    out.aug_bayes = std::log(sum);
  }
  out.weights.reserve(paths.size());
  double penalized_total = out.aug_approx;
  for (size_t i = 0; i < paths.size(); ++i) {
    double w = std::exp(scores[i] - out.total);
    out.weights.push_back(w);
    out.expected_delay += w * paths[i].delay_score;
    out.expected_delay_penalized +=
        std::exp(penalized[i] - penalized_total) * paths[i].delay_score;
  }
  out.aug_exact = out.total + lambda * out.expected_delay;
  return out;
}

uint64_t CtcAlignmentCount(int32_t num_frames,
                           std::span<const Label> labels) {
  if (num_frames < 1 || labels.empty()) return 0;
  // Expanded sequence blank, y1, blank, ..., yU, blank of length 2U+1.
  const auto U = static_cast<int32_t>(labels.size());
  const int32_t n = 2 * U + 1;
  auto symbol = [&](int32_t i) -> Label {
    return (i % 2 == 0) ? kBlank : labels[i / 2];
  };
  std::vector<uint64_t> dp(n, 0);
  dp[0] = 1;  // start with blank
  dp[1] = 1;  // or directly with y1
  for (int32_t t = 1; t < num_frames; ++t) {
    std::vector<uint64_t> next(n, 0);
    for (int32_t i = 0; i < n; ++i) {
      if (dp[i] == 0) continue;
      next[i] += dp[i];
      if (i + 1 < n) next[i + 1] += dp[i];
      if (i + 2 < n && symbol(i + 2) != kBlank &&
          symbol(i + 2) != symbol(i))
        next[i + 2] += dp[i];
    }
    dp.swap(next);
  }
  return dp[n - 1] + dp[n - 2];
}

}  // namespace latgraph
