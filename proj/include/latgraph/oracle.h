// include/latgraph/oracle.h

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

#ifndef LATGRAPH_ORACLE_H_
#define LATGRAPH_ORACLE_H_

// Brute-force reference implementations, by definition and without any of
// the graph machinery.  Everything here trades speed for being obviously
// correct; instance sizes are capped accordingly.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "latgraph/fsa.h"

namespace latgraph {

// One alignment pi of length T together with the quantities the scoring
// pipeline is supposed to reproduce.
struct AlignmentPath {
  std::vector<Label> pi;                   // length T, symbols in {0..V}
  double score = 0.0;                      // s_pi = sum_t logprobs(t, pi_t)
  std::vector<int32_t> first_emit_frames;  // q_u, one per output token
  double delay_score = 0.0;                // d_pi = sum_u ((T-1)/2 - q_u)
};

// Exhaustively generates all (V+1)^T sequences and keeps those that collapse
// (merge contiguous repeats, drop blanks) to `labels`.  Paths carry q and d;
// scores are left at zero.  Throws InstanceTooLargeError when
// (V+1)^T > 10^6 and LabelOutOfRangeError for labels outside 1..V.
std::vector<AlignmentPath> EnumerateAlignments(int32_t num_frames,
                                               std::span<const Label> labels,
                                               int32_t vocab_size);

// All loss variants computed verbatim from the enumerated alignment set.
struct OracleLosses {
  double total = 0.0;               // log sum_pi exp(s_pi)
  double aug_exact = 0.0;           // total + lambda * expected_delay
  double aug_approx = 0.0;          // log sum_pi exp(s_pi + lambda * d_pi)
  double aug_bayes = 0.0;           // log sum_pi exp(s_pi) * exp(lambda*d_pi)
  double expected_delay = 0.0;      // sum_pi w_pi * d_pi
  double expected_delay_penalized = 0.0;  // same under weights of s+lambda*d
  std::vector<double> weights;      // w_pi = exp(s_pi) / sum exp(s_pi)
};

// Throws InstanceTooLargeError (via enumeration) and NoValidAlignmentError
// when the alignment set is empty.  Vocabulary size is logprobs.cols() - 1.
OracleLosses ComputeOracleLosses(
    const Eigen::Ref<const Eigen::MatrixXd>& logprobs,
    std::span<const Label> labels, double lambda);

// Independent alignment-count recurrence over the classical expanded label
// sequence (blank, y1, blank, ..., yU, blank).  Kept separate from both the
// enumeration above and the graph pipeline so path counts can be checked
// three ways.
uint64_t CtcAlignmentCount(int32_t num_frames, std::span<const Label> labels);

}  // namespace latgraph

#endif  // LATGRAPH_ORACLE_H_
