// include/latgraph/ctc.h

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

#ifndef LATGRAPH_CTC_H_
#define LATGRAPH_CTC_H_

#include <span>

#include <Eigen/Dense>

#include "latgraph/fsa.h"

namespace latgraph {

// Compact CTC topology over a vocabulary of size V plus the blank: state 0
// is the blank/start state and state i the state of token i.  Entering a
// token state emits the token (out_label = token, emit_attr = 1); staying on
// it or returning to the blank state emits nothing.  There is no direct arc
// between equal tokens, so repeats force an intervening blank.
struct CtcTopology {
  int32_t vocab_size = 0;
  Fsa fsa;
};

// Throws InvalidVocabSizeError for vocab_size < 1.
CtcTopology MakeCtcTopology(int32_t vocab_size);

// Shortest alignment that can realize `labels`: U plus one blank per
// adjacent equal pair.
int32_t MinAlignmentLength(std::span<const Label> labels);

// trim_and_sort(intersect(compose(H, L), U)): the lattice of all valid
// alignments of `labels` at the dense acceptor's length, with emit
// attributes locating first emissions.  Throws NoValidAlignmentError when
// no alignment exists (checked eagerly against MinAlignmentLength, and
// again if -inf dense entries starve the lattice), LabelOutOfRangeError and
// AlphabetMismatchError on vocabulary misuse.
Lattice BuildCtcLattice(const CtcTopology& topo, std::span<const Label> labels,
                        const DenseFsa& dense);

struct LossResult {
  double loss = 0.0;     // the total log-probability; higher is better
  Eigen::MatrixXd grad;  // d loss / d logprobs, same shape as the input
};

// Plain CTC: total score of the unpenalized lattice and its gradient with
// respect to the log-probabilities.  The vocabulary size is taken from the
// matrix width.
LossResult CtcLoss(const Eigen::Ref<const Eigen::MatrixXd>& logprobs,
                   std::span<const Label> labels);

}  // namespace latgraph

#endif  // LATGRAPH_CTC_H_
