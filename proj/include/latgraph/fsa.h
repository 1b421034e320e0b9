// include/latgraph/fsa.h

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

#ifndef LATGRAPH_FSA_H_
#define LATGRAPH_FSA_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace latgraph {

using StateId = int32_t;
using Label = int32_t;

// Label conventions: -1 marks arcs entering the final state, 0 is the blank
// on the input side and epsilon on the output side, tokens are 1..V.
inline constexpr Label kFinalLabel = -1;
inline constexpr Label kBlank = 0;
inline constexpr Label kEpsilon = 0;

struct Arc {
  StateId src_state = 0;
  StateId dst_state = 0;
  Label in_label = 0;
  Label out_label = 0;
  double score = 0.0;   // natural-log units
  int8_t emit_attr = 0; // 1 iff the originating topology arc had a
                        // non-epsilon output label

  friend bool operator==(const Arc&, const Arc&) = default;
};

// A weighted FST with a single start state (always 0) and a single final
// state entered only by -1 arcs.  Arcs are stored grouped by src_state and,
// within a group, ordered by in_label with -1 sorting last; the ordering is
// a total order over all arc fields, so identical arc multisets always
// produce bit-identical storage.  Immutable after construction.
struct Fsa {
  static constexpr StateId kStartState = 0;

  StateId num_states = 0;
  StateId final_state = -1;  // -1 iff the Fsa is empty
  std::vector<Arc> arcs;
  std::vector<int32_t> arc_offsets;  // CSR offsets; size num_states + 1

  bool Empty() const { return num_states == 0; }
  int32_t NumArcs() const { return static_cast<int32_t>(arcs.size()); }
  std::span<const Arc> ArcsOf(StateId s) const {
    return {arcs.data() + arc_offsets[s],
            arcs.data() + arc_offsets[s + 1]};
  }

  friend bool operator==(const Fsa&, const Fsa&) = default;
};

// Validates and normalizes an arc list into an Fsa.  The final state is
// derived from the -1 arcs; there must be exactly one unless the Fsa is
// empty (num_states == 0, no arcs).  Throws InvalidArcError on out-of-range
// state indices, arcs leaving the final state, non-(-1) arcs entering it,
// -1 arcs not entering it, duplicate final states, NaN scores, or emit_attr
// outside {0, 1}.
//
// If sorted_from is non-null it receives, per output arc, the index of that
// arc in the input vector.
Fsa MakeFsa(StateId num_states, std::vector<Arc> arcs,
            std::vector<int32_t>* sorted_from = nullptr);

// A T x (V+1) matrix of acoustic log-probabilities viewed as a linear,
// time-synchronous acceptor.  Column 0 is the blank.
struct DenseFsa {
  Eigen::MatrixXd logprobs;

  Eigen::Index NumFrames() const { return logprobs.rows(); }
  Eigen::Index VocabPlusBlank() const { return logprobs.cols(); }
};

enum class RowCheck {
  kNone,    // only shape / finiteness / all(-inf) validation
  kStrict,  // additionally require |logsumexp(row)| <= 1e-3 per row
};

// Throws BadShapeError (empty matrix, fewer than two columns, NaN or +inf
// entries, or unnormalized rows under kStrict) and AllNegInfRowError.
DenseFsa MakeDenseFsa(Eigen::MatrixXd logprobs,
                      RowCheck check = RowCheck::kNone);

// The result of intersecting a CTC graph with a DenseFsa: an acyclic,
// topologically sorted Fsa whose every accepting path has exactly
// num_frames + 1 arcs.  Per-arc annotations ride along under the same
// ordering as fsa.arcs.
struct Lattice {
  Fsa fsa;
  int32_t num_frames = 0;       // T
  int32_t vocab_plus_blank = 0; // V+1

  std::vector<int32_t> frame_of_arc;  // t in [0, T]; T on the final arc
  std::vector<int8_t> emit_of_arc;    // binary attribute propagated from H
  std::vector<Label> token_of_arc;    // in_label; -1 on the final arc
  std::vector<int32_t> source_arc;    // arc index in the intersected graph

  // Optional per-arc posterior cache; empty unless a caller fills it via
  // CachePosteriors().  Scoring never reads it.
  std::vector<double> grad_slot;
};

}  // namespace latgraph

#endif  // LATGRAPH_FSA_H_
