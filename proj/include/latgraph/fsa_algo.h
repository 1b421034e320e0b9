// include/latgraph/fsa_algo.h

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

#ifndef LATGRAPH_FSA_ALGO_H_
#define LATGRAPH_FSA_ALGO_H_

#include <cstdint>
#include <span>
#include <vector>

#include "latgraph/fsa.h"

namespace latgraph {

// Linear label graph: |labels|+2 states accepting exactly the given token
// sequence followed by the -1 final arc.  Identity transduction, all scores
// zero.  Throws EmptyLabelsError / LabelOutOfRangeError (labels must be
// positive).
Fsa LinearFsa(std::span<const Label> labels);

struct ComposedFsa {
  Fsa fsa;
  // Per result arc, the index of the originating arc in h, resp. in l.
  // l_arc_map is -1 on arcs created by an epsilon-output h arc that advanced
  // only the h side.
  std::vector<int32_t> h_arc_map;
  std::vector<int32_t> l_arc_map;
};

// FST composition specialized to an l that is epsilon-free on its input
// side (linear label graphs): an h arc with epsilon output advances only
// the h side, matching labels advance both, scores add, and the binary
// emit attribute of the result arc is copied from the h arc.  Finality is
// paired: a composed state gets a -1 arc iff both sides have one.  The
// result is trimmed (and topologically sorted when acyclic; H o L keeps its
// self-loops).  An empty intersection yields an empty Fsa, not an error.
// Throws AlphabetMismatchError if l carries epsilon/blank input labels.
ComposedFsa Compose(const Fsa& h, const Fsa& l);

struct TrimmedFsa {
  Fsa fsa;
  std::vector<int32_t> arc_map;  // per result arc, arc index in the input
};

// Removes states that are not on a start->final path and, when the result
// is acyclic, renumbers states topologically (start first, final last).
// The renumbering is a fixpoint: a second call returns an identical Fsa.
// Scores, attributes and the accepted language are unchanged.  An input
// with no accepting path yields the empty Fsa.
TrimmedFsa TrimAndSort(const Fsa& fsa);

// Time-synchronous intersection of a CTC graph with a dense acceptor: an
// arc with in_label k taken at frame t scores arc.score + logprobs(t, k)
// and records frame t; -1 arcs are taken after the last frame with the
// graph's final-arc score.  Arcs whose dense score is -inf are dropped.
// The result is trimmed and topologically sorted.  Throws NoValidPathError
// when no accepting path survives and LabelOutOfRangeError when the graph
// uses in_labels outside [0, V].
Lattice IntersectDense(const Fsa& graph, const DenseFsa& dense);

// Number of accepting paths of a topologically sorted acyclic Fsa,
// saturating at UINT64_MAX.  Throws Error if arcs do not satisfy
// src < dst.
uint64_t CountAcceptingPaths(const Fsa& fsa);

}  // namespace latgraph

#endif  // LATGRAPH_FSA_ALGO_H_
