// include/latgraph/scoring.h

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

#ifndef LATGRAPH_SCORING_H_
#define LATGRAPH_SCORING_H_

#include <vector>

#include <Eigen/Dense>

#include "latgraph/fsa.h"

namespace latgraph {

struct ScoreResult {
  double total = 0.0;        // log-semiring total score, alpha(final)
  Eigen::VectorXd forward;   // alpha per state
  Eigen::VectorXd backward;  // beta per state
};

// Forward/backward over a topologically sorted acyclic lattice in the log
// semiring, double accumulation throughout.  Throws EmptyLatticeError.
ScoreResult TotalScore(const Lattice& lat);

struct PosteriorResult {
  // gamma(arc) = exp(alpha(src) + score + beta(dst) - total); the
  // probability that a path drawn under the lattice weights uses the arc.
  std::vector<double> arc_posterior;
};

PosteriorResult ArcPosteriors(const Lattice& lat, const ScoreResult& s);

// d total / d logprobs: grad(t, k) = sum of gamma over arcs at frame t with
// in_label k.  Throws MissingFrameInfoError if the lattice lacks per-arc
// frame annotations.
Eigen::MatrixXd GradWrtLogprobs(const Lattice& lat, const PosteriorResult& p,
                                Eigen::Index num_frames,
                                Eigen::Index vocab_plus_blank);

// Copies posteriors into the lattice's optional grad_slot cache.  Nothing in
// the library reads the cache back.
void CachePosteriors(Lattice* lat, const PosteriorResult& p);

}  // namespace latgraph

#endif  // LATGRAPH_SCORING_H_
