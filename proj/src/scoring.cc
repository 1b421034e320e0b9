// src/scoring.cc

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

#include "latgraph/scoring.h"

#include <cmath>
#include <string>

#include "latgraph/error.h"
#include "latgraph/math_util.h"

namespace latgraph {

namespace {

void CheckScorable(const Lattice& lat) {
  if (lat.fsa.Empty()) throw EmptyLatticeError("lattice is empty");
  for (const Arc& a : lat.fsa.arcs)
    if (a.dst_state <= a.src_state)
      throw Error("lattice is not topologically sorted");
}

}  // namespace

ScoreResult TotalScore(const Lattice& lat) {
  CheckScorable(lat);
  const Fsa& fsa = lat.fsa;

  ScoreResult r;
  r.forward = Eigen::VectorXd::Constant(fsa.num_states, kNegInf);
  r.backward = Eigen::VectorXd::Constant(fsa.num_states, kNegInf);

  r.forward(Fsa::kStartState) = 0.0;
  for (const Arc& a : fsa.arcs) {
    r.forward(a.dst_state) =
        LogAdd(r.forward(a.dst_state), r.forward(a.src_state) + a.score);
  }
  r.backward(fsa.final_state) = 0.0;
  for (auto it = fsa.arcs.rbegin(); it != fsa.arcs.rend(); ++it) {
    r.backward(it->src_state) = LogAdd(
        r.backward(it->src_state), r.backward(it->dst_state) + it->score);
  }
  r.total = r.forward(fsa.final_state);
  return r;
}

PosteriorResult ArcPosteriors(const Lattice& lat, const ScoreResult& s) {
  const Fsa& fsa = lat.fsa;
  PosteriorResult p;
  p.arc_posterior.reserve(fsa.arcs.size());
  for (const Arc& a : fsa.arcs) {
    double num = s.forward(a.src_state) + a.score + s.backward(a.dst_state);
    p.arc_posterior.push_back(num == kNegInf ? 0.0
                                             : std::exp(num - s.total));
  }
  return p;
}

Eigen::MatrixXd GradWrtLogprobs(const Lattice& lat, const PosteriorResult& p,
                                Eigen::Index num_frames,
                                Eigen::Index vocab_plus_blank) {
  if (lat.frame_of_arc.size() != lat.fsa.arcs.size() ||
      lat.token_of_arc.size() != lat.fsa.arcs.size())
    throw MissingFrameInfoError(
        "lattice lacks per-arc frame/token annotations");
  Eigen::MatrixXd grad =
      Eigen::MatrixXd::Zero(num_frames, vocab_plus_blank);
  for (size_t i = 0; i < lat.fsa.arcs.size(); ++i) {
    Label k = lat.token_of_arc[i];
    if (k == kFinalLabel) continue;  // final arcs carry no dense score
    int32_t t = lat.frame_of_arc[i];
    if (t < 0 || t >= num_frames || k >= vocab_plus_blank)
      throw MissingFrameInfoError("arc annotation (t=" + std::to_string(t) +
                                  ", k=" + std::to_string(k) +
                                  ") outside the dense matrix");
    grad(t, k) += p.arc_posterior[i];
  }
  return grad;
}

void CachePosteriors(Lattice* lat, const PosteriorResult& p) {
  lat->grad_slot = p.arc_posterior;
}

}  // namespace latgraph
