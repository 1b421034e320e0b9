// src/fsa.cc

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

#include "latgraph/fsa.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "latgraph/error.h"
#include "latgraph/math_util.h"

namespace latgraph {

namespace {

// Sort key: src group first, then in_label compared as unsigned so that -1
// final arcs land after all token arcs, then remaining fields to make the
// order total.
std::tuple<StateId, uint32_t, Label, StateId, double, int8_t> ArcKey(
    const Arc& a) {
  return {a.src_state, static_cast<uint32_t>(a.in_label), a.out_label,
          a.dst_state, a.score, a.emit_attr};
}

std::string ArcString(const Arc& a) {
  return "(" + std::to_string(a.src_state) + " -> " +
         std::to_string(a.dst_state) + ", in=" + std::to_string(a.in_label) +
         ", out=" + std::to_string(a.out_label) + ")";
}

}  // namespace

Fsa MakeFsa(StateId num_states, std::vector<Arc> arcs,
            std::vector<int32_t>* sorted_from) {
  if (num_states < 0) throw InvalidArcError("negative num_states");
  if (num_states == 0) {
    if (!arcs.empty())
      throw InvalidArcError("arcs present in a zero-state Fsa");
    if (sorted_from != nullptr) sorted_from->clear();
    return Fsa{0, -1, {}, {0}};
  }

  StateId final_state = -1;
  for (const Arc& a : arcs) {
    if (a.src_state < 0 || a.src_state >= num_states || a.dst_state < 0 ||
        a.dst_state >= num_states)
      throw InvalidArcError("state index out of range on arc " +
                            ArcString(a));
    if (a.in_label < kFinalLabel)
      throw InvalidArcError("in_label below -1 on arc " + ArcString(a));
    if (std::isnan(a.score))
      throw InvalidArcError("NaN score on arc " + ArcString(a));
    if (a.emit_attr != 0 && a.emit_attr != 1)
      throw InvalidArcError("emit_attr outside {0,1} on arc " + ArcString(a));
    if (a.in_label == kFinalLabel) {
      if (a.out_label != kEpsilon || a.emit_attr != 0)
        throw InvalidArcError("final arc must carry epsilon output and no "
                              "emit attribute: " + ArcString(a));
      if (final_state != -1 && final_state != a.dst_state)
        throw InvalidArcError("duplicate final states " +
                              std::to_string(final_state) + " and " +
                              std::to_string(a.dst_state));
      final_state = a.dst_state;
    } else if (a.out_label < 0) {
      throw InvalidArcError("negative out_label on non-final arc " +
                            ArcString(a));
    }
  }
  if (final_state == -1)
    throw InvalidArcError("Fsa has no final arc");
  for (const Arc& a : arcs) {
    if (a.src_state == final_state)
      throw InvalidArcError("arc leaves the final state: " + ArcString(a));
    if (a.in_label != kFinalLabel && a.dst_state == final_state)
      throw InvalidArcError("non-final arc enters the final state: " +
                            ArcString(a));
  }

  std::vector<int32_t> order(arcs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int32_t i, int32_t j) {
    return ArcKey(arcs[i]) < ArcKey(arcs[j]);
  });

  Fsa fsa;
  fsa.num_states = num_states;
  fsa.final_state = final_state;
  fsa.arcs.reserve(arcs.size());
  for (int32_t i : order) fsa.arcs.push_back(arcs[i]);
  if (sorted_from != nullptr) *sorted_from = std::move(order);

  fsa.arc_offsets.assign(num_states + 1, 0);
  for (const Arc& a : fsa.arcs) ++fsa.arc_offsets[a.src_state + 1];
  for (StateId s = 0; s < num_states; ++s)
    fsa.arc_offsets[s + 1] += fsa.arc_offsets[s];
  return fsa;
}

DenseFsa MakeDenseFsa(Eigen::MatrixXd logprobs, RowCheck check) {
  if (logprobs.rows() < 1 || logprobs.cols() < 2)
    throw BadShapeError("dense log-probs need >= 1 frame and >= 2 columns, "
                        "got " + std::to_string(logprobs.rows()) + "x" +
                        std::to_string(logprobs.cols()));
  for (Eigen::Index t = 0; t < logprobs.rows(); ++t) {
    bool any_finite = false;
    for (Eigen::Index k = 0; k < logprobs.cols(); ++k) {
      double v = logprobs(t, k);
      if (std::isnan(v) || v == -kNegInf)
        throw BadShapeError("non-finite (non -inf) entry at frame " +
                            std::to_string(t));
      if (v != kNegInf) any_finite = true;
    }
    if (!any_finite)
      throw AllNegInfRowError("frame " + std::to_string(t) +
                              " is all -inf");
  }
  if (check == RowCheck::kStrict) {
    Eigen::VectorXd lse = RowLogSumExp(logprobs);
    for (Eigen::Index t = 0; t < lse.size(); ++t) {
      if (std::abs(lse(t)) > 1e-3)
        throw BadShapeError("row " + std::to_string(t) +
                            " is not log-normalized: logsumexp = " +
                            std::to_string(lse(t)));
    }
  }
  return DenseFsa{std::move(logprobs)};
}

}  // namespace latgraph
