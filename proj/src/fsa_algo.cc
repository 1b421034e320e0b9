// src/fsa_algo.cc

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

#include "latgraph/fsa_algo.h"

#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "latgraph/error.h"
#include "latgraph/math_util.h"

namespace latgraph {

namespace {

// Re-homes per-raw-arc data onto the arcs of a normalized Fsa:
// result[i] = values[sort_perm[trim_map[i]]].
template <typename T>
std::vector<T> GatherArcData(const std::vector<T>& values,
                             const std::vector<int32_t>& sort_perm,
                             const std::vector<int32_t>& trim_map) {
  std::vector<T> out;
  out.reserve(trim_map.size());
  for (int32_t i : trim_map) out.push_back(values[sort_perm[i]]);
  return out;
}

}  // namespace

Fsa LinearFsa(std::span<const Label> labels) {
  if (labels.empty()) throw EmptyLabelsError("empty label sequence");
  std::vector<Arc> arcs;
  arcs.reserve(labels.size() + 1);
  StateId s = 0;
  for (Label y : labels) {
    if (y < 1)
      throw LabelOutOfRangeError("label " + std::to_string(y) +
                                 " is not a token id (tokens are >= 1)");
    arcs.push_back(Arc{s, s + 1, y, y, 0.0, 0});
    ++s;
  }
  arcs.push_back(Arc{s, s + 1, kFinalLabel, kEpsilon, 0.0, 0});
  return MakeFsa(static_cast<StateId>(labels.size()) + 2, std::move(arcs));
}

TrimmedFsa TrimAndSort(const Fsa& fsa) {
  if (fsa.Empty()) return {Fsa{0, -1, {}, {0}}, {}};

  const StateId n = fsa.num_states;
  std::vector<char> fwd(n, 0), bwd(n, 0);

  // Forward reachability from the start state.
  {
    std::vector<StateId> stack{Fsa::kStartState};
    fwd[Fsa::kStartState] = 1;
    while (!stack.empty()) {
      StateId s = stack.back();
      stack.pop_back();
      for (const Arc& a : fsa.ArcsOf(s)) {
        if (!fwd[a.dst_state]) {
          fwd[a.dst_state] = 1;
          stack.push_back(a.dst_state);
        }
      }
    }
  }
  // Backward reachability to the final state.
  {
    std::vector<std::vector<StateId>> preds(n);
    for (const Arc& a : fsa.arcs) preds[a.dst_state].push_back(a.src_state);
    std::vector<StateId> stack{fsa.final_state};
    bwd[fsa.final_state] = 1;
    while (!stack.empty()) {
      StateId s = stack.back();
      stack.pop_back();
      for (StateId p : preds[s]) {
        if (!bwd[p]) {
          bwd[p] = 1;
          stack.push_back(p);
        }
      }
    }
  }

  std::vector<char> keep(n, 0);
  StateId num_kept = 0;
  for (StateId s = 0; s < n; ++s) {
    keep[s] = fwd[s] && bwd[s];
    num_kept += keep[s];
  }
  if (!keep[Fsa::kStartState] || !keep[fsa.final_state])
    return {Fsa{0, -1, {}, {0}}, {}};

  // Kahn's algorithm over the kept subgraph, popping the smallest original
  // id first.  On a graph whose numbering is already topological this
  // reproduces that numbering, which makes TrimAndSort idempotent.
  std::vector<int32_t> indegree(n, 0);
  for (const Arc& a : fsa.arcs)
    if (keep[a.src_state] && keep[a.dst_state]) ++indegree[a.dst_state];
  std::priority_queue<StateId, std::vector<StateId>, std::greater<StateId>>
      ready;
  for (StateId s = 0; s < n; ++s)
    if (keep[s] && indegree[s] == 0) ready.push(s);

  std::vector<StateId> new_id(n, -1);
  StateId next = 0;
  while (!ready.empty()) {
    StateId s = ready.top();
    ready.pop();
    new_id[s] = next++;
    for (const Arc& a : fsa.ArcsOf(s)) {
      if (!keep[a.dst_state]) continue;
      if (--indegree[a.dst_state] == 0) ready.push(a.dst_state);
    }
  }
  if (next != num_kept) {
    // Cyclic: keep the original relative order, compacted.
    next = 0;
    for (StateId s = 0; s < n; ++s) new_id[s] = keep[s] ? next++ : -1;
  }

  std::vector<Arc> kept_arcs;
  std::vector<int32_t> kept_index;
  for (int32_t i = 0; i < fsa.NumArcs(); ++i) {
    const Arc& a = fsa.arcs[i];
    if (!keep[a.src_state] || !keep[a.dst_state]) continue;
    Arc b = a;
    b.src_state = new_id[a.src_state];
    b.dst_state = new_id[a.dst_state];
    kept_arcs.push_back(b);
    kept_index.push_back(i);
  }

  std::vector<int32_t> perm;
  TrimmedFsa out;
  out.fsa = MakeFsa(num_kept, std::move(kept_arcs), &perm);
  out.arc_map.reserve(perm.size());
  for (int32_t p : perm) out.arc_map.push_back(kept_index[p]);
  return out;
}

ComposedFsa Compose(const Fsa& h, const Fsa& l) {
  if (h.Empty() || l.Empty()) return {Fsa{0, -1, {}, {0}}, {}, {}};
  for (const Arc& a : l.arcs) {
    if (a.in_label == kEpsilon)
      throw AlphabetMismatchError(
          "l must be epsilon-free on its input side");
  }

  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pending;
  auto intern = [&](StateId hs, StateId ls) {
    auto [it, inserted] =
        ids.emplace(std::make_pair(hs, ls), static_cast<StateId>(ids.size()));
    if (inserted) pending.emplace_back(hs, ls);
    return it->second;
  };

  std::vector<Arc> raw;
  std::vector<int32_t> raw_h, raw_l;
  StateId final_id = -1;
  intern(Fsa::kStartState, Fsa::kStartState);
  for (size_t head = 0; head < pending.size(); ++head) {
    auto [hs, ls] = pending[head];
    StateId s = ids.at({hs, ls});
    int32_t h_base = h.arc_offsets[hs];
    auto h_arcs = h.ArcsOf(hs);
    for (int32_t hi = 0; hi < static_cast<int32_t>(h_arcs.size()); ++hi) {
      const Arc& ha = h_arcs[hi];
      int32_t h_index = h_base + hi;
      if (ha.in_label == kFinalLabel) {
        // Finality is paired: both sides must take their -1 arc.
        int32_t l_base = l.arc_offsets[ls];
        auto l_arcs = l.ArcsOf(ls);
        for (int32_t li = 0; li < static_cast<int32_t>(l_arcs.size()); ++li) {
          const Arc& la = l_arcs[li];
          if (la.in_label != kFinalLabel) continue;
          if (final_id == -1) final_id = static_cast<StateId>(ids.size());
          raw.push_back(Arc{s, final_id, kFinalLabel, kEpsilon,
                            ha.score + la.score, 0});
          raw_h.push_back(h_index);
          raw_l.push_back(l_base + li);
        }
      } else if (ha.out_label == kEpsilon) {
        // Epsilon output advances only the h side; the attribute of the
        // originating h arc rides along.
        StateId t = intern(ha.dst_state, ls);
        raw.push_back(Arc{s, t, ha.in_label, kEpsilon, ha.score,
                          ha.emit_attr});
        raw_h.push_back(h_index);
        raw_l.push_back(-1);
      } else {
        int32_t l_base = l.arc_offsets[ls];
        auto l_arcs = l.ArcsOf(ls);
        for (int32_t li = 0; li < static_cast<int32_t>(l_arcs.size()); ++li) {
          const Arc& la = l_arcs[li];
          if (la.in_label != ha.out_label) continue;
          StateId t = intern(ha.dst_state, la.dst_state);
          raw.push_back(Arc{s, t, ha.in_label, la.out_label,
                            ha.score + la.score, ha.emit_attr});
          raw_h.push_back(h_index);
          raw_l.push_back(l_base + li);
        }
      }
    }
  }
  if (final_id == -1) return {Fsa{0, -1, {}, {0}}, {}, {}};

  std::vector<int32_t> perm;
  Fsa sorted = MakeFsa(static_cast<StateId>(ids.size()) + 1, std::move(raw),
                       &perm);
  TrimmedFsa trimmed = TrimAndSort(sorted);

  ComposedFsa out;
  out.fsa = std::move(trimmed.fsa);
  out.h_arc_map = GatherArcData(raw_h, perm, trimmed.arc_map);
  out.l_arc_map = GatherArcData(raw_l, perm, trimmed.arc_map);
  return out;
}

Lattice IntersectDense(const Fsa& graph, const DenseFsa& dense) {
  if (graph.Empty()) throw NoValidPathError("graph is empty");
  const auto T = static_cast<int32_t>(dense.NumFrames());
  const auto vp1 = static_cast<int32_t>(dense.VocabPlusBlank());
  for (const Arc& a : graph.arcs) {
    if (a.in_label != kFinalLabel && a.in_label >= vp1)
      throw LabelOutOfRangeError(
          "graph in_label " + std::to_string(a.in_label) +
          " outside the dense acceptor's alphabet [0, " +
          std::to_string(vp1 - 1) + "]");
  }

  // States are (frame, graph state) pairs discovered frontier by frontier;
  // every arc advances the frame, so discovery order is already topological.
  std::vector<std::vector<std::pair<StateId, StateId>>> frontier(T + 1);
  std::map<std::pair<int32_t, StateId>, StateId> ids;
  auto intern = [&](int32_t t, StateId gs) {
    auto [it, inserted] =
        ids.emplace(std::make_pair(t, gs), static_cast<StateId>(ids.size()));
    if (inserted) frontier[t].emplace_back(gs, it->second);
    return it->second;
  };

  std::vector<Arc> raw;
  std::vector<int32_t> raw_frame, raw_source;
  std::vector<int8_t> raw_emit;
  std::vector<Label> raw_token;
  auto push = [&](Arc a, int32_t frame, int8_t emit, Label token,
                  int32_t source) {
    raw.push_back(a);
    raw_frame.push_back(frame);
    raw_emit.push_back(emit);
    raw_token.push_back(token);
    raw_source.push_back(source);
  };

  intern(0, Fsa::kStartState);
  StateId final_id = -1;
  for (int32_t t = 0; t <= T; ++t) {
    // frontier[t] grows while we scan it (new states at t+1 only), so index
    // by position.
    for (size_t i = 0; i < frontier[t].size(); ++i) {
      auto [gs, s] = frontier[t][i];
      int32_t base = graph.arc_offsets[gs];
      auto arcs = graph.ArcsOf(gs);
      for (int32_t j = 0; j < static_cast<int32_t>(arcs.size()); ++j) {
        const Arc& ga = arcs[j];
        if (ga.in_label == kFinalLabel) {
          if (t != T) continue;  // -1 arcs are taken after the last frame
          if (final_id == -1) final_id = static_cast<StateId>(ids.size());
          push(Arc{s, final_id, kFinalLabel, kEpsilon, ga.score, 0}, T, 0,
               kFinalLabel, base + j);
        } else {
          if (t == T) continue;
          double w = dense.logprobs(t, ga.in_label);
          if (w == kNegInf) continue;  // pruned here, not propagated
          StateId u = intern(t + 1, ga.dst_state);
          push(Arc{s, u, ga.in_label, ga.out_label, ga.score + w,
                   ga.emit_attr},
               t, ga.emit_attr, ga.in_label, base + j);
        }
      }
    }
  }
  if (final_id == -1)
    throw NoValidPathError("no alignment of length " + std::to_string(T));

  std::vector<int32_t> perm;
  Fsa sorted = MakeFsa(static_cast<StateId>(ids.size()) + 1, std::move(raw),
                       &perm);
  TrimmedFsa trimmed = TrimAndSort(sorted);
  if (trimmed.fsa.Empty())
    throw NoValidPathError("no alignment of length " + std::to_string(T));

  Lattice lat;
  lat.fsa = std::move(trimmed.fsa);
  lat.num_frames = T;
  lat.vocab_plus_blank = vp1;
  lat.frame_of_arc = GatherArcData(raw_frame, perm, trimmed.arc_map);
  lat.emit_of_arc = GatherArcData(raw_emit, perm, trimmed.arc_map);
  lat.token_of_arc = GatherArcData(raw_token, perm, trimmed.arc_map);
  lat.source_arc = GatherArcData(raw_source, perm, trimmed.arc_map);
  return lat;
}

uint64_t CountAcceptingPaths(const Fsa& fsa) {
  if (fsa.Empty()) return 0;
  for (const Arc& a : fsa.arcs)
    if (a.dst_state <= a.src_state)
      throw Error("CountAcceptingPaths needs a topologically sorted Fsa");
  constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
  std::vector<uint64_t> count(fsa.num_states, 0);
  count[Fsa::kStartState] = 1;
  for (const Arc& a : fsa.arcs) {
    uint64_t c = count[a.src_state];
    uint64_t& d = count[a.dst_state];
    d = (d > kMax - c) ? kMax : d + c;
  }
  return count[fsa.final_state];
}

}  // namespace latgraph
