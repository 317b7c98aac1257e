/*
 * Copyright 2026 The wlg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "wlg/reach.hpp"

#include <algorithm>

namespace wlg {

bool ranking_below(const Ranking& r, const Ranking& rp) {
  for (size_t v = 0; v < r.size(); ++v)
    if (r[v] < rp[v]) return false;
  return true;
}

namespace {

// one Jacobi update of a single vertex
inline Weight lift_vertex(const ProductArena& product, const Ranking& r,
                          const std::vector<bool>& goal, pvertex_t v) {
  if (goal[v]) return Weight::finite(0);
  Weight best;
  if (product.owner[v] == Owner::p0) {
    best = Weight::inf();
    for (const ProductArena::Succ& s : product.successors(v))
      best = std::min(best, Weight::finite(s.weight) + r[s.to]);
  } else {
    best = Weight::finite(0);
    for (const ProductArena::Succ& s : product.successors(v))
      best = std::max(best, Weight::finite(s.weight) + r[s.to]);
  }
  return std::min(r[v], best);
}

}  // namespace

Ranking lift_reach_serial(const ProductArena& product, const Ranking& r,
                          const std::vector<bool>& goal) {
  Ranking out(r.size());
  for (pvertex_t v = 0; v < r.size(); ++v) out[v] = lift_vertex(product, r, goal, v);
  return out;
}

Ranking lift_reach_parallel(const ProductArena& product, const Ranking& r,
                            const std::vector<bool>& goal) {
  Ranking out(r.size());
  const int64_t n = static_cast<int64_t>(r.size());
#pragma omp parallel for schedule(static)
  for (int64_t v = 0; v < n; ++v)
    out[v] = lift_vertex(product, r, goal, static_cast<pvertex_t>(v));
  return out;
}

Ranking lift_reach(const ProductArena& product, const Ranking& r,
                   const std::vector<bool>& goal, Exec exec) {
  return exec == Exec::parallel ? lift_reach_parallel(product, r, goal)
                                : lift_reach_serial(product, r, goal);
}

ReachSolution solve_reach(const ProductArena& product, const std::vector<bool>& goal,
                          Exec exec) {
  ReachSolution sol;
  sol.goal = goal;
  sol.trace.push_back(Ranking(product.size(), Weight::inf()));
  const size_t bound = product.size() + 2;  // fixpoint index is at most |product|+1
  for (size_t j = 1;; ++j) {
    if (j > bound) throw InternalError("reach fixpoint exceeded |product|+1 iterations");
    sol.trace.push_back(lift_reach(product, sol.trace.back(), goal, exec));
    const Ranking& cur = sol.trace[j];
    if (cur == sol.trace[j - 1]) break;
  }
  sol.fixpoint = sol.trace.back();
  sol.settling = settling_times(sol);
  return sol;
}

std::vector<uint32_t> settling_times(const ReachSolution& solution) {
  std::vector<uint32_t> ts(solution.fixpoint.size(), 0);
  for (pvertex_t v = 0; v < solution.fixpoint.size(); ++v) {
    for (uint32_t j = 0; j < solution.trace.size(); ++j) {
      if (solution.trace[j][v] == solution.fixpoint[v]) {
        ts[v] = j;
        break;
      }
    }
  }
  return ts;
}

Ranking completion(const ProductArena& product, const Ranking& r,
                   const std::vector<bool>& goal) {
  Ranking out = r;
  for (pvertex_t v = 0; v < r.size(); ++v) {
    if (!goal[v]) continue;
    Weight best;
    if (product.owner[v] == Owner::p0) {
      best = Weight::inf();
      for (const ProductArena::Succ& s : product.successors(v))
        best = std::min(best, Weight::finite(s.weight) + r[s.to]);
    } else {
      best = Weight::finite(0);
      for (const ProductArena::Succ& s : product.successors(v))
        best = std::max(best, Weight::finite(s.weight) + r[s.to]);
    }
    out[v] = best;
  }
  return out;
}

pvertex_t optimal_successor(const ProductArena& product, const ReachSolution& solution,
                            pvertex_t v, SuccessorMode mode) {
  const Ranking& r = solution.fixpoint;
  bool strict = mode == SuccessorMode::strict && !r[v].is_inf();
  for (const ProductArena::Succ& s : product.successors(v)) {
    if (r[v] != Weight::finite(s.weight) + r[s.to]) continue;
    if (strict && solution.settling[v] != solution.settling[s.to] + 1) continue;
    return s.to;
  }
  if (strict) {
    // Lemma 3.3 guarantees a strict witness at Player-0 vertices; Player-1
    // callers only use the relaxed mode.
    throw InternalError("no strict optimal successor: corrupted solution");
  }
  throw InternalError("no optimal successor: corrupted solution");
}

pvertex_t optimal_successor_completed(const ProductArena& product, const Ranking& inner,
                                      const Ranking& completed, pvertex_t v) {
  for (const ProductArena::Succ& s : product.successors(v))
    if (completed[v] == Weight::finite(s.weight) + inner[s.to]) return s.to;
  throw InternalError("no optimal successor w.r.t. completed ranking");
}

namespace {

FiniteStateStrategy positional_on_product(const ProductArena& product, Owner player) {
  FiniteStateStrategy s;
  s.player = player;
  s.num_vertices = product.size();
  s.memory = trivial_memory(product.size());
  s.next.assign(product.size(), NO_INDEX);
  return s;
}

}  // namespace

FiniteStateStrategy extract_strategy_reach_p0(const Arena& base, const ProductArena& product,
                                              const ReachSolution& solution,
                                              const MemoryStructure& memory) {
  FiniteStateStrategy inner = positional_on_product(product, Owner::p0);
  for (pvertex_t v = 0; v < product.size(); ++v) {
    if (product.owner[v] != Owner::p0) continue;
    if (solution.goal[v])
      inner.next[v] = product.successors(v).front().to;
    else
      inner.next[v] = optimal_successor(product, solution, v, SuccessorMode::strict);
  }
  return compose_memory(base, memory, inner);
}

FiniteStateStrategy extract_strategy_reach_p1(const Arena& base, const ProductArena& product,
                                              const ReachSolution& solution,
                                              const MemoryStructure& memory) {
  FiniteStateStrategy inner = positional_on_product(product, Owner::p1);
  for (pvertex_t v = 0; v < product.size(); ++v) {
    if (product.owner[v] != Owner::p1) continue;
    if (solution.goal[v])
      inner.next[v] = product.successors(v).front().to;
    else
      inner.next[v] = optimal_successor(product, solution, v, SuccessorMode::relaxed);
  }
  return compose_memory(base, memory, inner);
}

}  // namespace wlg
