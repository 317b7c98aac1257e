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

#pragma once

#include "wlg/strategy.hpp"

namespace wlg {

/// Kernel dispatch: the serial path is the reference implementation, the
/// parallel path runs the same per-vertex updates under OpenMP. Results are
/// identical by construction (Jacobi updates read only the previous ranking).
enum class Exec { serial, parallel };

/// Total map product vertex -> N ∪ {∞}. Ordered by r ⊑ r' iff
/// r(v) >= r'(v) for all v.
using Ranking = std::vector<Weight>;

/// r ⊑ r'
bool ranking_below(const Ranking& r, const Ranking& rp);

/// Signals a broken solver invariant (iteration bounds, missing optimal
/// successors); never caused by well-formed input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct ReachSolution {
  Ranking fixpoint;
  std::vector<Ranking> trace;      // r0 (all ∞), ..., rn with rn = rn-1
  std::vector<uint32_t> settling;  // first index where the final rank appears
  std::vector<bool> goal;
};

Ranking lift_reach_serial(const ProductArena& product, const Ranking& r,
                          const std::vector<bool>& goal);
Ranking lift_reach_parallel(const ProductArena& product, const Ranking& r,
                            const std::vector<bool>& goal);
Ranking lift_reach(const ProductArena& product, const Ranking& r,
                   const std::vector<bool>& goal, Exec exec = Exec::serial);

/// Least fixed point of the reach operator, from the all-∞ ranking, with the
/// full trace and settling times. Stabilizes within |product|+1 applications.
ReachSolution solve_reach(const ProductArena& product, const std::vector<bool>& goal,
                          Exec exec = Exec::serial);

/// Recomputed settling times (solution.settling is the cached copy).
std::vector<uint32_t> settling_times(const ReachSolution& solution);

/// cmplt_F(r): each goal vertex gets the cost of reaching the goal set once
/// more; all other vertices keep their rank.
Ranking completion(const ProductArena& product, const Ranking& r,
                   const std::vector<bool>& goal);

enum class SuccessorMode { strict, relaxed };

/// Successor realizing r*(v) = w(v,v̄) + r*(v̄); strict mode additionally
/// demands settling(v) = settling(v̄) + 1 when r*(v) is finite. Ties break
/// toward the smallest product index. Only defined off the goal set.
pvertex_t optimal_successor(const ProductArena& product, const ReachSolution& solution,
                            pvertex_t v, SuccessorMode mode);

/// Successor realizing completed(v) = w(v,v̄) + inner(v̄); the extension of
/// optimality to goal vertices (and the plain notion off them).
pvertex_t optimal_successor_completed(const ProductArena& product, const Ranking& inner,
                                      const Ranking& completed, pvertex_t v);

/// Positional optimal strategy on the product, composed through the memory
/// structure into a finite-state strategy on the base arena.
FiniteStateStrategy extract_strategy_reach_p0(const Arena& base, const ProductArena& product,
                                              const ReachSolution& solution,
                                              const MemoryStructure& memory);
FiniteStateStrategy extract_strategy_reach_p1(const Arena& base, const ProductArena& product,
                                              const ReachSolution& solution,
                                              const MemoryStructure& memory);

}  // namespace wlg
