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

#include "wlg/reach.hpp"

namespace wlg {

/// The goal vertices ordered into nested levels F_1 ⊆ ... ⊆ F_k by their
/// current rank, together with each level's inner reach fixed point, its
/// settling times, and its completion.
struct Hierarchy {
  std::vector<Weight> level_rank;              // strictly increasing, ∞ included when present
  std::vector<uint32_t> min_level;             // 1-based first level containing v; 0 off F
  std::vector<Ranking> inner;                  // least fixed point per level
  std::vector<std::vector<uint32_t>> inner_settling;
  std::vector<Ranking> completed;

  uint32_t num_levels() const { return static_cast<uint32_t>(level_rank.size()); }
  bool in_level(pvertex_t v, uint32_t h) const {
    return min_level[v] != 0 && min_level[v] <= h;
  }
};

/// Levels, inner fixed points and completions for ranking r. Throws on an
/// empty goal set. Parallel mode solves the levels concurrently; the result
/// is identical to the serial build.
Hierarchy build_hierarchy(const ProductArena& product, const Ranking& r,
                          const std::vector<bool>& goal, Exec exec = Exec::serial,
                          bool include_inf_level = true);

/// The limit operator applied through a prebuilt hierarchy:
/// v -> min over levels h of max{r(v), completed_h(v), level_rank_h}.
Ranking apply_hierarchy_serial(const Hierarchy& h, const Ranking& r);
Ranking apply_hierarchy_parallel(const Hierarchy& h, const Ranking& r);
Ranking apply_hierarchy(const Hierarchy& h, const Ranking& r, Exec exec = Exec::serial);

/// One application of the limit operator (hierarchy built internally).
Ranking lift_limit(const ProductArena& product, const Ranking& r,
                   const std::vector<bool>& goal, Exec exec = Exec::serial);

struct LimitSolution {
  Ranking fixpoint;
  std::vector<Ranking> trace;          // r0 (all 0), ..., rn with rn = rn-1
  std::vector<Hierarchy> hierarchies;  // hierarchies[j] built from trace[j]; back() is r*'s
  std::vector<uint32_t> settling;
  std::vector<bool> goal;
};

/// Greatest fixed point of the limit operator from the all-0 ranking.
/// An empty goal short-circuits to the all-∞ valuation. Stabilizes within
/// |F|+1 applications.
LimitSolution solve_limit(const ProductArena& product, const std::vector<bool>& goal,
                          Exec exec = Exec::serial);

/// Smallest level h with r*(v) = max{r*(v), completed_h(v), level_rank_h},
/// taken in the fixed point's hierarchy.
uint32_t choose_level(const Hierarchy& h, const Ranking& r, pvertex_t v);
uint32_t choose_h(const LimitSolution& solution, pvertex_t v);

struct VertexClass {
  enum Kind { zero, one, two } kind;
  uint32_t level;  // meaningful for kinds one and two
};

/// Classification against the hierarchy of r_{t_s(v)-1}, as used by the
/// Player-1 extraction.
VertexClass classify_vertex(const LimitSolution& solution, pvertex_t v);

FiniteStateStrategy extract_strategy_limit_p0(const Arena& base, const ProductArena& product,
                                              const LimitSolution& solution,
                                              const MemoryStructure& memory);
FiniteStateStrategy extract_strategy_limit_p1(const Arena& base, const ProductArena& product,
                                              const LimitSolution& solution,
                                              const MemoryStructure& memory);

/// v -> r*(v, init(v)) over the base arena.
std::vector<Weight> value_map(const LimitSolution& solution, const Arena& arena,
                              const MemoryStructure& memory);

}  // namespace wlg
