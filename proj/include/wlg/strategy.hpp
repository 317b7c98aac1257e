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

#include "wlg/core.hpp"

namespace wlg {

/// Finite-state strategy: memory structure plus next-move table. The arena
/// it plays on is identified only by its vertex count; product-level
/// strategies use product indices as their vertices.
struct FiniteStateStrategy {
  Owner player = Owner::p0;
  uint32_t num_vertices = 0;
  MemoryStructure memory;
  std::vector<vertex_t> next;  // v * |M| + m -> target, NO_INDEX if v unowned

  uint32_t size() const { return memory.num_states; }  // declared |M|

  vertex_t next_move(vertex_t v, uint32_t m) const {
    vertex_t t = next[static_cast<size_t>(v) * memory.num_states + m];
    if (t == NO_INDEX) throw std::invalid_argument("vertex not owned by strategy's player");
    return t;
  }
};

/// Product of memory structures: turns a finite-state strategy on
/// arena x outer into a finite-state strategy on the arena itself.
FiniteStateStrategy compose_memory(const Arena& base, const MemoryStructure& outer,
                                   const FiniteStateStrategy& inner);

/// True iff every owned step of the prefix follows the strategy under
/// upd*-tracked memory. Throws if the prefix is not a path.
bool consistent(const Arena& arena, const FiniteStateStrategy& strategy,
                std::span<const vertex_t> prefix);

/// Number of memory states actually visited along strategy-consistent play
/// prefixes, from every start vertex.
uint32_t reachable_memory_count(const Arena& arena, const FiniteStateStrategy& strategy);

/// One-player view of a product under a product-level strategy: the owner's
/// moves are fixed, the opponent keeps all edges. Nodes are
/// (product vertex, strategy memory) pairs.
struct RestrictedGraph {
  uint32_t product_vertices = 0;
  uint32_t memory_states = 1;
  std::vector<Owner> owner;
  std::vector<uint32_t> succ_off;
  std::vector<ProductArena::Succ> succ;
  std::vector<bool> goal;

  uint32_t size() const { return static_cast<uint32_t>(owner.size()); }
  uint32_t index(pvertex_t p, uint32_t m) const { return p * memory_states + m; }
  std::span<const ProductArena::Succ> successors(uint32_t c) const {
    return {succ.data() + succ_off[c], succ.data() + succ_off[c + 1]};
  }
};

RestrictedGraph restrict_product(const ProductArena& product,
                                 const std::vector<bool>& goal,
                                 const FiniteStateStrategy& strategy);

}  // namespace wlg
