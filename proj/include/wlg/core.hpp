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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wlg/weight.hpp"

namespace wlg {

using vertex_t = uint32_t;   // vertex of a base arena
using state_t = uint32_t;    // automaton state
using color_t = uint32_t;    // interned color
using pvertex_t = uint32_t;  // vertex of a product arena, v * |M| + m

inline constexpr uint32_t NO_INDEX = UINT32_MAX;

enum class Owner : uint8_t { p0 = 0, p1 = 1 };

/// Finite color alphabet with interned symbols.
class Alphabet {
 public:
  color_t intern(const std::string& name);
  std::optional<color_t> find(const std::string& name) const;
  const std::string& name(color_t c) const { return names_.at(c); }
  uint32_t size() const { return static_cast<uint32_t>(names_.size()); }

 private:
  std::vector<std::string> names_;
};

/// Weighted, colored two-player arena. Vertices are dense indices; the
/// successor lists are sorted by target so "smallest successor" choices
/// are well defined everywhere.
struct Arena {
  struct VertexInfo {
    Owner owner;
    color_t color;
  };
  struct Edge {
    vertex_t from, to;
    uint64_t weight;
  };
  struct Succ {
    vertex_t to;
    uint64_t weight;
  };

  std::vector<VertexInfo> vertices;
  std::vector<Edge> edges;

  // built by finalize()
  std::vector<uint32_t> succ_off;
  std::vector<Succ> succ;

  void finalize();

  uint32_t num_vertices() const { return static_cast<uint32_t>(vertices.size()); }
  std::span<const Succ> successors(vertex_t v) const {
    return {succ.data() + succ_off[v], succ.data() + succ_off[v + 1]};
  }
  uint64_t max_weight() const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate_arena(const Arena& arena);

/// Deterministic finite automaton over the color alphabet. delta entries
/// may be NO_INDEX while a file with a declared sink is being loaded;
/// complete_with_sink() fills them in.
struct Dfa {
  uint32_t num_states = 0;
  uint32_t num_colors = 0;
  state_t initial = 0;
  std::vector<bool> accepting;  // per state
  std::vector<state_t> delta;   // num_states * num_colors
  std::optional<state_t> sink;

  state_t step(state_t q, color_t c) const { return delta[q * num_colors + c]; }
  void complete_with_sink();
};

ValidationReport validate_dfa(const Dfa& dfa, uint32_t alphabet_size);

/// delta*(word); delta*(eps) is the initial state.
state_t dfa_run(const Dfa& dfa, std::span<const color_t> word);

/// Memory structure (M, init, upd) for an arena.
struct MemoryStructure {
  uint32_t num_states = 1;
  std::vector<uint32_t> init;  // per arena vertex
  std::vector<uint32_t> upd;   // m * |V| + v

  uint32_t num_vertices() const { return static_cast<uint32_t>(init.size()); }
  uint32_t update(uint32_t m, vertex_t v) const { return upd[m * init.size() + v]; }
  /// upd* over a nonempty vertex sequence.
  uint32_t run(std::span<const vertex_t> prefix) const;
};

MemoryStructure trivial_memory(uint32_t num_vertices);

/// The memory structure induced by a DFA: states Q, init(v) = delta(qI, c(v)),
/// upd(q, v) = delta(q, c(v)).
MemoryStructure memory_from_dfa(const Dfa& dfa, const Arena& arena);

/// Full product of an arena and a memory structure: all |V| * |M| vertices,
/// edge ((v,m),(v',m')) iff (v,v') in E and upd(m,v') = m'. The goal set
/// marks pairs whose memory state is accepting.
struct ProductArena {
  struct Succ {
    pvertex_t to;
    uint64_t weight;
  };

  uint32_t base_vertices = 0;
  uint32_t memory_states = 1;
  std::vector<Owner> owner;  // per product vertex
  std::vector<uint32_t> succ_off;
  std::vector<Succ> succ;
  std::vector<bool> goal;
  uint64_t largest_weight = 0;

  uint32_t size() const { return static_cast<uint32_t>(owner.size()); }
  pvertex_t index(vertex_t v, uint32_t m) const { return v * memory_states + m; }
  vertex_t base(pvertex_t p) const { return p / memory_states; }
  uint32_t mem(pvertex_t p) const { return p % memory_states; }
  std::span<const Succ> successors(pvertex_t p) const {
    return {succ.data() + succ_off[p], succ.data() + succ_off[p + 1]};
  }
};

ProductArena build_product(const Arena& arena, const MemoryStructure& memory,
                           const std::vector<bool>& accepting);

/// Ultimately periodic play stem . loop^omega. Entries are vertices of
/// whichever arena hosts the lasso (base or product).
struct Lasso {
  std::vector<uint32_t> stem;
  std::vector<uint32_t> loop;  // nonempty
};

bool lasso_valid(const ProductArena& product, const Lasso& lasso);

/// ext(rho) of a base-arena lasso, in normalized periodic form: the loop is
/// the first revisited (position, memory) period.
Lasso extend_play(const Lasso& base, const MemoryStructure& memory);

/// Weight of the shortest nonempty prefix ending in F (the one-vertex prefix
/// counts with weight 0); ∞ when the lasso never touches F.
Weight eval_play_reach(const ProductArena& product, const Lasso& lasso,
                       const std::vector<bool>& goal);

/// sup over positions of the weight to the next F-position strictly after it;
/// ∞ when the loop avoids F.
Weight eval_play_limit(const ProductArena& product, const Lasso& lasso,
                       const std::vector<bool>& goal);

/// An instance as shipped in files: arena + automaton + the symbol tables
/// needed to print them back.
struct Instance {
  Alphabet alphabet;
  Arena arena;
  Dfa dfa;
  std::vector<std::string> vertex_names;
  std::vector<std::string> state_names;
};

}  // namespace wlg
