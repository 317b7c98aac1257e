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

#include "wlg/strategy.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace wlg {

FiniteStateStrategy compose_memory(const Arena& base, const MemoryStructure& outer,
                                   const FiniteStateStrategy& inner) {
  const uint32_t n = base.num_vertices();
  const uint32_t M = outer.num_states;
  const uint32_t Mp = inner.memory.num_states;
  if (inner.num_vertices != n * M)
    throw std::invalid_argument("arena mismatch: inner strategy is not over base x outer");

  auto pidx = [&](vertex_t v, uint32_t m) { return v * M + m; };

  FiniteStateStrategy out;
  out.player = inner.player;
  out.num_vertices = n;
  out.memory.num_states = M * Mp;
  out.memory.init.resize(n);
  out.memory.upd.resize(static_cast<size_t>(M) * Mp * n);
  out.next.assign(static_cast<size_t>(n) * M * Mp, NO_INDEX);

  for (vertex_t v = 0; v < n; ++v) {
    uint32_t m0 = outer.init[v];
    out.memory.init[v] = m0 * Mp + inner.memory.init[pidx(v, m0)];
  }
  for (uint32_t m = 0; m < M; ++m) {
    for (uint32_t mp = 0; mp < Mp; ++mp) {
      uint32_t packed = m * Mp + mp;
      for (vertex_t v = 0; v < n; ++v) {
        uint32_t mu = outer.update(m, v);
        uint32_t mpu = inner.memory.update(mp, pidx(v, mu));
        out.memory.upd[packed * n + v] = mu * Mp + mpu;
      }
    }
  }
  for (vertex_t v = 0; v < n; ++v) {
    if (base.vertices[v].owner != inner.player) continue;
    for (uint32_t m = 0; m < M; ++m) {
      for (uint32_t mp = 0; mp < Mp; ++mp) {
        pvertex_t target = inner.next[static_cast<size_t>(pidx(v, m)) * Mp + mp];
        out.next[(static_cast<size_t>(v) * M + m) * Mp + mp] = target / M;
      }
    }
  }
  return out;
}

bool consistent(const Arena& arena, const FiniteStateStrategy& strategy,
                std::span<const vertex_t> prefix) {
  if (prefix.size() <= 1) return true;
  for (size_t i = 0; i + 1 < prefix.size(); ++i) {
    bool edge = false;
    for (const Arena::Succ& s : arena.successors(prefix[i]))
      if (s.to == prefix[i + 1]) edge = true;
    if (!edge) throw std::invalid_argument("prefix is not a path");
  }
  uint32_t m = strategy.memory.init[prefix[0]];
  for (size_t i = 0; i + 1 < prefix.size(); ++i) {
    if (arena.vertices[prefix[i]].owner == strategy.player) {
      if (strategy.next_move(prefix[i], m) != prefix[i + 1]) return false;
    }
    m = strategy.memory.update(m, prefix[i + 1]);
  }
  return true;
}

uint32_t reachable_memory_count(const Arena& arena, const FiniteStateStrategy& strategy) {
  const uint32_t M = strategy.memory.num_states;
  std::vector<bool> seen(static_cast<size_t>(arena.num_vertices()) * M, false);
  std::deque<std::pair<vertex_t, uint32_t>> queue;
  for (vertex_t v = 0; v < arena.num_vertices(); ++v) {
    uint32_t m = strategy.memory.init[v];
    if (!seen[static_cast<size_t>(v) * M + m]) {
      seen[static_cast<size_t>(v) * M + m] = true;
      queue.push_back({v, m});
    }
  }
  while (!queue.empty()) {
    auto [v, m] = queue.front();
    queue.pop_front();
    bool owned = arena.vertices[v].owner == strategy.player;
    for (const Arena::Succ& s : arena.successors(v)) {
      if (owned && s.to != strategy.next_move(v, m)) continue;
      uint32_t mu = strategy.memory.update(m, s.to);
      if (!seen[static_cast<size_t>(s.to) * M + mu]) {
        seen[static_cast<size_t>(s.to) * M + mu] = true;
        queue.push_back({s.to, mu});
      }
    }
  }
  std::set<uint32_t> states;
  for (vertex_t v = 0; v < arena.num_vertices(); ++v)
    for (uint32_t m = 0; m < M; ++m)
      if (seen[static_cast<size_t>(v) * M + m]) states.insert(m);
  return static_cast<uint32_t>(states.size());
}

RestrictedGraph restrict_product(const ProductArena& product,
                                 const std::vector<bool>& goal,
                                 const FiniteStateStrategy& strategy) {
  if (strategy.num_vertices != product.size())
    throw std::invalid_argument("strategy is not over this product");
  const uint32_t Mp = strategy.memory.num_states;

  RestrictedGraph g;
  g.product_vertices = product.size();
  g.memory_states = Mp;
  const uint32_t total = g.product_vertices * Mp;
  g.owner.resize(total);
  g.goal.resize(total);
  g.succ_off.assign(total + 1, 0);

  std::vector<std::vector<ProductArena::Succ>> adj(total);
  for (pvertex_t p = 0; p < product.size(); ++p) {
    bool owned = product.owner[p] == strategy.player;
    for (uint32_t m = 0; m < Mp; ++m) {
      uint32_t c = g.index(p, m);
      g.owner[c] = product.owner[p];
      g.goal[c] = goal[p];
      for (const ProductArena::Succ& s : product.successors(p)) {
        if (owned && s.to != strategy.next_move(p, m)) continue;
        adj[c].push_back({g.index(s.to, strategy.memory.update(m, s.to)), s.weight});
      }
    }
  }
  for (uint32_t c = 0; c < total; ++c) {
    g.succ_off[c] = static_cast<uint32_t>(g.succ.size());
    g.succ.insert(g.succ.end(), adj[c].begin(), adj[c].end());
  }
  g.succ_off[total] = static_cast<uint32_t>(g.succ.size());
  return g;
}

}  // namespace wlg
