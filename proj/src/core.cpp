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

#include "wlg/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wlg {

color_t Alphabet::intern(const std::string& name) {
  for (color_t c = 0; c < names_.size(); ++c)
    if (names_[c] == name) return c;
  names_.push_back(name);
  return static_cast<color_t>(names_.size() - 1);
}

std::optional<color_t> Alphabet::find(const std::string& name) const {
  for (color_t c = 0; c < names_.size(); ++c)
    if (names_[c] == name) return c;
  return std::nullopt;
}

void Arena::finalize() {
  const uint32_t n = num_vertices();
  std::vector<std::vector<Succ>> adj(n);
  for (const Edge& e : edges) {
    if (e.from < n && e.to < n) adj[e.from].push_back({e.to, e.weight});
  }
  succ_off.assign(n + 1, 0);
  succ.clear();
  for (uint32_t v = 0; v < n; ++v) {
    std::sort(adj[v].begin(), adj[v].end(),
              [](const Succ& a, const Succ& b) { return a.to < b.to; });
    succ_off[v] = static_cast<uint32_t>(succ.size());
    succ.insert(succ.end(), adj[v].begin(), adj[v].end());
  }
  succ_off[n] = static_cast<uint32_t>(succ.size());
}

uint64_t Arena::max_weight() const {
  uint64_t w = 0;
  for (const Edge& e : edges) w = std::max(w, e.weight);
  return w;
}

ValidationReport validate_arena(const Arena& arena) {
  ValidationReport report;
  const uint32_t n = arena.num_vertices();
  if (n == 0) {
    report.violations.push_back("empty vertex set");
    return report;
  }
  std::vector<uint32_t> outdeg(n, 0);
  std::set<std::pair<vertex_t, vertex_t>> seen;
  for (const Arena::Edge& e : arena.edges) {
    if (e.from >= n || e.to >= n) {
      report.violations.push_back("dangling edge endpoint " + std::to_string(e.from) +
                                  " -> " + std::to_string(e.to));
      continue;
    }
    if (!seen.insert({e.from, e.to}).second)
      report.violations.push_back("duplicate edge v" + std::to_string(e.from) +
                                  " -> v" + std::to_string(e.to));
    outdeg[e.from]++;
  }
  for (uint32_t v = 0; v < n; ++v)
    if (outdeg[v] == 0)
      report.violations.push_back("sink vertex v" + std::to_string(v));
  return report;
}

void Dfa::complete_with_sink() {
  if (!sink) return;
  for (state_t& t : delta)
    if (t == NO_INDEX) t = *sink;
}

ValidationReport validate_dfa(const Dfa& dfa, uint32_t alphabet_size) {
  ValidationReport report;
  if (dfa.num_states == 0) {
    report.violations.push_back("empty state set");
    return report;
  }
  if (dfa.initial >= dfa.num_states)
    report.violations.push_back("initial state out of range");
  else if (dfa.accepting[dfa.initial])
    report.violations.push_back("empty word accepted (initial state is accepting)");
  if (dfa.num_colors < alphabet_size)
    report.violations.push_back("partial transition function (alphabet wider than table)");
  for (state_t q = 0; q < dfa.num_states; ++q) {
    for (color_t c = 0; c < std::min(dfa.num_colors, alphabet_size); ++c) {
      state_t t = dfa.delta[q * dfa.num_colors + c];
      if (t == NO_INDEX)
        report.violations.push_back("partial transition function (missing q" +
                                    std::to_string(q) + " on color " + std::to_string(c) + ")");
      else if (t >= dfa.num_states)
        report.violations.push_back("transition target out of range");
    }
  }
  return report;
}

state_t dfa_run(const Dfa& dfa, std::span<const color_t> word) {
  state_t q = dfa.initial;
  for (color_t c : word) {
    if (c >= dfa.num_colors) throw std::invalid_argument("unknown color in word");
    q = dfa.step(q, c);
  }
  return q;
}

uint32_t MemoryStructure::run(std::span<const vertex_t> prefix) const {
  if (prefix.empty()) throw std::invalid_argument("upd* needs a nonempty prefix");
  uint32_t m = init[prefix[0]];
  for (size_t i = 1; i < prefix.size(); ++i) m = update(m, prefix[i]);
  return m;
}

MemoryStructure trivial_memory(uint32_t num_vertices) {
  MemoryStructure m;
  m.num_states = 1;
  m.init.assign(num_vertices, 0);
  m.upd.assign(num_vertices, 0);
  return m;
}

MemoryStructure memory_from_dfa(const Dfa& dfa, const Arena& arena) {
  for (const Arena::VertexInfo& v : arena.vertices)
    if (v.color >= dfa.num_colors)
      throw std::invalid_argument("color mismatch: arena color outside DFA alphabet");
  MemoryStructure m;
  m.num_states = dfa.num_states;
  const uint32_t n = arena.num_vertices();
  m.init.resize(n);
  m.upd.resize(static_cast<size_t>(dfa.num_states) * n);
  for (vertex_t v = 0; v < n; ++v)
    m.init[v] = dfa.step(dfa.initial, arena.vertices[v].color);
  for (state_t q = 0; q < dfa.num_states; ++q)
    for (vertex_t v = 0; v < n; ++v)
      m.upd[q * n + v] = dfa.step(q, arena.vertices[v].color);
  return m;
}

ProductArena build_product(const Arena& arena, const MemoryStructure& memory,
                           const std::vector<bool>& accepting) {
  ProductArena p;
  p.base_vertices = arena.num_vertices();
  p.memory_states = memory.num_states;
  const uint32_t total = p.base_vertices * p.memory_states;
  p.owner.resize(total);
  p.goal.assign(total, false);
  p.largest_weight = arena.max_weight();

  p.succ_off.assign(total + 1, 0);
  for (vertex_t v = 0; v < p.base_vertices; ++v) {
    uint32_t deg = static_cast<uint32_t>(arena.successors(v).size());
    for (uint32_t m = 0; m < p.memory_states; ++m)
      p.succ_off[p.index(v, m) + 1] = deg;
  }
  for (uint32_t i = 0; i < total; ++i) p.succ_off[i + 1] += p.succ_off[i];
  p.succ.resize(p.succ_off[total]);

  std::vector<ProductArena::Succ> row;
  for (vertex_t v = 0; v < p.base_vertices; ++v) {
    for (uint32_t m = 0; m < p.memory_states; ++m) {
      pvertex_t pv = p.index(v, m);
      p.owner[pv] = arena.vertices[v].owner;
      if (m < accepting.size() && accepting[m]) p.goal[pv] = true;
      row.clear();
      for (const Arena::Succ& s : arena.successors(v))
        row.push_back({p.index(s.to, memory.update(m, s.to)), s.weight});
      std::sort(row.begin(), row.end(),
                [](const ProductArena::Succ& a, const ProductArena::Succ& b) {
                  return a.to < b.to;
                });
      std::copy(row.begin(), row.end(), p.succ.begin() + p.succ_off[pv]);
    }
  }
  return p;
}

namespace {

// weight of the edge u -> w in the product; throws if absent
uint64_t edge_weight(const ProductArena& product, pvertex_t u, pvertex_t w) {
  for (const ProductArena::Succ& s : product.successors(u))
    if (s.to == w) return s.weight;
  throw std::invalid_argument("lasso uses a non-edge");
}

}  // namespace

bool lasso_valid(const ProductArena& product, const Lasso& lasso) {
  if (lasso.loop.empty()) return false;
  auto is_edge = [&](pvertex_t u, pvertex_t w) {
    if (u >= product.size() || w >= product.size()) return false;
    for (const ProductArena::Succ& s : product.successors(u))
      if (s.to == w) return true;
    return false;
  };
  std::vector<uint32_t> all = lasso.stem;
  all.insert(all.end(), lasso.loop.begin(), lasso.loop.end());
  for (size_t i = 0; i + 1 < all.size(); ++i)
    if (!is_edge(all[i], all[i + 1])) return false;
  return is_edge(lasso.loop.back(), lasso.loop.front());
}

Lasso extend_play(const Lasso& base, const MemoryStructure& memory) {
  if (base.loop.empty()) throw std::invalid_argument("lasso loop must be nonempty");
  const uint32_t M = memory.num_states;
  auto pidx = [&](vertex_t v, uint32_t m) { return v * M + m; };

  Lasso out;
  uint32_t m;
  if (!base.stem.empty()) {
    m = memory.init[base.stem[0]];
    out.stem.push_back(pidx(base.stem[0], m));
    for (size_t i = 1; i < base.stem.size(); ++i) {
      m = memory.update(m, base.stem[i]);
      out.stem.push_back(pidx(base.stem[i], m));
    }
    m = memory.update(m, base.loop[0]);
  } else {
    m = memory.init[base.loop[0]];
  }

  // walk the loop until a (position, memory) pair repeats
  const size_t L = base.loop.size();
  std::map<std::pair<size_t, uint32_t>, size_t> first_seen;
  std::vector<pvertex_t> walk;
  size_t pos = 0;
  for (;;) {
    auto key = std::make_pair(pos, m);
    auto it = first_seen.find(key);
    if (it != first_seen.end()) {
      out.stem.insert(out.stem.end(), walk.begin(), walk.begin() + it->second);
      out.loop.assign(walk.begin() + it->second, walk.end());
      return out;
    }
    first_seen[key] = walk.size();
    walk.push_back(pidx(base.loop[pos], m));
    pos = (pos + 1) % L;
    m = memory.update(m, base.loop[pos]);
  }
}

Weight eval_play_reach(const ProductArena& product, const Lasso& lasso,
                       const std::vector<bool>& goal) {
  std::vector<uint32_t> seq = lasso.stem;
  seq.insert(seq.end(), lasso.loop.begin(), lasso.loop.end());
  Weight acc = Weight::finite(0);
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) acc += Weight::finite(edge_weight(product, seq[i - 1], seq[i]));
    if (goal[seq[i]]) return acc;  // first visit realizes the min
  }
  return Weight::inf();
}

Weight eval_play_limit(const ProductArena& product, const Lasso& lasso,
                       const std::vector<bool>& goal) {
  bool loop_has_goal = false;
  for (uint32_t v : lasso.loop) loop_has_goal |= goal[v];
  if (!loop_has_goal) return Weight::inf();

  // unroll stem + two loop periods; every position's next F-visit lies within
  // one period, so the first |stem|+|loop| positions see their full gap
  std::vector<uint32_t> seq = lasso.stem;
  seq.insert(seq.end(), lasso.loop.begin(), lasso.loop.end());
  seq.insert(seq.end(), lasso.loop.begin(), lasso.loop.end());

  const size_t positions = lasso.stem.size() + lasso.loop.size();
  Weight best = Weight::finite(0);
  for (size_t p = 0; p < positions; ++p) {
    Weight gap = Weight::finite(0);
    for (size_t j = p + 1; j < seq.size(); ++j) {
      gap += Weight::finite(edge_weight(product, seq[j - 1], seq[j]));
      if (goal[seq[j]]) break;
    }
    best = std::max(best, gap);
  }
  return best;
}

}  // namespace wlg
