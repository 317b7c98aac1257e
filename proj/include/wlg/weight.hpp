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

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace wlg {

/// A value in N ∪ {∞}. Addition is absorbing in ∞ and checked against
/// 64-bit overflow on the finite side: overflow throws instead of wrapping.
class Weight {
 public:
  constexpr Weight() : raw(0) {}

  static constexpr Weight inf() { return Weight(INF_RAW); }

  static constexpr Weight finite(uint64_t n) {
    if (n == INF_RAW) throw std::overflow_error("finite weight out of range");
    return Weight(n);
  }

  constexpr bool is_inf() const { return raw == INF_RAW; }

  constexpr uint64_t finite_value() const {
    if (is_inf()) throw std::logic_error("finite_value() on infinity");
    return raw;
  }

  friend constexpr Weight operator+(Weight a, Weight b) {
    if (a.is_inf() || b.is_inf()) return inf();
    if (a.raw > INF_RAW - 1 - b.raw)
      throw std::overflow_error("weight addition overflows 64 bits");
    return Weight(a.raw + b.raw);
  }

  Weight& operator+=(Weight o) { return *this = *this + o; }

  // INF_RAW is the largest raw value, so n < ∞ falls out of the raw order.
  friend constexpr auto operator<=>(Weight a, Weight b) = default;

  friend std::ostream& operator<<(std::ostream& os, Weight w) {
    if (w.is_inf()) return os << "inf";
    return os << w.raw;
  }

 private:
  static constexpr uint64_t INF_RAW = std::numeric_limits<uint64_t>::max();
  explicit constexpr Weight(uint64_t r) : raw(r) {}
  uint64_t raw;
};

}  // namespace wlg
