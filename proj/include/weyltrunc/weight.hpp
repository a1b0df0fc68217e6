#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "weyltrunc/checked.hpp"

namespace weyltrunc {

inline constexpr std::size_t kMaxRank = 8;

/// Integral weight in the fundamental-weight basis: coords[i] = <x, alpha_i^v>.
///
/// Fixed capacity so weights are trivially copyable and cheap to hash; all
/// arithmetic is overflow-checked.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank);
  Weight(std::initializer_list<std::int64_t> coords);
  explicit Weight(std::span<const std::int64_t> coords);

  std::size_t rank() const noexcept { return rank_; }
  std::int64_t operator[](std::size_t i) const noexcept { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) noexcept { return coords_[i]; }
  std::span<const std::int64_t> coords() const noexcept { return {coords_.data(), rank_}; }

  bool is_zero() const noexcept;
  bool is_dominant() const noexcept;
  bool is_antidominant() const noexcept;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(std::int64_t k);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a) { return a *= k; }
  friend Weight operator*(Weight a, std::int64_t k) { return a *= k; }
  Weight operator-() const;

  // Lexicographic on coordinates (unused slots are always zero).
  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::array<std::int64_t, kMaxRank> coords_{};
  std::size_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto c : w.coords()) {
      h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Sorted, duplicate-free list of weights. Set equality is list equality.
using WeightSet = std::vector<Weight>;

inline WeightSet make_weight_set(std::vector<Weight> ws) {
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

inline bool contains(const WeightSet& set, const Weight& x) {
  return std::binary_search(set.begin(), set.end(), x);
}

}  // namespace weyltrunc
