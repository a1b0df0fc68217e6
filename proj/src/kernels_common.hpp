#pragma once

#include <cstdint>
#include <string>

#include "weyltrunc/errors.hpp"
#include "weyltrunc/weight.hpp"

namespace weyltrunc::kernels::detail {

inline std::uint64_t box_volume(std::size_t rank, std::int64_t lo, std::int64_t hi, std::uint64_t max_volume) {
  if (hi < lo) return 0;
  const auto side = static_cast<std::uint64_t>(hi - lo + 1);
  std::uint64_t volume = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    if (__builtin_mul_overflow(volume, side, &volume) || volume > max_volume) {
      throw ResourceError("weight box [" + std::to_string(lo) + ", " + std::to_string(hi) + "]^" +
                          std::to_string(rank) + " has volume " +
                          (volume > max_volume ? "over " + std::to_string(max_volume) : std::string("overflowing")) +
                          ", exceeding the cap " + std::to_string(max_volume));
    }
  }
  return volume;
}

inline Weight decode_box_index(std::size_t rank, std::int64_t lo, std::int64_t side, std::uint64_t idx) {
  Weight x(rank);
  for (std::size_t i = rank; i-- > 0;) {
    x[i] = lo + static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(side));
    idx /= static_cast<std::uint64_t>(side);
  }
  return x;
}

}  // namespace weyltrunc::kernels::detail
