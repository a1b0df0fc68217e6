#pragma once

#include <cstddef>
#include <cstdint>

#include "weyltrunc/orders.hpp"
#include "weyltrunc/weyl.hpp"

namespace weyltrunc {

/// Enumeration limits. Exceeding one raises ResourceError.
struct Caps {
  std::uint64_t max_box_volume = 20'000'000;
  std::uint64_t max_group_order = kDefaultGroupCap;
  std::uint64_t linkage_budget = kDefaultLinkageBudget;
  std::size_t max_counterexamples = 64;
  std::size_t max_hasse_nodes = 4096;
};

}  // namespace weyltrunc
