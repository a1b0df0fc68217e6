#pragma once

#include <mutex>
#include <vector>

#include "weyltrunc/weyl_element.hpp"

namespace weyltrunc::detail {

// Lazily built full element list of W. Built at most once under concurrent
// first use.
struct GroupCache {
  std::once_flag once;
  std::vector<WeylElement> elements;
};

}  // namespace weyltrunc::detail
