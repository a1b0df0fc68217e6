#pragma once

// Test-only brute-force oracles. These deliberately avoid the library's
// canonical-word machinery: group elements are integer matrices acting on
// fundamental-weight coordinates, built directly from the Cartan matrix.

#include <cstdint>
#include <set>
#include <vector>

#include "weyltrunc/root_system.hpp"
#include "weyltrunc/weight.hpp"
#include "weyltrunc/weyl_element.hpp"

namespace oracle {

using weyltrunc::RootSystem;
using weyltrunc::Weight;
using Matrix = std::vector<std::vector<std::int64_t>>;

inline Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// s_i(x)_j = x_j - x_i * cartan(j, i)
inline Matrix reflection(const RootSystem& rs, std::size_t i) {
  auto m = identity(rs.rank());
  for (std::size_t j = 0; j < rs.rank(); ++j) m[j][i] -= rs.cartan(j, i);
  return m;
}

inline Matrix product(const Matrix& a, const Matrix& b) {
  const auto n = a.size();
  Matrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

template <class Word>
Matrix word_matrix(const RootSystem& rs, const Word& word) {
  auto m = identity(rs.rank());
  for (auto s : word) m = product(m, reflection(rs, s));
  return m;
}

inline Weight act(const Matrix& m, const Weight& x) {
  Weight y(x.rank());
  for (std::size_t i = 0; i < x.rank(); ++i)
    for (std::size_t j = 0; j < x.rank(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

/// Every element of W as a matrix, by breadth-first closure under simple reflections.
inline std::set<Matrix> group_matrices(const RootSystem& rs) {
  std::set<Matrix> seen{identity(rs.rank())};
  std::vector<Matrix> frontier{identity(rs.rank())};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& g : frontier)
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        auto h = product(reflection(rs, i), g);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Subword property: u <= w iff some subword of one reduced word of w
/// multiplies to u. Exponential in length(w).
inline bool bruhat_subword(const RootSystem& rs, const weyltrunc::WeylElement& u, const weyltrunc::WeylElement& w) {
  const auto target = word_matrix(rs, u.word());
  const auto word = w.word();
  const std::size_t len = word.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    std::vector<std::uint8_t> sub;
    for (std::size_t k = 0; k < len; ++k)
      if (mask >> k & 1) sub.push_back(word[k]);
    if (word_matrix(rs, sub) == target) return true;
  }
  return false;
}

/// W-orbit of x through the matrix group.
inline std::set<Weight> orbit(const RootSystem& rs, const Weight& x) {
  std::set<Weight> out;
  for (const auto& g : group_matrices(rs)) out.insert(act(g, x));
  return out;
}

/// All weights with |coords| <= r.
inline std::vector<Weight> box(std::size_t rank, std::int64_t r) {
  std::vector<Weight> out;
  Weight x(rank);
  for (std::size_t i = 0; i < rank; ++i) x[i] = -r;
  for (;;) {
    out.push_back(x);
    std::size_t i = 0;
    while (i < rank && x[i] == r) x[i++] = -r;
    if (i == rank) break;
    ++x[i];
  }
  return out;
}

}  // namespace oracle
