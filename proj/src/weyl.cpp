#include "weyltrunc/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "weyltrunc/detail/group_cache.hpp"
#include "weyltrunc/errors.hpp"

namespace weyltrunc {

namespace detail {
WeylElement element_from_canonical_word(std::vector<std::uint8_t> word) { return WeylElement(std::move(word)); }
}  // namespace detail

std::string WeylElement::to_string() const {
  if (word_.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word_.size(); ++k) os << (k ? " " : "") << 's' << (word_[k] + 1);
  return os.str();
}

namespace {

Weight apply_word(const RootSystem& rs, std::span<const std::uint8_t> word, Weight x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = rs.simple_reflection(*it, x);
  return x;
}

// Smallest i with x_i < 0 (sign = -1) or x_i > 0 (sign = +1); rank if none.
std::size_t first_index_with_sign(const Weight& x, int sign) {
  for (std::size_t i = 0; i < x.rank(); ++i)
    if ((sign < 0 && x[i] < 0) || (sign > 0 && x[i] > 0)) return i;
  return x.rank();
}

}  // namespace

WeylElement simple_reflection_element(const RootSystem& rs, std::size_t i) {
  if (i >= rs.rank()) throw std::out_of_range("simple reflection index out of range");
  return detail::element_from_canonical_word({static_cast<std::uint8_t>(i)});
}

Weight rho_image(const RootSystem& rs, const WeylElement& w) { return apply_word(rs, w.word(), rs.rho()); }

WeylElement element_from_rho_image(const RootSystem& rs, Weight image) {
  // The lexicographically least reduced word starts with the smallest left
  // descent; s_i is a left descent of w iff <w rho, alpha_i^v> < 0.
  std::vector<std::uint8_t> word;
  for (;;) {
    const auto i = first_index_with_sign(image, -1);
    if (i == image.rank()) break;
    word.push_back(static_cast<std::uint8_t>(i));
    image = rs.simple_reflection(i, image);
  }
  if (image != rs.rho()) throw PreconditionError("weight " + image.to_string() + " is not in the W-orbit of rho");
  return detail::element_from_canonical_word(std::move(word));
}

WeylElement canonicalize(const RootSystem& rs, std::span<const std::uint8_t> word) {
  for (auto a : word)
    if (a >= rs.rank()) throw std::out_of_range("simple reflection index out of range");
  return element_from_rho_image(rs, apply_word(rs, word, rs.rho()));
}

Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& x) { return apply_word(rs, w.word(), x); }

WeylElement multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
  return element_from_rho_image(rs, apply(rs, u, rho_image(rs, v)));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  std::vector<std::uint8_t> rev(w.word().rbegin(), w.word().rend());
  return canonicalize(rs, rev);
}

WeylElement longest_element(const RootSystem& rs) { return element_from_rho_image(rs, -rs.rho()); }

std::vector<std::int64_t> matrix(const RootSystem& rs, const WeylElement& w) {
  const auto n = rs.rank();
  std::vector<std::int64_t> m(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Weight omega(n);
    omega[j] = 1;
    const auto col = apply(rs, w, omega);
    for (std::size_t i = 0; i < n; ++i) m[i * n + j] = col[i];
  }
  return m;
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w) {
  if (u.length() > w.length()) return false;
  Weight uu = rho_image(rs, u);
  Weight ww = rho_image(rs, w);
  // Pick a left descent s of w: u <= w iff min(u, su) <= sw.
  for (;;) {
    const auto i = first_index_with_sign(ww, -1);
    if (i == ww.rank()) return uu == rs.rho();
    ww = rs.simple_reflection(i, ww);
    if (uu[i] < 0) uu = rs.simple_reflection(i, uu);
  }
}

OrbitRepresentative dominant_rep(const RootSystem& rs, const Weight& x, OrbitRep mode) {
  // Each step crosses one wall, so the step count is the minimal length.
  const int sign = mode == OrbitRep::Dominant ? -1 : +1;
  std::vector<std::uint8_t> steps;
  Weight y = x;
  for (;;) {
    const auto i = first_index_with_sign(y, sign);
    if (i == y.rank()) break;
    steps.push_back(static_cast<std::uint8_t>(i));
    y = rs.simple_reflection(i, y);
  }
  // y = s_{ik}...s_{i1} x, hence x = s_{i1}...s_{ik} y.
  return {y, canonicalize(rs, steps)};
}

Weight dominant_weight(const RootSystem& rs, Weight x) {
  for (;;) {
    const auto i = first_index_with_sign(x, -1);
    if (i == x.rank()) return x;
    x = rs.simple_reflection(i, x);
  }
}

WeylElement minimal_orbit_element(const RootSystem& rs, const Weight& x) {
  return dominant_rep(rs, x, OrbitRep::Antidominant).w;
}

const std::vector<WeylElement>& enumerate_group(const RootSystem& rs, std::uint64_t cap) {
  if (rs.weyl_order() > cap) {
    throw ResourceError("Weyl group of " + rs.spec().name() + " has " + std::to_string(rs.weyl_order()) +
                        " elements, exceeding the enumeration cap " + std::to_string(cap));
  }
  auto& cache = rs.group_cache();
  std::call_once(cache.once, [&] {
    std::unordered_set<Weight, WeightHash> seen{rs.rho()};
    std::vector<Weight> frontier{rs.rho()};
    std::vector<Weight> all{rs.rho()};
    while (!frontier.empty()) {
      std::vector<Weight> next;
      for (const auto& v : frontier) {
        for (std::size_t i = 0; i < rs.rank(); ++i) {
          auto s = rs.simple_reflection(i, v);
          if (seen.insert(s).second) {
            next.push_back(s);
            all.push_back(s);
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<WeylElement> elements;
    elements.reserve(all.size());
    for (const auto& v : all) elements.push_back(element_from_rho_image(rs, v));
    std::sort(elements.begin(), elements.end(), [](const WeylElement& a, const WeylElement& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a < b;
    });
    cache.elements = std::move(elements);
  });
  return cache.elements;
}

}  // namespace weyltrunc
