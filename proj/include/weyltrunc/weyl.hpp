#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "weyltrunc/root_system.hpp"
#include "weyltrunc/weight.hpp"
#include "weyltrunc/weyl_element.hpp"

namespace weyltrunc {

inline constexpr std::uint64_t kDefaultGroupCap = 100000;

WeylElement simple_reflection_element(const RootSystem& rs, std::size_t i);

/// Canonical form of the group element s_{a1} ... s_{aL}; the word need not be reduced.
WeylElement canonicalize(const RootSystem& rs, std::span<const std::uint8_t> word);

/// Linear action. w = s_{a1}...s_{aL} acts by applying s_{aL} first.
Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& x);

WeylElement multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);
inline std::size_t length(const WeylElement& w) { return w.length(); }
WeylElement longest_element(const RootSystem& rs);

/// w(rho). Since rho is regular this determines w.
Weight rho_image(const RootSystem& rs, const WeylElement& w);
/// Inverse of rho_image; `image` must lie in W rho.
WeylElement element_from_rho_image(const RootSystem& rs, Weight image);

/// Matrix of w on fundamental-weight coordinates (row-major, column j = w(omega_j)).
std::vector<std::int64_t> matrix(const RootSystem& rs, const WeylElement& w);

/// Bruhat-Chevalley order u <= w by descent recursion on a left descent of w.
bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w);

/// Unique minimal-length w with x = w(x^-), x^- the antidominant orbit member.
WeylElement minimal_orbit_element(const RootSystem& rs, const Weight& x);

enum class OrbitRep { Dominant, Antidominant };

struct OrbitRepresentative {
  Weight weight;  // x^+ (or x^-)
  WeylElement w;  // minimal length, with apply(w, weight) == x
};

/// Dominant (or antidominant) member of the W-orbit of x.
OrbitRepresentative dominant_rep(const RootSystem& rs, const Weight& x, OrbitRep mode = OrbitRep::Dominant);

/// Dominant orbit member only; avoids building the element.
Weight dominant_weight(const RootSystem& rs, Weight x);

/// Every element of W exactly once, ordered by (length, word). Cached per
/// root system; throws ResourceError if |W| exceeds cap.
const std::vector<WeylElement>& enumerate_group(const RootSystem& rs, std::uint64_t cap = kDefaultGroupCap);

}  // namespace weyltrunc
