#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weyltrunc/root_system.hpp"
#include "weyltrunc/weyl.hpp"

namespace weyltrunc {

bool is_prime(std::int64_t n);

/// A root system together with the modulus p of the affine Weyl group W_p.
/// Requires p > h. A non-prime p is accepted and recorded as a warning.
class AffineContext {
 public:
  AffineContext(RootSystem rs, std::int64_t p);

  const RootSystem& root_system() const noexcept { return rs_; }
  std::int64_t p() const noexcept { return p_; }
  bool p_is_prime() const noexcept { return prime_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  /// w(rho) for every w, in enumerate_group order.
  const std::vector<Weight>& rho_orbit() const noexcept { return rho_orbit_; }

  std::int64_t h() const noexcept { return rs_.coxeter_number(); }
  /// p > 2h - 2: the range in which the second inclusion and the 1-1
  /// correspondence are claimed.
  bool above_second_bound() const noexcept { return p_ > 2 * h() - 2; }

 private:
  RootSystem rs_;
  std::int64_t p_;
  bool prime_;
  std::vector<std::string> warnings_;
  std::vector<Weight> rho_orbit_;
};

/// Element (w, z) of W x| pY acting by y -> w.y + p z, with z in the root lattice.
struct AffineElement {
  WeylElement w;
  Weight translation;
};

/// w.y = w(y + rho) - rho.
Weight dot(const AffineContext& ctx, const WeylElement& w, const Weight& y);
Weight dot(const AffineContext& ctx, const AffineElement& g, const Weight& y);

/// x lies in pY.
bool in_p_root_lattice(const AffineContext& ctx, const Weight& x);

/// y in W_p.0.
bool in_principal_orbit(const AffineContext& ctx, const Weight& y);

bool is_regular(const RootSystem& rs, const Weight& x);
inline bool is_regular(const AffineContext& ctx, const Weight& x) { return is_regular(ctx.root_system(), x); }

struct DotRepresentative {
  WeylElement w;
  Weight weight;  // w.nu
};

/// For nu in pY: the unique w in W with w.nu dominant. Checks, by exhaustive
/// search over W, that w is unique, that w(nu) is dominant and that nu + rho
/// is regular; throws InvariantViolation otherwise.
DotRepresentative dominant_dot_rep(const AffineContext& ctx, const Weight& nu);

}  // namespace weyltrunc
