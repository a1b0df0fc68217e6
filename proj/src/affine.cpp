#include "weyltrunc/affine.hpp"

#include <optional>

#include "weyltrunc/errors.hpp"

namespace weyltrunc {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

AffineContext::AffineContext(RootSystem rs, std::int64_t p) : rs_(std::move(rs)), p_(p), prime_(is_prime(p)) {
  if (p_ <= rs_.coxeter_number()) {
    throw ConfigError("p = " + std::to_string(p_) + " must exceed the Coxeter number h = " +
                      std::to_string(rs_.coxeter_number()) + " of " + rs_.spec().name());
  }
  if (!prime_) warnings_.push_back("p = " + std::to_string(p_) + " is not prime; proceeding with p as a plain modulus");
  for (const auto& w : enumerate_group(rs_)) rho_orbit_.push_back(rho_image(rs_, w));
}

Weight dot(const AffineContext& ctx, const WeylElement& w, const Weight& y) {
  const auto& rs = ctx.root_system();
  return apply(rs, w, y + rs.rho()) - rs.rho();
}

Weight dot(const AffineContext& ctx, const AffineElement& g, const Weight& y) {
  if (!in_root_lattice(ctx.root_system(), g.translation))
    throw PreconditionError("affine translation " + g.translation.to_string() + " is not in the root lattice");
  return dot(ctx, g.w, y) + ctx.p() * g.translation;
}

bool in_p_root_lattice(const AffineContext& ctx, const Weight& x) {
  Weight q(x.rank());
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (x[i] % ctx.p() != 0) return false;
    q[i] = x[i] / ctx.p();
  }
  return in_root_lattice(ctx.root_system(), q);
}

bool in_principal_orbit(const AffineContext& ctx, const Weight& y) {
  // y = w.0 + p z  <=>  y + rho - w(rho) in pY.
  const auto& rs = ctx.root_system();
  const auto shifted = y + rs.rho();
  for (const auto& image : ctx.rho_orbit()) {
    if (in_p_root_lattice(ctx, shifted - image)) return true;
  }
  return false;
}

bool is_regular(const RootSystem& rs, const Weight& x) {
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
    if (rs.pairing(x, k) == 0) return false;
  return true;
}

DotRepresentative dominant_dot_rep(const AffineContext& ctx, const Weight& nu) {
  if (!in_p_root_lattice(ctx, nu)) throw PreconditionError("weight " + nu.to_string() + " is not in pY");
  const auto& rs = ctx.root_system();
  std::optional<DotRepresentative> found;
  std::size_t hits = 0;
  for (const auto& w : enumerate_group(rs)) {
    auto image = dot(ctx, w, nu);
    if (image.is_dominant()) {
      ++hits;
      if (!found) found = DotRepresentative{w, image};
    }
  }
  if (hits != 1) {
    throw InvariantViolation("expected exactly one w with w.nu dominant for nu = " + nu.to_string() + ", found " +
                             std::to_string(hits));
  }
  if (!is_regular(rs, nu + rs.rho()))
    throw InvariantViolation("nu + rho is singular for nu = " + nu.to_string());
  if (!apply(rs, found->w, nu).is_dominant())
    throw InvariantViolation("w(nu) is not dominant for nu = " + nu.to_string());
  return *found;
}

}  // namespace weyltrunc
