#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weyltrunc/affine.hpp"
#include "weyltrunc/caps.hpp"
#include "weyltrunc/orders.hpp"
#include "weyltrunc/report.hpp"
#include "weyltrunc/weight.hpp"

namespace weyltrunc {

/// y in Lambda_m: y in the root lattice and |<y, alpha^v>| <= mp for all positive alpha.
bool in_lambda(const AffineContext& ctx, std::int64_t m, const Weight& y);
/// y in Gamma_m: y dominant, in W_p.0, and <y, alpha^v> <= mp for all positive alpha.
bool in_gamma(const AffineContext& ctx, std::int64_t m, const Weight& y);

/// Lambda_m, scanned over the box |coords| <= mp.
WeightSet lambda_set(const AffineContext& ctx, std::int64_t m, const Caps& caps = {});
/// Gamma_m, scanned over the dominant box [0, mp]^rank.
WeightSet gamma_set(const AffineContext& ctx, std::int64_t m, const Caps& caps = {});
/// Gamma_m as Lambda_m intersected with the dominant part of W_p.0, where the
/// orbit is generated as {w.0 + pz} rather than tested pointwise.
WeightSet gamma_from_lambda(const AffineContext& ctx, const WeightSet& lambda, std::int64_t m);
/// set intersected with pY.
WeightSet p_lattice_points(const AffineContext& ctx, const WeightSet& set);

struct TruncationPair {
  std::int64_t m = 1;
  WeightSet lambda;
  WeightSet lambda_py;
  WeightSet gamma;
};

TruncationPair build_truncation_pair(const AffineContext& ctx, std::int64_t m, const Caps& caps = {});

/// Finite superset against which downward closure is tested.
struct Universe {
  std::string description;
  WeightSet points;
};

/// Root-lattice points with |coords| <= (m+1)p.
Universe lambda_universe(const AffineContext& ctx, std::int64_t m, const Caps& caps = {});
/// Dominant members of W_p.0 with coords <= (m+1)p.
Universe gamma_universe(const AffineContext& ctx, std::int64_t m, const Caps& caps = {});

/// Passes iff no x in universe \ set lies below some x' in set.
VerificationReport verify_ideal(const RootSystem& rs, const WeightSet& set, const OrderKind& order,
                                const Universe& universe, const Caps& caps = {}, std::string check_id = "ideal");

namespace serial {
/// Reference: plain double loop over universe x set with OrderKind::leq.
VerificationReport verify_ideal(const RootSystem& rs, const WeightSet& set, const OrderKind& order,
                                const Universe& universe, const Caps& caps = {}, std::string check_id = "ideal");
}  // namespace serial

struct HypothesesReport {
  VerificationReport h1;  // W.(Lambda ∩ pY) ∩ X+ ⊆ Gamma
  VerificationReport h2;  // W.Gamma ∩ pY ⊆ Lambda
};

HypothesesReport verify_hypotheses(const AffineContext& ctx, const WeightSet& lambda, const WeightSet& gamma,
                                   const Caps& caps = {});

/// nu in Lambda_m ∩ pY -> the unique dominant weight of W.nu. Needs p > 2h-2.
Weight bijection_forward(const AffineContext& ctx, std::int64_t m, const Weight& nu);

struct BackwardImage {
  Weight nu;                 // the unique py in W.gamma
  WeylElement w;             // w.nu == gamma, so w(y) is dominant
  std::int64_t lhs = 0;      // p <w y, alpha0^v>
  std::int64_t middle = 0;   // mp + 2h - 2
  std::int64_t right = 0;    // (m+1)p
};

/// gamma in Gamma_m -> the unique nu in W.gamma lying in pY. Needs
/// p > 2h-2. Asserts p<wy, alpha0^v> <= mp + 2h - 2 < (m+1)p.
BackwardImage bijection_backward_detail(const AffineContext& ctx, std::int64_t m, const Weight& gamma);
inline Weight bijection_backward(const AffineContext& ctx, std::int64_t m, const Weight& gamma) {
  return bijection_backward_detail(ctx, m, gamma).nu;
}

/// Every w with w.gamma in pY (exactly one when gamma lies in W_p.0).
std::vector<WeylElement> p_lattice_dot_hits(const AffineContext& ctx, const Weight& gamma);

/// Runs every check for one (p, m). Checks claimed only for p > 2h-2 are
/// recorded as informational below that bound.
VerificationReport verify_full_suite(const AffineContext& ctx, std::int64_t m, const Caps& caps = {});

}  // namespace weyltrunc
