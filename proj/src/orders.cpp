#include "weyltrunc/orders.hpp"

#include <deque>
#include <string>
#include <unordered_set>

#include "weyltrunc/errors.hpp"
#include "weyltrunc/weyl.hpp"

namespace weyltrunc {

std::string_view to_string(OrderTag tag) {
  switch (tag) {
    case OrderTag::Dominance: return "dominance";
    case OrderTag::Excellent: return "excellent";
    case OrderTag::AntipodalExcellent: return "antipodal-excellent";
    case OrderTag::StrongLinkage: return "strong-linkage";
  }
  return "unknown";
}

OrderTag parse_order_tag(std::string_view text) {
  for (auto tag : {OrderTag::Dominance, OrderTag::Excellent, OrderTag::AntipodalExcellent, OrderTag::StrongLinkage})
    if (to_string(tag) == text) return tag;
  throw ConfigError("unknown order '" + std::string(text) +
                    "' (expected dominance, excellent, antipodal-excellent or strong-linkage)");
}

bool dominance_leq(const RootSystem& rs, const Weight& x, const Weight& xp) {
  const auto coeffs = rs.solve_root_coefficients(xp - x);
  if (!coeffs) return false;
  for (auto c : *coeffs)
    if (c < 0) return false;
  return true;
}

bool dominance_less(const RootSystem& rs, const Weight& x, const Weight& xp) {
  return x != xp && dominance_leq(rs, x, xp);
}

bool excellent_leq(const RootSystem& rs, const Weight& x, const Weight& xp, ExcellentReading reading) {
  const auto top = dominant_weight(rs, x);
  const auto top_p = dominant_weight(rs, xp);
  if (dominance_less(rs, top, top_p)) return true;
  if (reading == ExcellentReading::SameOrbit && top != top_p) return false;
  return bruhat_leq(rs, minimal_orbit_element(rs, x), minimal_orbit_element(rs, xp));
}

bool antipodal_excellent_leq(const RootSystem& rs, const Weight& x, const Weight& xp, ExcellentReading reading) {
  return excellent_leq(rs, -x, -xp, reading);
}

Weight affine_reflection_dot(const AffineContext& ctx, std::size_t k, std::int64_t n, const Weight& x) {
  const auto& rs = ctx.root_system();
  const auto c = checked::sub(rs.pairing(x + rs.rho(), k), checked::mul(n, ctx.p()));
  return x - c * rs.positive_roots()[k];
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  auto q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

bool strong_linkage_leq(const AffineContext& ctx, const Weight& lambda, const Weight& mu, std::uint64_t budget) {
  if (lambda == mu) return true;
  const auto& rs = ctx.root_system();
  // Every step lowers the weight in dominance, so the chain stays in [lambda, mu].
  if (!dominance_leq(rs, lambda, mu)) return false;
  const auto p = ctx.p();
  std::unordered_set<Weight, WeightHash> seen{mu};
  std::deque<Weight> queue{mu};
  while (!queue.empty()) {
    const Weight nu = queue.front();
    queue.pop_front();
    const auto shifted = nu + rs.rho();
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      const auto& beta = rs.positive_roots()[k];
      const auto a = rs.pairing(shifted, k);
      // Downward steps need c = a - np > 0; c grows as n decreases.
      for (auto n = floor_div(a - 1, p);; --n) {
        const auto c = checked::sub(a, checked::mul(n, p));
        const Weight next = nu - c * beta;
        if (!dominance_leq(rs, lambda, next)) break;
        if (next == lambda) return true;
        if (seen.insert(next).second) {
          if (seen.size() > budget) {
            throw ResourceError("strong linkage search exceeded the node budget of " + std::to_string(budget));
          }
          queue.push_back(next);
        }
      }
    }
  }
  return false;
}

OrderKind OrderKind::strong_linkage(AffineContext ctx, std::uint64_t budget) {
  OrderKind k(OrderTag::StrongLinkage);
  k.ctx_ = std::move(ctx);
  k.budget_ = budget;
  return k;
}

OrderKind OrderKind::from_tag(OrderTag tag, const std::optional<AffineContext>& ctx, ExcellentReading r) {
  switch (tag) {
    case OrderTag::Dominance: return dominance();
    case OrderTag::Excellent: return excellent(r);
    case OrderTag::AntipodalExcellent: return antipodal_excellent(r);
    case OrderTag::StrongLinkage:
      if (!ctx) throw ConfigError("strong-linkage order requires p");
      return strong_linkage(*ctx);
  }
  throw ConfigError("unknown order tag");
}

bool OrderKind::leq(const RootSystem& rs, const Weight& x, const Weight& xp) const {
  switch (tag_) {
    case OrderTag::Dominance: return dominance_leq(rs, x, xp);
    case OrderTag::Excellent: return excellent_leq(rs, x, xp, reading_);
    case OrderTag::AntipodalExcellent: return antipodal_excellent_leq(rs, x, xp, reading_);
    case OrderTag::StrongLinkage: return strong_linkage_leq(*ctx_, x, xp, budget_);
  }
  return false;
}

}  // namespace weyltrunc
