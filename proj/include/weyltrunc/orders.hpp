#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "weyltrunc/affine.hpp"
#include "weyltrunc/root_system.hpp"
#include "weyltrunc/weight.hpp"

namespace weyltrunc {

enum class OrderTag { Dominance, Excellent, AntipodalExcellent, StrongLinkage };

/// Lowercase tag used on the command line and in JSON.
std::string_view to_string(OrderTag tag);
/// Throws ConfigError on an unknown tag.
OrderTag parse_order_tag(std::string_view text);

/// How the Bruhat clause of the excellent order treats weights in different
/// W-orbits. SameOrbit applies it only when x^+ == x'^+; CrossOrbit applies it
/// whenever the dominance clause fails (exploration only).
enum class ExcellentReading { SameOrbit, CrossOrbit };

inline constexpr std::uint64_t kDefaultLinkageBudget = 1'000'000;

/// x <= x' in dominance: x' - x is a non-negative integral combination of simple roots.
bool dominance_leq(const RootSystem& rs, const Weight& x, const Weight& xp);
bool dominance_less(const RootSystem& rs, const Weight& x, const Weight& xp);

bool excellent_leq(const RootSystem& rs, const Weight& x, const Weight& xp,
                   ExcellentReading reading = ExcellentReading::SameOrbit);

/// x <=° x'  iff  -x <= -x'.
bool antipodal_excellent_leq(const RootSystem& rs, const Weight& x, const Weight& xp,
                             ExcellentReading reading = ExcellentReading::SameOrbit);

/// lambda ^ mu: a chain of affine reflections s_{beta,np}, each moving down
/// in dominance. Breadth-first search down from mu inside the dominance
/// interval [lambda, mu]; throws ResourceError past `budget` visited nodes.
bool strong_linkage_leq(const AffineContext& ctx, const Weight& lambda, const Weight& mu,
                        std::uint64_t budget = kDefaultLinkageBudget);

/// s_{beta,np}.x = x - (<x + rho, beta^v> - np) beta, beta = positive root k.
Weight affine_reflection_dot(const AffineContext& ctx, std::size_t k, std::int64_t n, const Weight& x);

/// A decidable order. StrongLinkage requires an AffineContext.
class OrderKind {
 public:
  static OrderKind dominance() { return OrderKind(OrderTag::Dominance); }
  static OrderKind excellent(ExcellentReading r = ExcellentReading::SameOrbit) {
    return OrderKind(OrderTag::Excellent, r);
  }
  static OrderKind antipodal_excellent(ExcellentReading r = ExcellentReading::SameOrbit) {
    return OrderKind(OrderTag::AntipodalExcellent, r);
  }
  static OrderKind strong_linkage(AffineContext ctx, std::uint64_t budget = kDefaultLinkageBudget);
  /// Builds the kind for `tag`; StrongLinkage takes ctx, which must then be set.
  static OrderKind from_tag(OrderTag tag, const std::optional<AffineContext>& ctx,
                            ExcellentReading r = ExcellentReading::SameOrbit);

  OrderTag tag() const noexcept { return tag_; }
  ExcellentReading reading() const noexcept { return reading_; }
  const std::optional<AffineContext>& context() const noexcept { return ctx_; }

  bool leq(const RootSystem& rs, const Weight& x, const Weight& xp) const;

 private:
  explicit OrderKind(OrderTag tag, ExcellentReading r = ExcellentReading::SameOrbit) : tag_(tag), reading_(r) {}

  OrderTag tag_;
  ExcellentReading reading_ = ExcellentReading::SameOrbit;
  std::optional<AffineContext> ctx_;
  std::uint64_t budget_ = kDefaultLinkageBudget;
};

}  // namespace weyltrunc
