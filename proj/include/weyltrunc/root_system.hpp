#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weyltrunc/weight.hpp"

namespace weyltrunc {

inline constexpr int kDefaultRankCap = 4;
inline constexpr int kHardRankCap = 6;

struct RootSystemSpec {
  char type_letter = 'A';
  int rank = 1;

  std::string name() const { return std::string(1, type_letter) + std::to_string(rank); }
  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

struct BuildOptions {
  // Ranks above kDefaultRankCap are accepted up to this value, with a warning.
  int rank_cap = kDefaultRankCap;
};

/// Throws ConfigError unless (type, rank) names an irreducible finite
/// crystallographic type within the rank cap.
void validate_spec(const RootSystemSpec& spec, const BuildOptions& options = {});

namespace detail {
struct GroupCache;
}

/// Immutable Cartan and lattice data for one finite irreducible root system,
/// in Bourbaki numbering. Weights are in fundamental-weight coordinates and
/// root coefficients are in the simple-root basis.
class RootSystem {
 public:
  const RootSystemSpec& spec() const noexcept { return spec_; }
  std::size_t rank() const noexcept { return rank_; }

  /// Entry (i, j) = <alpha_j, alpha_i^v>.
  std::int64_t cartan(std::size_t i, std::size_t j) const noexcept { return cartan_[i * rank_ + j]; }

  const Weight& simple_root(std::size_t i) const noexcept { return simple_roots_[i]; }
  const std::vector<Weight>& positive_roots() const noexcept { return positive_roots_; }
  /// Simple-root coefficients of positive root k.
  const std::vector<std::int64_t>& root_coefficients(std::size_t k) const noexcept { return root_coeffs_[k]; }
  /// Simple-coroot coefficients of the coroot of positive root k.
  const std::vector<std::int64_t>& coroot_coefficients(std::size_t k) const noexcept { return coroot_coeffs_[k]; }
  bool is_short(std::size_t k) const noexcept { return short_[k]; }

  const Weight& rho() const noexcept { return rho_; }
  const Weight& alpha0() const noexcept { return positive_roots_[alpha0_index_]; }
  std::size_t alpha0_index() const noexcept { return alpha0_index_; }
  std::int64_t coxeter_number() const noexcept { return coxeter_number_; }
  std::uint64_t weyl_order() const noexcept { return weyl_order_; }
  std::int64_t cartan_determinant() const noexcept { return det_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// <x, beta^v> for positive root index k.
  std::int64_t pairing(const Weight& x, std::size_t k) const;
  /// <x, beta^v> for the coroot of alpha0.
  std::int64_t pairing_alpha0(const Weight& x) const { return pairing(x, alpha0_index_); }

  /// s_i(x) = x - <x, alpha_i^v> alpha_i.
  Weight simple_reflection(std::size_t i, const Weight& x) const;

  /// Coefficients of x in the simple-root basis, or nullopt if x is not in
  /// the root lattice.
  std::optional<std::vector<std::int64_t>> solve_root_coefficients(const Weight& x) const;

  detail::GroupCache& group_cache() const { return *cache_; }

 private:
  friend RootSystem build_root_system(const RootSystemSpec&, const BuildOptions&);
  RootSystem() = default;

  RootSystemSpec spec_;
  std::size_t rank_ = 0;
  std::vector<std::int64_t> cartan_;
  std::vector<std::int64_t> adjugate_;
  std::int64_t det_ = 1;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<std::int64_t>> root_coeffs_;
  std::vector<std::vector<std::int64_t>> coroot_coeffs_;
  std::vector<bool> short_;
  Weight rho_;
  std::size_t alpha0_index_ = 0;
  std::int64_t coxeter_number_ = 0;
  std::uint64_t weyl_order_ = 0;
  std::vector<std::string> warnings_;
  std::shared_ptr<detail::GroupCache> cache_;
};

RootSystem build_root_system(const RootSystemSpec& spec, const BuildOptions& options = {});

/// Index of the positive root equal to `root`, or nullopt.
std::optional<std::size_t> find_positive_root(const RootSystem& rs, const Weight& root);

/// Range-checked pairing with positive root `alpha`.
std::int64_t pairing(const RootSystem& rs, const Weight& x, std::size_t alpha);

bool in_root_lattice(const RootSystem& rs, const Weight& x);

}  // namespace weyltrunc
