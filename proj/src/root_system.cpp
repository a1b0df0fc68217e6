#include "weyltrunc/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "weyltrunc/checked.hpp"
#include "weyltrunc/detail/group_cache.hpp"
#include "weyltrunc/errors.hpp"

namespace weyltrunc {

namespace {

using Matrix = std::vector<std::int64_t>;  // row-major, n x n

// Symmetrized Gram matrix (alpha_i, alpha_j) of the simple roots in Bourbaki
// numbering, scaled so every entry is an integer.
Matrix gram_matrix(char type, std::size_t n) {
  Matrix b(n * n, 0);
  auto set = [&](std::size_t i, std::size_t j, std::int64_t v) {
    b[i * n + j] = v;
    b[j * n + i] = v;
  };
  auto chain = [&](std::int64_t diag, std::int64_t off) {
    for (std::size_t i = 0; i < n; ++i) b[i * n + i] = diag;
    for (std::size_t i = 0; i + 1 < n; ++i) set(i, i + 1, off);
  };
  switch (type) {
    case 'A':
      chain(2, -1);
      break;
    case 'B':  // alpha_n short
      chain(4, -2);
      b[(n - 1) * n + (n - 1)] = 2;
      break;
    case 'C':  // alpha_n long
      chain(2, -1);
      b[(n - 1) * n + (n - 1)] = 4;
      set(n - 2, n - 1, -2);
      break;
    case 'D':
      chain(2, -1);
      set(n - 2, n - 1, 0);
      set(n - 3, n - 1, -1);
      break;
    case 'E':  // 1-3-4-5-6-7-8 with 2 attached to 4
      for (std::size_t i = 0; i < n; ++i) b[i * n + i] = 2;
      set(0, 2, -1);
      set(1, 3, -1);
      for (std::size_t i = 2; i + 1 < n; ++i) set(i, i + 1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      b = {4, -2, 0, 0,  //
           -2, 4, -2, 0,  //
           0, -2, 2, -1,  //
           0, 0, -1, 2};
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      b = {2, -3,  //
           -3, 6};
      break;
    default:
      break;
  }
  return b;
}

std::uint64_t weyl_group_order(char type, std::uint64_t n) {
  auto fact = [](std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 2; i <= k; ++i) r *= i;
    return r;
  };
  switch (type) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << n) * fact(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
    default: return 0;
  }
}

// Fraction-free Gaussian elimination.
std::int64_t bareiss_determinant(Matrix m, std::size_t n) {
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap * n + k] == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = checked::sub(checked::mul(m[i * n + j], m[k * n + k]), checked::mul(m[i * n + k], m[k * n + j]));
        m[i * n + j] = num / prev;
      }
    }
    prev = m[k * n + k];
  }
  return sign * m[(n - 1) * n + (n - 1)];
}

Matrix adjugate(const Matrix& m, std::size_t n) {
  Matrix adj(n * n, 0);
  if (n == 1) {
    adj[0] = 1;
    return adj;
  }
  Matrix minor((n - 1) * (n - 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == c) continue;
          minor[k++] = m[i * n + j];
        }
      }
      auto cof = bareiss_determinant(minor, n - 1);
      adj[c * n + r] = ((r + c) % 2 == 0) ? cof : -cof;  // transpose of cofactors
    }
  }
  return adj;
}

}  // namespace

void validate_spec(const RootSystemSpec& spec, const BuildOptions& options) {
  const int n = spec.rank;
  bool ok = false;
  switch (spec.type_letter) {
    case 'A': ok = n >= 1; break;
    case 'B':
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: ok = false;
  }
  if (!ok) {
    throw ConfigError("invalid root system type/rank (" + std::string(1, spec.type_letter) + ", " +
                      std::to_string(n) + "): not an irreducible finite crystallographic type");
  }
  if (options.rank_cap > kHardRankCap) {
    throw ConfigError("rank cap " + std::to_string(options.rank_cap) + " exceeds hard limit " +
                      std::to_string(kHardRankCap));
  }
  if (n > options.rank_cap) {
    throw ConfigError("rank " + std::to_string(n) + " of " + spec.name() + " exceeds the rank cap " +
                      std::to_string(options.rank_cap));
  }
}

RootSystem build_root_system(const RootSystemSpec& spec, const BuildOptions& options) {
  validate_spec(spec, options);
  const auto n = static_cast<std::size_t>(spec.rank);

  RootSystem rs;
  rs.spec_ = spec;
  rs.rank_ = n;
  if (spec.rank > kDefaultRankCap) {
    rs.warnings_.push_back("rank " + std::to_string(spec.rank) + " exceeds the default cap " +
                           std::to_string(kDefaultRankCap) + "; Weyl group enumeration may be slow");
  }

  const Matrix gram = gram_matrix(spec.type_letter, n);
  rs.cartan_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.cartan_[i * n + j] = 2 * gram[i * n + j] / gram[i * n + i];

  rs.det_ = bareiss_determinant(rs.cartan_, n);
  rs.adjugate_ = adjugate(rs.cartan_, n);

  for (std::size_t j = 0; j < n; ++j) {
    Weight a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = rs.cartan(i, j);
    rs.simple_roots_.push_back(a);
  }

  // All roots as the W-orbit of the simple roots, in simple-root coefficients.
  using Coeffs = std::vector<std::int64_t>;
  std::set<Coeffs> roots;
  std::vector<Coeffs> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Coeffs e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<Coeffs> next;
    for (const auto& c : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t pair = 0;
        for (std::size_t j = 0; j < n; ++j) pair += rs.cartan(i, j) * c[j];
        Coeffs s = c;
        s[i] -= pair;
        if (roots.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Coeffs> positive;
  for (const auto& c : roots)
    if (std::all_of(c.begin(), c.end(), [](auto v) { return v >= 0; })) positive.push_back(c);
  std::sort(positive.begin(), positive.end(), [](const Coeffs& a, const Coeffs& b) {
    auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (ha != hb) return ha < hb;
    return a > b;
  });

  auto norm = [&](const Coeffs& c) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += c[i] * c[j] * gram[i * n + j];
    return s;
  };
  std::int64_t short_norm = norm(positive.front());
  for (const auto& c : positive) short_norm = std::min(short_norm, norm(c));

  std::int64_t best_height = -1;
  for (std::size_t k = 0; k < positive.size(); ++k) {
    const auto& c = positive[k];
    const auto beta_norm = norm(c);
    Weight w(n);
    Coeffs co(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) w[i] += rs.cartan(i, j) * c[j];
      // beta^v = sum_i c_i (alpha_i, alpha_i) / (beta, beta) alpha_i^v
      co[i] = c[i] * gram[i * n + i] / beta_norm;
    }
    rs.positive_roots_.push_back(w);
    rs.root_coeffs_.push_back(c);
    rs.coroot_coeffs_.push_back(co);
    const bool is_short = beta_norm == short_norm;
    rs.short_.push_back(is_short);
    const auto height = std::accumulate(c.begin(), c.end(), std::int64_t{0});
    if (is_short && height > best_height) {
      best_height = height;
      rs.alpha0_index_ = k;
    }
  }

  rs.rho_ = Weight(n);
  for (std::size_t i = 0; i < n; ++i) rs.rho_[i] = 1;
  rs.coxeter_number_ = static_cast<std::int64_t>(2 * positive.size() / n);
  rs.weyl_order_ = weyl_group_order(spec.type_letter, n);
  rs.cache_ = std::make_shared<detail::GroupCache>();
  return rs;
}

std::int64_t RootSystem::pairing(const Weight& x, std::size_t k) const {
  const auto& co = coroot_coeffs_[k];
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i) s = checked::add(s, checked::mul(co[i], x[i]));
  return s;
}

Weight RootSystem::simple_reflection(std::size_t i, const Weight& x) const {
  const std::int64_t c = x[i];
  if (c == 0) return x;
  Weight r = x;
  const auto& a = simple_roots_[i];
  for (std::size_t j = 0; j < rank_; ++j) r[j] = checked::sub(r[j], checked::mul(c, a[j]));
  return r;
}

std::optional<std::vector<std::int64_t>> RootSystem::solve_root_coefficients(const Weight& x) const {
  std::vector<std::int64_t> c(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < rank_; ++j) s = checked::add(s, checked::mul(adjugate_[i * rank_ + j], x[j]));
    if (s % det_ != 0) return std::nullopt;
    c[i] = s / det_;
  }
  return c;
}

std::optional<std::size_t> find_positive_root(const RootSystem& rs, const Weight& root) {
  const auto& roots = rs.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == root) return k;
  return std::nullopt;
}

std::int64_t pairing(const RootSystem& rs, const Weight& x, std::size_t alpha) {
  if (alpha >= rs.positive_roots().size()) {
    throw std::out_of_range("positive root index " + std::to_string(alpha) + " out of range for " + rs.spec().name());
  }
  return rs.pairing(x, alpha);
}

bool in_root_lattice(const RootSystem& rs, const Weight& x) { return rs.solve_root_coefficients(x).has_value(); }

}  // namespace weyltrunc
