#include "weyltrunc/weight.hpp"

#include <sstream>

#include "weyltrunc/errors.hpp"

namespace weyltrunc {

namespace {

std::size_t checked_rank(std::size_t rank) {
  if (rank > kMaxRank) throw ConfigError("weight rank " + std::to_string(rank) + " exceeds " + std::to_string(kMaxRank));
  return rank;
}

}  // namespace

Weight::Weight(std::size_t rank) : rank_(checked_rank(rank)) {}

Weight::Weight(std::initializer_list<std::int64_t> coords) : rank_(checked_rank(coords.size())) {
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

Weight::Weight(std::span<const std::int64_t> coords) : rank_(checked_rank(coords.size())) {
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

bool Weight::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.begin() + rank_, [](auto c) { return c == 0; });
}

bool Weight::is_dominant() const noexcept {
  return std::all_of(coords_.begin(), coords_.begin() + rank_, [](auto c) { return c >= 0; });
}

bool Weight::is_antidominant() const noexcept {
  return std::all_of(coords_.begin(), coords_.begin() + rank_, [](auto c) { return c <= 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank_ != rank_) throw PreconditionError("rank mismatch in weight addition");
  for (std::size_t i = 0; i < rank_; ++i) coords_[i] = checked::add(coords_[i], o.coords_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank_ != rank_) throw PreconditionError("rank mismatch in weight subtraction");
  for (std::size_t i = 0; i < rank_; ++i) coords_[i] = checked::sub(coords_[i], o.coords_[i]);
  return *this;
}

Weight& Weight::operator*=(std::int64_t k) {
  for (std::size_t i = 0; i < rank_; ++i) coords_[i] = checked::mul(coords_[i], k);
  return *this;
}

Weight Weight::operator-() const {
  Weight r(rank_);
  for (std::size_t i = 0; i < rank_; ++i) r.coords_[i] = checked::neg(coords_[i]);
  return r;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rank_; ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

}  // namespace weyltrunc
