#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace weyltrunc {

class WeylElement;

namespace detail {
// The word must already be canonical; only weyl.cpp calls this.
WeylElement element_from_canonical_word(std::vector<std::uint8_t> word);
}  // namespace detail

/// Element of a finite Weyl group, stored as its canonical reduced word: the
/// lexicographically least reduced word in the 0-based simple reflections.
///
/// Only the weyl module mints non-identity values, so equality of words is
/// equality of group elements.
class WeylElement {
 public:
  WeylElement() = default;  // identity

  std::span<const std::uint8_t> word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  bool is_identity() const noexcept { return word_.empty(); }

  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  std::string to_string() const;  // "e" or "s1 s2 ..." (1-based labels)

 private:
  friend WeylElement detail::element_from_canonical_word(std::vector<std::uint8_t>);
  explicit WeylElement(std::vector<std::uint8_t> word) : word_(std::move(word)) {}
  std::vector<std::uint8_t> word_;
};

}  // namespace weyltrunc
