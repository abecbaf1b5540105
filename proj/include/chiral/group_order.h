#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace chiral {

/// Exact group order. Backed by 128-bit unsigned arithmetic; any product
/// that would overflow throws CapacityError instead of wrapping.
class GroupOrder {
 public:
  __extension__ using Rep = unsigned __int128;

  constexpr GroupOrder() = default;
  constexpr explicit GroupOrder(std::uint64_t v) : value_(v) {}

  GroupOrder& operator*=(std::uint64_t factor);
  friend GroupOrder operator*(GroupOrder a, std::uint64_t f) { return a *= f; }

  constexpr Rep value() const noexcept { return value_; }

  bool fits_u64() const noexcept { return value_ <= UINT64_MAX; }
  /// Throws CapacityError when the order does not fit.
  std::uint64_t to_u64() const;
  double to_double() const noexcept { return static_cast<double>(value_); }

  std::string to_string() const;

  friend constexpr bool operator==(const GroupOrder&, const GroupOrder&) = default;
  friend constexpr std::strong_ordering operator<=>(const GroupOrder& a, const GroupOrder& b) {
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(const GroupOrder& a, std::uint64_t b) { return a.value_ == b; }
  friend constexpr std::strong_ordering operator<=>(const GroupOrder& a, std::uint64_t b) {
    return a.value_ <=> static_cast<Rep>(b);
  }

 private:
  Rep value_ = 1;
};

}  // namespace chiral
