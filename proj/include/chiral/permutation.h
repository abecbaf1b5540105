#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chiral {

// Points are stored 0-based; all text (cycle notation, files) is 1-based.
using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = std::size_t{1} << 16;

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products are written left to right and applied left first:
/// `p * q` maps i to q(p(i)). This matches the right-action convention of
/// most computer algebra systems and is used everywhere in this library.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws InputError unless `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images);

  /// Builds from 1-based disjoint cycles; fixed points may be omitted.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t point) const noexcept { return images_[point]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool is_involution() const noexcept;

  /// Smallest moved point, or degree() for the identity.
  std::size_t first_moved_point() const noexcept;

  /// 1-based disjoint-cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Degree first, then images lexicographically. This is the canonical
  /// serialization order used for every sorted output.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  struct Trusted {};
  Permutation(std::vector<Point> images, Trusted) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation conjugate(const Permutation&, const Permutation&);

  std::vector<Point> images_;
};

/// p then q.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

Permutation inverse(const Permutation& p);

/// p^k for any integer k (negative powers invert first).
Permutation power(const Permutation& p, std::int64_t k);

/// h^-1 p h, so that (i^h)^(p^h) = (i^p)^h.
Permutation conjugate(const Permutation& p, const Permutation& h);

/// lcm of the cycle lengths. Throws CapacityError if it does not fit in 64 bits.
std::uint64_t element_order(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    auto img = p.images();
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(img.data()), img.size_bytes()));
  }
};

}  // namespace chiral
