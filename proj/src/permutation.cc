#include "chiral/permutation.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "chiral/errors.h"

namespace chiral {

namespace {

void check_degree(std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree)
    throw InputError("permutation degree " + std::to_string(degree) + " outside [1, " +
                     std::to_string(kMaxDegree) + "]");
}

void check_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InputError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                     std::to_string(q.degree()));
}

}  // namespace

Permutation::Permutation(std::size_t degree) {
  check_degree(degree);
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  check_degree(images.size());
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw InputError("image array is not a bijection");
    seen[x] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::size_t a = cycle[k];
      if (a < 1 || a > degree)
        throw InputError("point " + std::to_string(a) + " out of range 1.." +
                         std::to_string(degree));
      if (used[a - 1])
        throw InputError("point " + std::to_string(a) + " repeated");
      used[a - 1] = true;
      std::size_t b = cycle[(k + 1) % cycle.size()];
      p.images_[a - 1] = static_cast<Point>(b - 1);
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_involution() const noexcept {
  bool moved = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i) continue;
    moved = true;
    if (images_[images_[i]] != i) return false;
  }
  return moved;
}

std::size_t Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return images_.size();
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ',';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                b.images_.begin(), b.images_.end());
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_same_degree(p, q);
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q[p[i]];
  return Permutation(std::move(out), Permutation::Trusted{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[p[i]] = static_cast<Point>(i);
  return Permutation(std::move(out), Permutation::Trusted{});
}

Permutation power(const Permutation& p, std::int64_t k) {
  Permutation base = k < 0 ? inverse(p) : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Permutation result(p.degree());
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Permutation conjugate(const Permutation& p, const Permutation& h) {
  check_same_degree(p, h);
  // (h^-1 p h)(h(i)) = h(p(i))
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[h[i]] = h[p[i]];
  return Permutation(std::move(out), Permutation::Trusted{});
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  std::vector<bool> done(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (done[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = start; !done[x]; x = p[x]) {
      done[x] = true;
      ++len;
    }
    std::uint64_t g = std::gcd(order, len);
    std::uint64_t factor = len / g;
    if (order > std::numeric_limits<std::uint64_t>::max() / factor)
      throw CapacityError("element order exceeds 64 bits");
    order *= factor;
  }
  return order;
}

}  // namespace chiral
