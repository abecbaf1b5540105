#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chiral/group_order.h"
#include "chiral/permutation.h"

namespace chiral {

/// A permutation group together with a stabilizer chain.
///
/// The chain is built by deterministic Schreier-Sims: generators are added
/// one at a time, each residue that fails to sift becomes a strong generator,
/// and a new base point (the smallest point the residue moves) is appended
/// whenever a residue fixes the whole current base. Two groups built from the
/// same generator list therefore have identical chains.
///
/// Immutable once constructed; concurrent const use is safe.
class PermGroup {
 public:
  struct Level {
    Point base_point = 0;
    /// Strong generators fixing every earlier base point.
    std::vector<Permutation> generators;
    /// Orbit of base_point in discovery order.
    std::vector<Point> orbit;
    /// point -> index into orbit/transversal, -1 when outside the orbit.
    std::vector<std::int32_t> index;
    /// transversal[k] maps base_point to orbit[k]; inverse_transversal[k] is its inverse.
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
  };

  /// Trivial group of degree 1.
  PermGroup() : PermGroup(1, {}) {}

  /// Throws InputError on a generator whose degree differs from `degree`.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  /// Builds the group generated by `generators` unless its order exceeds
  /// `bound`, in which case construction stops early and nullopt is returned.
  /// Partial chains give lower bounds on the order, so large groups are
  /// rejected without completing Schreier-Sims.
  static std::optional<PermGroup> build_bounded(std::size_t degree,
                                                std::vector<Permutation> generators,
                                                const GroupOrder& bound);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  const GroupOrder& order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return levels_.empty(); }

  bool contains(const Permutation& p) const;

  /// Residue of p after sifting, and the level at which sifting stopped
  /// (levels().size() when it passed every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& p, std::size_t from_level = 0) const;

  /// Every element exactly once, ordered by transversal indices with the
  /// deepest level varying slowest. Throws CapacityError if order() > cap.
  void for_each_element(std::uint64_t cap, const std::function<void(const Permutation&)>& fn) const;
  std::vector<Permutation> elements(std::uint64_t cap) const;
  /// Same order as for_each_element; stops once fn returns false and then
  /// returns false.
  bool visit_elements(std::uint64_t cap, const std::function<bool(const Permutation&)>& fn) const;

  /// True iff every generator of this group lies in `other`.
  bool is_subgroup_of(const PermGroup& other) const;

  /// This group extended by one more generator (the chain is reused).
  PermGroup with_generator(const Permutation& p) const;

 private:
  void check_degree(const Permutation& p) const;
  void add_generator(const Permutation& p);
  void rebuild_level(std::size_t i);
  void complete_from(std::size_t level);
  void recompute_order();
  void check_bound() const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  GroupOrder order_;
  std::optional<GroupOrder> bound_;
};

/// The subgroup of G x G acting on 2*degree points generated by the pairs:
/// pair.first acts on points 1..d and pair.second on d+1..2d.
PermGroup paired_group(const PermGroup& group,
                       std::span<const std::pair<Permutation, Permutation>> pairs);

/// paired_group, abandoned (nullopt) once its order provably exceeds `bound`.
std::optional<PermGroup> paired_group_bounded(
    const PermGroup& group, std::span<const std::pair<Permutation, Permutation>> pairs,
    const GroupOrder& bound);

}  // namespace chiral
