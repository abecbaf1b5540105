#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "chiral/group_analysis.h"
#include "chiral/perm_group.h"
#include "chiral/permutation.h"

namespace chiral {

/// Bit i set means index i is in the set. Alpha-form sets range over
/// {0..n-1}; sigma-form sets over {-1..n} are stored shifted by one.
using IndexMask = std::uint32_t;

IndexMask mask_of(std::initializer_list<int> indices, int offset = 0);

/// Generator tuple (a_1, ..., a_{n-1}) of a candidate C+-group, with the
/// implicit a_0 = 1. The ambient group is shared between copies.
///
/// Construction only checks membership in the ambient group; the shape
/// required of search tuples (a_1 of order at least 3, every other entry an
/// involution) is reported by has_cplus_shape().
class AlphaTuple {
 public:
  AlphaTuple(std::shared_ptr<const PermGroup> group, std::vector<Permutation> alphas);

  const PermGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const PermGroup>& group_ptr() const noexcept { return group_; }
  const std::vector<Permutation>& alphas() const noexcept { return alphas_; }

  std::size_t size() const noexcept { return alphas_.size(); }
  /// n, one more than the number of generators.
  std::size_t rank() const noexcept { return alphas_.size() + 1; }

  /// a_i for 0 <= i <= n-1, with a_0 the identity.
  const Permutation& alpha(std::size_t i) const;

  bool has_cplus_shape() const;

  AlphaTuple extended(const Permutation& next) const;

  friend bool operator==(const AlphaTuple& a, const AlphaTuple& b) { return a.alphas_ == b.alphas_; }
  /// Canonical serialization order: length, then generators in turn.
  friend std::strong_ordering operator<=>(const AlphaTuple& a, const AlphaTuple& b);

 private:
  std::shared_ptr<const PermGroup> group_;
  std::vector<Permutation> alphas_;
  Permutation identity_;
};

/// Distinguished rotations (s_1, ..., s_{n-1}).
class SigmaTuple {
 public:
  SigmaTuple(std::shared_ptr<const PermGroup> group, std::vector<Permutation> sigmas);

  const PermGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const PermGroup>& group_ptr() const noexcept { return group_; }
  const std::vector<Permutation>& sigmas() const noexcept { return sigmas_; }
  std::size_t size() const noexcept { return sigmas_.size(); }
  std::size_t rank() const noexcept { return sigmas_.size() + 1; }

  friend bool operator==(const SigmaTuple& a, const SigmaTuple& b) { return a.sigmas_ == b.sigmas_; }

 private:
  std::shared_ptr<const PermGroup> group_;
  std::vector<Permutation> sigmas_;
};

struct SchlafliType {
  std::vector<std::uint64_t> entries;

  std::string to_string() const;  // "{4,4}"
  friend auto operator<=>(const SchlafliType&, const SchlafliType&) = default;
};

struct PolytopeRecord {
  AlphaTuple alpha_tuple;
  std::size_t rank;
  SchlafliType schlafli;
  bool chiral;
  GroupOrder group_order;
};

PolytopeRecord make_record(const AlphaTuple& t, bool chiral);

/// Sorts by rank, then Schläfli type, then canonical generator order.
bool record_less(const PolytopeRecord& a, const PolytopeRecord& b);

// ---- alpha form ------------------------------------------------------------

/// a_i^-1 a_j with a_0 = 1.
Permutation rotation(const AlphaTuple& t, std::size_t i, std::size_t j);

/// <a_i^-1 a_j : i, j in J>.
PermGroup parabolic(const AlphaTuple& t, IndexMask indices);

/// Order 2 for every pair at distance at least 2 and order at least 3 for
/// consecutive pairs, over indices 0..n-1.
bool check_linear_diagram(const AlphaTuple& t);

/// G_J ∩ G_K = G_{J∩K} for every J, K with |J|, |K| >= 2.
bool check_intersection_property_plus(const AlphaTuple& t,
                                      std::uint64_t cap = kDefaultEnumerationCap);

/// (o(a_1), o(a_1^-1 a_2), ..., o(a_{n-2}^-1 a_{n-1})).
SchlafliType schlafli_type(const AlphaTuple& t);

/// (a_1^-1, a_2, ..., a_{n-1}): the enantiomorphic tuple.
AlphaTuple mirror(const AlphaTuple& t);

/// Whether some automorphism of G inverts every a_i. The tuple must
/// generate G; no other precondition is checked.
bool has_inverting_automorphism(const AlphaTuple& t);

/// Chiral iff no automorphism inverts every generator. Requires that t
/// generates G and passes the linear-diagram and IC+ checks (InputError
/// otherwise).
bool is_chiral(const AlphaTuple& t, std::uint64_t cap = kDefaultEnumerationCap);

// ---- conversions -----------------------------------------------------------

/// a_k = s_1 s_2 ... s_k.
AlphaTuple alpha_from_sigma(const SigmaTuple& s);

/// s_1 = a_1, s_k = a_{k-1}^-1 a_k.
SigmaTuple sigma_from_alpha(const AlphaTuple& t);

// ---- automorphisms ---------------------------------------------------------

/// Whether src_i -> dst_i extends to an automorphism of G, decided by the
/// order of the paired subgroup of G x G. Throws InputError if src does not
/// generate G, lengths differ, or some dst_i lies outside G.
bool extends_to_automorphism(const PermGroup& group, std::span<const Permutation> src,
                             std::span<const Permutation> dst);

namespace detail {

/// extends_to_automorphism without the precondition checks; src must
/// generate `group` and dst must lie in it.
bool automorphism_extends(const PermGroup& group, std::span<const Permutation> src,
                          std::span<const Permutation> dst);

/// Orders of the short words x_i, x_i x_j, x_i x_j^-1, x_i x_j x_k (i<j<k).
/// Equal for two tuples related by an automorphism.
std::vector<std::uint64_t> word_order_signature(std::span<const Permutation> xs);

}  // namespace detail

// ---- sigma form ------------------------------------------------------------

/// s_i s_{i+1} ... s_j for 1 <= i <= j <= n-1; the identity when i = 0 or
/// j = n. InputError outside 0 <= i <= j <= n.
Permutation tau_sigma(const SigmaTuple& s, std::size_t i, std::size_t j);

/// A_I = <tau_{r,s} : r <= s, r-1 and s in I> for I ⊆ {-1..n}; bit k of the
/// mask stands for index k-1.
PermGroup parabolic_sigma(const SigmaTuple& s, IndexMask shifted_indices);

/// A_I ∩ A_J = A_{I∩J} for all I, J ⊆ {-1..n}.
bool check_intersection_property_sigma(const SigmaTuple& s,
                                       std::uint64_t cap = kDefaultEnumerationCap);

/// (s_i s_{i+1} ... s_j)^2 = 1 for all 1 <= i < j <= n-1.
bool check_sigma_relations(const SigmaTuple& s);

/// (s_1^-1, s_1^2 s_2, s_3, ..., s_{n-1}): images under the regularity
/// automorphism, which is also the sigma form of the mirror tuple.
std::vector<Permutation> regularity_images(const SigmaTuple& s);

// ---- parabolic memo --------------------------------------------------------

/// Per-tuple memo of alpha-form parabolic subgroups keyed by index mask.
/// Not shared between threads.
class ParabolicCache {
 public:
  explicit ParabolicCache(AlphaTuple t);

  const AlphaTuple& tuple() const noexcept { return tuple_; }
  const PermGroup& get(IndexMask indices);

  /// Cache for t extended by one generator; subgroups not involving the new
  /// index are carried over.
  ParabolicCache extended(const Permutation& next) const;

 private:
  AlphaTuple tuple_;
  std::vector<std::shared_ptr<const PermGroup>> groups_;
};

/// IC+ restricted to pairs J, K where J ∪ K meets `touching` (all pairs
/// when touching has every bit set). Counts checked pairs into *pairs_checked
/// when given.
bool intersection_property_plus(ParabolicCache& cache, IndexMask touching, std::uint64_t cap,
                                std::uint64_t* pairs_checked = nullptr);

}  // namespace chiral
