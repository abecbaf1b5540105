#pragma once

#include <cstdint>
#include <vector>

#include "chiral/perm_group.h"
#include "chiral/permutation.h"

namespace chiral {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct ClassData {
  Permutation representative;  // lexicographically smallest member
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
};

/// Conjugacy classes by orbit expansion over the enumerated group, sorted by
/// (element order, size, representative).
std::vector<ClassData> conjugacy_classes(const PermGroup& group,
                                         std::uint64_t cap = kDefaultEnumerationCap);

/// All elements of order 2, sorted.
std::vector<Permutation> involutions(const PermGroup& group,
                                     std::uint64_t cap = kDefaultEnumerationCap);

/// {h in G : hg = gh}, as the stabilizer of g under conjugation.
/// Throws InputError when g is not in G.
PermGroup centralizer(const PermGroup& group, const Permutation& g,
                      std::uint64_t cap = kDefaultEnumerationCap);

/// {h in G : <g>^h = <g>}, as the stabilizer of the cyclic subgroup under
/// conjugation. Throws InputError when g is not in G.
PermGroup cyclic_normalizer(const PermGroup& group, const Permutation& g,
                            std::uint64_t cap = kDefaultEnumerationCap);

/// H ∩ K by enumerating the smaller group and sifting through the larger.
/// Throws CapacityError if both orders exceed the cap.
PermGroup subgroup_intersection(const PermGroup& h, const PermGroup& k,
                                std::uint64_t cap = kDefaultEnumerationCap);

/// |H ∩ K|, counting at most `stop_after + 1` elements (pass UINT64_MAX for
/// the exact value).
std::uint64_t intersection_order(const PermGroup& h, const PermGroup& k, std::uint64_t cap,
                                 std::uint64_t stop_after = UINT64_MAX);

}  // namespace chiral
