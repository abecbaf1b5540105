#include "chiral/group_analysis.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>

#include "chiral/errors.h"

namespace chiral {

namespace {

void check_cap(const PermGroup& group, std::uint64_t cap) {
  if (group.order() > GroupOrder(cap))
    throw CapacityError("group order " + group.order().to_string() + " exceeds enumeration cap " +
                        std::to_string(cap));
}

std::vector<Permutation> nontrivial_generators(const PermGroup& group) {
  std::vector<Permutation> out;
  for (const auto& g : group.generators())
    if (!g.is_identity()) out.push_back(g);
  return out;
}

// Stabilizer of `seed` in G for a right action given by act(point, s).
// Schreier generators are added one by one until |orbit| * |stab| = |G|.
template <class Key, class Hash, class Act>
PermGroup orbit_stabilizer(const PermGroup& group, Key seed, Act act) {
  const auto gens = nontrivial_generators(group);
  std::vector<Key> orbit{seed};
  std::vector<Permutation> reps{Permutation(group.degree())};
  std::unordered_map<Key, std::size_t, Hash> index{{seed, 0}};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (const auto& s : gens) {
      Key y = act(orbit[k], s);
      if (index.emplace(y, orbit.size()).second) {
        orbit.push_back(std::move(y));
        reps.push_back(reps[k] * s);
      }
    }
  }

  PermGroup stab = PermGroup::trivial(group.degree());
  const GroupOrder target = group.order();
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (const auto& s : gens) {
      if (stab.order() * orbit.size() == target) return stab;
      const Key y = act(orbit[k], s);
      Permutation schreier = reps[k] * s * inverse(reps[index.at(y)]);
      if (!stab.contains(schreier)) stab = stab.with_generator(schreier);
    }
  }
  return stab;
}

// Smallest generator of the cyclic group <x>; identifies the subgroup.
Permutation cyclic_key(const Permutation& x) {
  const std::uint64_t n = element_order(x);
  Permutation best = x;
  Permutation cur = x;
  for (std::uint64_t k = 2; k < n; ++k) {
    cur = cur * x;
    if (std::gcd(k, n) == 1 && cur < best) best = cur;
  }
  return best;
}

}  // namespace

std::vector<ClassData> conjugacy_classes(const PermGroup& group, std::uint64_t cap) {
  check_cap(group, cap);
  const auto elems = group.elements(cap);
  const auto gens = nontrivial_generators(group);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

  std::vector<bool> seen(elems.size(), false);
  std::vector<ClassData> classes;
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < elems.size(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    queue.assign(1, start);
    std::size_t best = start;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Permutation& x = elems[queue[q]];
      if (x < elems[best]) best = queue[q];
      for (const auto& s : gens) {
        std::size_t j = index.at(conjugate(x, s));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    classes.push_back({elems[best], queue.size(), element_order(elems[best])});
  }
  std::sort(classes.begin(), classes.end(), [](const ClassData& a, const ClassData& b) {
    return std::tie(a.element_order, a.size, a.representative) <
           std::tie(b.element_order, b.size, b.representative);
  });
  return classes;
}

std::vector<Permutation> involutions(const PermGroup& group, std::uint64_t cap) {
  check_cap(group, cap);
  std::vector<Permutation> out;
  group.for_each_element(cap, [&](const Permutation& p) {
    if (p.is_involution()) out.push_back(p);
  });
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup centralizer(const PermGroup& group, const Permutation& g, std::uint64_t cap) {
  if (!group.contains(g)) throw InputError("centralizer: element " + g.to_cycle_string() + " not in group");
  check_cap(group, cap);
  return orbit_stabilizer<Permutation, PermutationHash>(
      group, g, [](const Permutation& x, const Permutation& s) { return conjugate(x, s); });
}

PermGroup cyclic_normalizer(const PermGroup& group, const Permutation& g, std::uint64_t cap) {
  if (!group.contains(g))
    throw InputError("cyclic_normalizer: element " + g.to_cycle_string() + " not in group");
  check_cap(group, cap);
  if (g.is_identity()) return group;
  return orbit_stabilizer<Permutation, PermutationHash>(
      group, cyclic_key(g),
      [](const Permutation& x, const Permutation& s) { return cyclic_key(conjugate(x, s)); });
}

PermGroup subgroup_intersection(const PermGroup& h, const PermGroup& k, std::uint64_t cap) {
  if (h.degree() != k.degree()) throw InputError("subgroup_intersection: degree mismatch");
  const PermGroup& small = h.order() <= k.order() ? h : k;
  const PermGroup& large = h.order() <= k.order() ? k : h;
  if (small.order() > GroupOrder(cap))
    throw CapacityError("subgroup_intersection: orders " + h.order().to_string() + " and " +
                        k.order().to_string() + " both exceed enumeration cap " +
                        std::to_string(cap));
  PermGroup result = PermGroup::trivial(h.degree());
  small.for_each_element(cap, [&](const Permutation& p) {
    if (large.contains(p) && !result.contains(p)) result = result.with_generator(p);
  });
  return result;
}

std::uint64_t intersection_order(const PermGroup& h, const PermGroup& k, std::uint64_t cap,
                                 std::uint64_t stop_after) {
  if (h.degree() != k.degree()) throw InputError("intersection_order: degree mismatch");
  const PermGroup& small = h.order() <= k.order() ? h : k;
  const PermGroup& large = h.order() <= k.order() ? k : h;
  if (small.order() > GroupOrder(cap))
    throw CapacityError("intersection: orders " + h.order().to_string() + " and " +
                        k.order().to_string() + " both exceed enumeration cap " +
                        std::to_string(cap));
  if (large.order() == small.order() && small.is_subgroup_of(large)) return small.order().to_u64();
  std::uint64_t count = 0;
  small.visit_elements(cap, [&](const Permutation& p) {
    if (large.contains(p)) ++count;
    return count <= stop_after;
  });
  return count;
}

}  // namespace chiral
