#include "chiral/perm_group.h"

#include <string>

#include "chiral/errors.h"

namespace chiral {

namespace {
struct BoundExceeded {};
}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ == 0 || degree_ > kMaxDegree)
    throw InputError("group degree " + std::to_string(degree_) + " out of range");
  for (const auto& g : generators_) check_degree(g);
  for (const auto& g : generators_) add_generator(g);
  recompute_order();
}

std::optional<PermGroup> PermGroup::build_bounded(std::size_t degree,
                                                 std::vector<Permutation> generators,
                                                 const GroupOrder& bound) {
  PermGroup out(degree, {});
  out.bound_ = bound;
  try {
    for (const auto& g : generators) {
      out.check_degree(g);
      out.generators_.push_back(g);
      out.add_generator(g);
    }
  } catch (const BoundExceeded&) {
    return std::nullopt;
  }
  out.bound_.reset();
  out.recompute_order();
  return out;
}

void PermGroup::check_bound() const {
  if (!bound_) return;
  GroupOrder lower(1);
  for (const auto& l : levels_) {
    lower *= l.orbit.size();
    if (lower > *bound_) throw BoundExceeded{};
  }
}

void PermGroup::check_degree(const Permutation& p) const {
  if (p.degree() != degree_)
    throw InputError("permutation of degree " + std::to_string(p.degree()) +
                     " used with group of degree " + std::to_string(degree_));
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& l : levels_) out.push_back(l.base_point);
  return out;
}

std::pair<Permutation, std::size_t> PermGroup::sift(const Permutation& p,
                                                    std::size_t from_level) const {
  check_degree(p);
  Permutation h = p;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    std::int32_t idx = level.index[h[level.base_point]];
    if (idx < 0) return {std::move(h), l};
    if (idx != 0) h = h * level.inverse_transversal[idx];
  }
  return {std::move(h), levels_.size()};
}

bool PermGroup::contains(const Permutation& p) const {
  auto [residue, level] = sift(p);
  return level == levels_.size() && residue.is_identity();
}

void PermGroup::rebuild_level(std::size_t i) {
  Level& level = levels_[i];
  level.orbit.assign(1, level.base_point);
  level.index.assign(degree_, -1);
  level.index[level.base_point] = 0;
  level.transversal.assign(1, Permutation(degree_));
  level.inverse_transversal.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point x = level.orbit[k];
    for (const auto& s : level.generators) {
      Point y = s[x];
      if (level.index[y] >= 0) continue;
      level.index[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(level.transversal[k] * s);
      level.inverse_transversal.push_back(inverse(level.transversal.back()));
    }
  }
}

namespace {

// Records a residue that fixes the first `level` base points as a strong
// generator of every level up to `level`, appending a base point if needed.
void install(std::vector<PermGroup::Level>& levels, std::vector<Permutation>& strong,
             const Permutation& residue, std::size_t level) {
  strong.push_back(residue);
  if (level == levels.size()) {
    PermGroup::Level fresh;
    fresh.base_point = static_cast<Point>(residue.first_moved_point());
    levels.push_back(std::move(fresh));
  }
  for (std::size_t l = 0; l <= level; ++l) levels[l].generators.push_back(residue);
}

}  // namespace

void PermGroup::add_generator(const Permutation& p) {
  auto [residue, level] = sift(p);
  if (residue.is_identity()) return;
  install(levels_, strong_, residue, level);
  for (std::size_t l = 0; l <= level; ++l) rebuild_level(l);
  check_bound();
  complete_from(level);
}

// Verifies Schreier generators level by level, moving down from `start`.
// Every level below the one under test is complete at test time, so a
// Schreier generator that sifts to the identity is in the stabilizer.
void PermGroup::complete_from(std::size_t start) {
  std::size_t i = start;
  while (true) {
    bool added = false;
    const Level& level = levels_[i];
    for (std::size_t k = 0; !added && k < level.orbit.size(); ++k) {
      for (const auto& s : level.generators) {
        Point image = s[level.orbit[k]];
        Permutation h = level.transversal[k] * s * level.inverse_transversal[level.index[image]];
        if (h.is_identity()) continue;
        auto [residue, stop] = sift(h, i + 1);
        if (residue.is_identity()) continue;
        install(levels_, strong_, residue, stop);
        for (std::size_t l = 0; l <= stop; ++l) rebuild_level(l);
        check_bound();
        i = stop;
        added = true;
        break;
      }
    }
    if (added) continue;
    if (i == 0) break;
    --i;
  }
}

void PermGroup::recompute_order() {
  order_ = GroupOrder(1);
  for (const auto& l : levels_) order_ *= l.orbit.size();
}

void PermGroup::for_each_element(std::uint64_t cap,
                                 const std::function<void(const Permutation&)>& fn) const {
  visit_elements(cap, [&](const Permutation& p) {
    fn(p);
    return true;
  });
}

bool PermGroup::visit_elements(std::uint64_t cap,
                               const std::function<bool(const Permutation&)>& fn) const {
  if (order_ > GroupOrder(cap))
    throw CapacityError("group order " + order_.to_string() + " exceeds enumeration cap " +
                        std::to_string(cap));
  // element = t[k-1] * ... * t[0]; deeper levels are applied first.
  auto recurse = [&](auto&& self, std::size_t remaining, const Permutation& prefix) -> bool {
    if (remaining == 0) return fn(prefix);
    const Level& level = levels_[remaining - 1];
    for (const auto& t : level.transversal)
      if (!self(self, remaining - 1, prefix * t)) return false;
    return true;
  };
  return recurse(recurse, levels_.size(), Permutation(degree_));
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Permutation> out;
  for_each_element(cap, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  for (const auto& s : strong_)
    if (!other.contains(s)) return false;
  return true;
}

PermGroup PermGroup::with_generator(const Permutation& p) const {
  check_degree(p);
  PermGroup out = *this;
  out.generators_.push_back(p);
  out.add_generator(p);
  out.recompute_order();
  return out;
}

namespace {

std::vector<Permutation> paired_generators(
    std::size_t d, std::span<const std::pair<Permutation, Permutation>> pairs) {
  std::vector<Permutation> gens;
  gens.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a.degree() != d || b.degree() != d)
      throw InputError("paired_group: pair degree differs from group degree " + std::to_string(d));
    std::vector<Point> images(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      images[i] = a[i];
      images[d + i] = static_cast<Point>(b[i] + d);
    }
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return gens;
}

}  // namespace

PermGroup paired_group(const PermGroup& group,
                       std::span<const std::pair<Permutation, Permutation>> pairs) {
  const std::size_t d = group.degree();
  return PermGroup(2 * d, paired_generators(d, pairs));
}

std::optional<PermGroup> paired_group_bounded(
    const PermGroup& group, std::span<const std::pair<Permutation, Permutation>> pairs,
    const GroupOrder& bound) {
  const std::size_t d = group.degree();
  return PermGroup::build_bounded(2 * d, paired_generators(d, pairs), bound);
}

}  // namespace chiral
