#include "chiral/cplus.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

#include "chiral/errors.h"

namespace chiral {

namespace {

void require_member(const PermGroup& group, const Permutation& p, const char* what) {
  if (p.degree() != group.degree())
    throw InputError(std::string(what) + ": degree " + std::to_string(p.degree()) +
                     " does not match group degree " + std::to_string(group.degree()));
  if (!group.contains(p))
    throw InputError(std::string(what) + ": " + p.to_cycle_string() + " is not in the group");
}

bool generates(const PermGroup& group, std::span<const Permutation> gens) {
  return PermGroup(group.degree(), {gens.begin(), gens.end()}).order() == group.order();
}

std::uint64_t order_u64(const PermGroup& g) { return g.order().to_u64(); }

}  // namespace

IndexMask mask_of(std::initializer_list<int> indices, int offset) {
  IndexMask m = 0;
  for (int i : indices) {
    int bit = i + offset;
    if (bit < 0 || bit >= 32) throw InputError("index " + std::to_string(i) + " out of range");
    m |= IndexMask{1} << bit;
  }
  return m;
}

// ---- tuples ----------------------------------------------------------------

AlphaTuple::AlphaTuple(std::shared_ptr<const PermGroup> group, std::vector<Permutation> alphas)
    : group_(std::move(group)), alphas_(std::move(alphas)) {
  if (!group_) throw InputError("AlphaTuple: null group");
  identity_ = Permutation(group_->degree());
  for (const auto& a : alphas_) require_member(*group_, a, "AlphaTuple");
}

const Permutation& AlphaTuple::alpha(std::size_t i) const {
  if (i == 0) return identity_;
  if (i > alphas_.size())
    throw InputError("alpha index " + std::to_string(i) + " out of range 0.." +
                     std::to_string(alphas_.size()));
  return alphas_[i - 1];
}

bool AlphaTuple::has_cplus_shape() const {
  if (alphas_.empty() || element_order(alphas_[0]) < 3) return false;
  return std::all_of(alphas_.begin() + 1, alphas_.end(),
                     [](const Permutation& a) { return a.is_involution(); });
}

AlphaTuple AlphaTuple::extended(const Permutation& next) const {
  require_member(*group_, next, "AlphaTuple::extended");
  AlphaTuple out = *this;
  out.alphas_.push_back(next);
  return out;
}

std::strong_ordering operator<=>(const AlphaTuple& a, const AlphaTuple& b) {
  if (auto c = a.alphas_.size() <=> b.alphas_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.alphas_.begin(), a.alphas_.end(),
                                                b.alphas_.begin(), b.alphas_.end());
}

SigmaTuple::SigmaTuple(std::shared_ptr<const PermGroup> group, std::vector<Permutation> sigmas)
    : group_(std::move(group)), sigmas_(std::move(sigmas)) {
  if (!group_) throw InputError("SigmaTuple: null group");
  for (const auto& s : sigmas_) require_member(*group_, s, "SigmaTuple");
}

std::string SchlafliType::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  return out + "}";
}

PolytopeRecord make_record(const AlphaTuple& t, bool chiral) {
  return PolytopeRecord{t, t.rank(), schlafli_type(t), chiral, t.group().order()};
}

bool record_less(const PolytopeRecord& a, const PolytopeRecord& b) {
  return std::tie(a.rank, a.schlafli, a.alpha_tuple) < std::tie(b.rank, b.schlafli, b.alpha_tuple);
}

// ---- alpha form ------------------------------------------------------------

Permutation rotation(const AlphaTuple& t, std::size_t i, std::size_t j) {
  return inverse(t.alpha(i)) * t.alpha(j);
}

PermGroup parabolic(const AlphaTuple& t, IndexMask indices) {
  const std::size_t count = t.size() + 1;
  if (count < 32 && (indices >> count) != 0)
    throw InputError("parabolic: index set exceeds 0.." + std::to_string(t.size()));
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < count; ++i) {
    if (!(indices >> i & 1)) continue;
    for (std::size_t j = i + 1; j < count; ++j)
      if (indices >> j & 1) gens.push_back(rotation(t, i, j));
  }
  return PermGroup(t.group().degree(), std::move(gens));
}

bool check_linear_diagram(const AlphaTuple& t) {
  const std::size_t count = t.size() + 1;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      const std::uint64_t o = element_order(rotation(t, i, j));
      if (j - i >= 2 && o != 2) return false;
      if (j - i == 1 && o < 3) return false;
    }
  return true;
}

ParabolicCache::ParabolicCache(AlphaTuple t) : tuple_(std::move(t)) {
  if (tuple_.size() >= 24) throw InputError("ParabolicCache: tuple too long");
  groups_.resize(std::size_t{1} << (tuple_.size() + 1));
}

const PermGroup& ParabolicCache::get(IndexMask indices) {
  auto& slot = groups_.at(indices);
  if (!slot) slot = std::make_shared<const PermGroup>(parabolic(tuple_, indices));
  return *slot;
}

ParabolicCache ParabolicCache::extended(const Permutation& next) const {
  ParabolicCache out(tuple_.extended(next));
  std::copy(groups_.begin(), groups_.end(), out.groups_.begin());
  return out;
}

bool intersection_property_plus(ParabolicCache& cache, IndexMask touching, std::uint64_t cap,
                                std::uint64_t* pairs_checked) {
  const std::size_t count = cache.tuple().size() + 1;
  const IndexMask full = (IndexMask{1} << count) - 1;
  std::vector<IndexMask> masks;
  for (IndexMask m = 0; m <= full; ++m)
    if (std::popcount(m) >= 2) masks.push_back(m);

  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = a + 1; b < masks.size(); ++b) {
      const IndexMask j = masks[a], k = masks[b];
      if (((j | k) & touching) == 0) continue;
      const IndexMask meet = j & k;
      if (meet == j || meet == k) continue;  // nested sets hold trivially
      if (pairs_checked) ++*pairs_checked;
      const PermGroup& gj = cache.get(j);
      const PermGroup& gk = cache.get(k);
      const std::uint64_t target = order_u64(cache.get(meet));
      // G_{J∩K} <= G_J ∩ G_K, whose order divides gcd(|G_J|, |G_K|).
      if (std::gcd(order_u64(gj), order_u64(gk)) == target) continue;
      if (intersection_order(gj, gk, cap, target) != target) return false;
    }
  }
  return true;
}

bool check_intersection_property_plus(const AlphaTuple& t, std::uint64_t cap) {
  ParabolicCache cache(t);
  return intersection_property_plus(cache, ~IndexMask{0}, cap);
}

SchlafliType schlafli_type(const AlphaTuple& t) {
  SchlafliType out;
  for (std::size_t k = 1; k <= t.size(); ++k) out.entries.push_back(element_order(rotation(t, k - 1, k)));
  return out;
}

AlphaTuple mirror(const AlphaTuple& t) {
  if (t.size() == 0) throw InputError("mirror: empty tuple");
  auto alphas = t.alphas();
  alphas[0] = inverse(alphas[0]);
  return AlphaTuple(t.group_ptr(), std::move(alphas));
}

bool has_inverting_automorphism(const AlphaTuple& t) {
  std::vector<Permutation> inv;
  for (const auto& a : t.alphas()) inv.push_back(inverse(a));
  return detail::automorphism_extends(t.group(), t.alphas(), inv);
}

bool is_chiral(const AlphaTuple& t, std::uint64_t cap) {
  if (!generates(t.group(), t.alphas())) throw InputError("is_chiral: tuple does not generate the group");
  if (!check_linear_diagram(t)) throw InputError("is_chiral: tuple fails the linear diagram conditions");
  if (!check_intersection_property_plus(t, cap))
    throw InputError("is_chiral: tuple fails the intersection property");
  return !has_inverting_automorphism(t);
}

// ---- conversions -----------------------------------------------------------

AlphaTuple alpha_from_sigma(const SigmaTuple& s) {
  std::vector<Permutation> alphas;
  for (const auto& sigma : s.sigmas())
    alphas.push_back(alphas.empty() ? sigma : alphas.back() * sigma);
  return AlphaTuple(s.group_ptr(), std::move(alphas));
}

SigmaTuple sigma_from_alpha(const AlphaTuple& t) {
  std::vector<Permutation> sigmas;
  for (std::size_t k = 1; k <= t.size(); ++k) sigmas.push_back(rotation(t, k - 1, k));
  return SigmaTuple(t.group_ptr(), std::move(sigmas));
}

// ---- automorphisms ---------------------------------------------------------

bool extends_to_automorphism(const PermGroup& group, std::span<const Permutation> src,
                             std::span<const Permutation> dst) {
  if (src.size() != dst.size())
    throw InputError("extends_to_automorphism: " + std::to_string(src.size()) + " sources but " +
                     std::to_string(dst.size()) + " targets");
  for (const auto& x : src) require_member(group, x, "extends_to_automorphism");
  for (const auto& y : dst) require_member(group, y, "extends_to_automorphism");
  if (!generates(group, src)) throw InputError("extends_to_automorphism: sources do not generate the group");
  return detail::automorphism_extends(group, src, dst);
}

namespace detail {

bool automorphism_extends(const PermGroup& group, std::span<const Permutation> src,
                          std::span<const Permutation> dst) {
  for (std::size_t i = 0; i < src.size(); ++i)
    if (element_order(src[i]) != element_order(dst[i])) return false;
  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (std::size_t i = 0; i < src.size(); ++i) pairs.emplace_back(src[i], dst[i]);
  // The graph of a well-defined map has exactly |G| elements; anything
  // larger means src_i -> dst_i is not a function on G.
  auto graph = paired_group_bounded(group, pairs, group.order());
  if (!graph || graph->order() != group.order()) return false;
  return generates(group, dst);
}

std::vector<std::uint64_t> word_order_signature(std::span<const Permutation> xs) {
  std::vector<std::uint64_t> sig;
  const std::size_t n = xs.size();
  std::vector<Permutation> inv;
  for (const auto& x : xs) inv.push_back(inverse(x));
  for (std::size_t i = 0; i < n; ++i) sig.push_back(element_order(xs[i]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      sig.push_back(element_order(xs[i] * xs[j]));
      sig.push_back(element_order(xs[i] * inv[j]));
      for (std::size_t k = j + 1; k < n; ++k) sig.push_back(element_order(xs[i] * xs[j] * xs[k]));
    }
  return sig;
}

}  // namespace detail

// ---- sigma form ------------------------------------------------------------

Permutation tau_sigma(const SigmaTuple& s, std::size_t i, std::size_t j) {
  const std::size_t n = s.rank();
  if (i > j || j > n)
    throw InputError("tau_sigma: indices (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") outside 0 <= i <= j <= " + std::to_string(n));
  Permutation out(s.group().degree());
  if (i == 0 || j == n) return out;
  for (std::size_t k = i; k <= j; ++k) out = out * s.sigmas()[k - 1];
  return out;
}

namespace {

// Bit index of the non-trivial generator tau_{r,s}, 1 <= r <= s <= n-1.
std::size_t tau_bit(std::size_t r, std::size_t s, std::size_t n) {
  // rows r = 1..n-1 hold n-r entries each
  return (r - 1) * (2 * n - r) / 2 + (s - r);
}

std::uint64_t sigma_generator_key(IndexMask shifted, std::size_t n) {
  std::uint64_t key = 0;
  for (std::size_t r = 1; r + 1 <= n; ++r)
    for (std::size_t s = r; s + 1 <= n; ++s)
      if ((shifted >> r & 1) && (shifted >> (s + 1) & 1)) key |= std::uint64_t{1} << tau_bit(r, s, n);
  return key;
}

}  // namespace

PermGroup parabolic_sigma(const SigmaTuple& s, IndexMask shifted_indices) {
  const std::size_t n = s.rank();
  if (n + 2 < 32 && (shifted_indices >> (n + 2)) != 0)
    throw InputError("parabolic_sigma: index set exceeds -1.." + std::to_string(n));
  std::vector<Permutation> gens;
  // r-1 in I is bit r; s in I is bit s+1. tau_{0,s} and tau_{r,n} are trivial.
  for (std::size_t r = 1; r + 1 <= n; ++r)
    for (std::size_t t = r; t + 1 <= n; ++t)
      if ((shifted_indices >> r & 1) && (shifted_indices >> (t + 1) & 1))
        gens.push_back(tau_sigma(s, r, t));
  return PermGroup(s.group().degree(), std::move(gens));
}

bool check_intersection_property_sigma(const SigmaTuple& s, std::uint64_t cap) {
  const std::size_t n = s.rank();
  if (n > 11) throw InputError("check_intersection_property_sigma: rank above 11");
  const std::size_t bits = n + 2;
  const IndexMask count = IndexMask{1} << bits;

  std::vector<std::uint64_t> keys(count);
  std::unordered_map<std::uint64_t, std::shared_ptr<const PermGroup>> groups;
  for (IndexMask m = 0; m < count; ++m) {
    keys[m] = sigma_generator_key(m, n);
    if (!groups.count(keys[m]))
      groups.emplace(keys[m], std::make_shared<const PermGroup>(parabolic_sigma(s, m)));
  }

  std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> checked;
  for (IndexMask i = 0; i < count; ++i)
    for (IndexMask j = i + 1; j < count; ++j) {
      const IndexMask meet = i & j;
      if (meet == i || meet == j) continue;
      auto key = std::make_tuple(std::min(keys[i], keys[j]), std::max(keys[i], keys[j]), keys[meet]);
      if (!checked.insert(key).second) continue;
      const PermGroup& a = *groups.at(keys[i]);
      const PermGroup& b = *groups.at(keys[j]);
      const std::uint64_t target = order_u64(*groups.at(keys[meet]));
      if (intersection_order(a, b, cap, target) != target) return false;
    }
  return true;
}

bool check_sigma_relations(const SigmaTuple& s) {
  const std::size_t n = s.rank();
  for (std::size_t i = 1; i + 1 <= n; ++i)
    for (std::size_t j = i + 1; j + 1 <= n; ++j) {
      const Permutation t = tau_sigma(s, i, j);
      if (!(t * t).is_identity()) return false;
    }
  return true;
}

std::vector<Permutation> regularity_images(const SigmaTuple& s) {
  std::vector<Permutation> out = s.sigmas();
  if (out.empty()) return out;
  out[0] = inverse(s.sigmas()[0]);
  if (out.size() >= 2) out[1] = s.sigmas()[0] * s.sigmas()[0] * s.sigmas()[1];
  return out;
}

}  // namespace chiral
