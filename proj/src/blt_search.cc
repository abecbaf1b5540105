#include "chiral/blt_search.h"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

#include "chiral/errors.h"
#include "seed_runner.h"

namespace chiral {

namespace {

// The four rules that together force the linear diagram on a_3 onwards.
bool diagram_rules(const Pruning& p) {
  return p.normalizer && p.centralize_previous && p.avoid_last && p.inverts_first;
}

bool commute(const Permutation& a, const Permutation& b) { return a * b == b * a; }

IndexMask full_mask(std::size_t alphas) { return (IndexMask{1} << (alphas + 1)) - 1; }

class Extender {
 public:
  Extender(const AlphaTuple& seed, std::span<const Permutation> pool, const SearchConfig& cfg,
           SearchStats& stats)
      : seed_(seed), invs_(pool), cfg_(cfg), stats_(stats), checked_(diagram_rules(cfg.pruning)) {}

  std::vector<AlphaTuple> run() {
    std::vector<std::uint32_t> all(invs_.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    ParabolicCache root(seed_);
    ++stats_.tuples_tested;
    recurse(root, std::move(all));
    return std::move(out_);
  }

 private:
  const Permutation& first() const { return seed_.alphas()[0]; }

  const PermGroup& normalizer() {
    if (!normalizer_) normalizer_ = cyclic_normalizer(seed_.group(), first(), cfg_.enumeration_cap);
    return *normalizer_;
  }

  void recurse(ParabolicCache& cache, std::vector<std::uint32_t> pool) {
    const std::size_t len = cache.tuple().size();
    const PermGroup& group = seed_.group();
    if (cache.get(full_mask(len)).order() == group.order()) {
      // The diagram rules force every pair except (a_1, a_2) by construction.
      if (checked_ || check_linear_diagram(cache.tuple())) out_.push_back(cache.tuple());
      return;
    }
    if (len + 1 >= cfg_.max_rank) {
      ++stats_.truncated_branches;
      return;
    }
    if (pool.empty()) return;

    const std::size_t placed = len - 1;  // involutions chosen so far
    const Pruning& p = cfg_.pruning;
    auto keep = [&](auto pred) { std::erase_if(pool, [&](std::uint32_t i) { return !pred(invs_[i]); }); };

    if (placed == 1 && p.normalizer) {
      const PermGroup& n = normalizer();
      keep([&](const Permutation& x) { return n.contains(x); });
    }
    if (placed >= 2 && p.centralize_previous) {
      const Permutation& prev = invs_[chosen_[placed - 2]];
      keep([&](const Permutation& x) { return commute(x, prev); });
    }
    std::vector<std::uint32_t> carried = pool;
    if (placed >= 1 && p.avoid_last) {
      const Permutation& last = invs_[chosen_.back()];
      keep([&](const Permutation& x) { return !commute(x, last); });
    }

    const Permutation first_inv = inverse(first());
    const IndexMask touching = IndexMask{1} << (len + 1);
    for (std::uint32_t i : pool) {
      ++stats_.tuples_tested;
      const Permutation& cand = invs_[i];
      const std::uint64_t o = element_order(first_inv * cand);
      if (placed == 0 && p.nondegenerate_second && o < 3) {
        ++stats_.degenerate_second_rotation;
        continue;
      }
      if (placed >= 1 && p.inverts_first && o != 2) continue;

      ParabolicCache child = cache.extended(cand);
      ++stats_.ic_checks;
      if (!intersection_property_plus(child, touching, cfg_.enumeration_cap)) continue;

      std::vector<std::uint32_t> next = placed == 0 ? pool : carried;
      std::erase(next, i);
      chosen_.push_back(i);
      recurse(child, std::move(next));
      chosen_.pop_back();
    }
  }

  const AlphaTuple& seed_;
  std::span<const Permutation> invs_;
  const SearchConfig& cfg_;
  SearchStats& stats_;
  const bool checked_;
  std::optional<PermGroup> normalizer_;
  std::vector<std::uint32_t> chosen_;
  std::vector<AlphaTuple> out_;
};

using TypeKey = std::pair<std::size_t, SchlafliType>;

// Indices of the first tuple of each class, in input order.
std::vector<std::size_t> class_leaders(std::span<const AlphaTuple> tuples, bool merge_mirrors) {
  struct Kept {
    std::size_t index;
    std::vector<std::uint64_t> signature;
    std::vector<std::uint64_t> mirror_signature;
  };
  std::map<TypeKey, std::vector<Kept>> buckets;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const AlphaTuple& t = tuples[i];
    auto& bucket = buckets[{t.rank(), schlafli_type(t)}];
    const auto sig = detail::word_order_signature(t.alphas());
    bool seen = false;
    for (const Kept& k : bucket) {
      const AlphaTuple& u = tuples[k.index];
      if (k.signature == sig && detail::automorphism_extends(t.group(), u.alphas(), t.alphas())) {
        seen = true;
        break;
      }
      if (merge_mirrors && k.mirror_signature == sig &&
          detail::automorphism_extends(t.group(), mirror(u).alphas(), t.alphas())) {
        seen = true;
        break;
      }
    }
    if (seen) continue;
    Kept k{i, sig, {}};
    if (merge_mirrors) k.mirror_signature = detail::word_order_signature(mirror(t).alphas());
    bucket.push_back(std::move(k));
    out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<AlphaTuple> extend_tuple(const AlphaTuple& seed, std::span<const Permutation> pool,
                                     const SearchConfig& cfg, SearchStats* stats) {
  cfg.validate();
  if (seed.size() != 1) throw InputError("extend_tuple: seed must hold exactly a_1");
  if (element_order(seed.alphas()[0]) < 3) throw InputError("extend_tuple: seed of order below 3");
  for (const auto& x : pool)
    if (!x.is_involution()) throw InputError("extend_tuple: pool holds a non-involution");
  SearchStats local;
  auto out = Extender(seed, pool, cfg, stats ? *stats : local).run();
  return out;
}

std::vector<AlphaTuple> deduplicate(std::span<const AlphaTuple> tuples, const SearchConfig& cfg) {
  std::vector<AlphaTuple> out;
  for (std::size_t i : class_leaders(tuples, cfg.merge_enantiomorphs)) out.push_back(tuples[i]);
  return out;
}

void check_record(const PolytopeRecord& r, const SearchConfig& cfg) {
  const AlphaTuple& t = r.alpha_tuple;
  auto fail = [&](const std::string& what) {
    throw InvariantViolation("record of type " + r.schlafli.to_string() + " " + what);
  };
  if (!t.has_cplus_shape()) fail("does not have the generator shape");
  if (PermGroup(t.group().degree(), t.alphas()).order() != t.group().order())
    fail("does not generate the group");
  if (!check_linear_diagram(t)) fail("fails the linear diagram");
  if (!check_intersection_property_plus(t, cfg.enumeration_cap)) fail("fails the intersection property");
  if (r.chiral == has_inverting_automorphism(t)) fail("carries the wrong chirality flag");
  if (!cfg.include_regular && !r.chiral) fail("is directly regular");
  if (r.rank != t.rank() || r.rank > cfg.max_rank) fail("has an inconsistent rank");
  if (!(r.schlafli == schlafli_type(t))) fail("has an inconsistent type");
}

SearchResult classify(std::shared_ptr<const PermGroup> group, const SearchConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t cap = cfg.enumeration_cap;

  std::vector<Permutation> seeds;
  for (const auto& c : conjugacy_classes(*group, cap)) {
    if (c.element_order < 3) continue;
    if (cfg.seed_filter && std::ranges::find(*cfg.seed_filter, c.element_order) == cfg.seed_filter->end())
      continue;
    seeds.push_back(c.representative);
  }
  const std::vector<Permutation> invs = involutions(*group, cap);

  struct Found {
    AlphaTuple tuple;
    bool chiral;
  };
  std::vector<std::vector<Found>> found(seeds.size());
  std::vector<SearchStats> seed_stats(seeds.size());
  auto err = detail::run_seeds(seeds.size(), cfg.threads, [&](std::size_t i) {
    SearchStats& st = seed_stats[i];
    const AlphaTuple seed(group, {seeds[i]});
    for (auto& t : extend_tuple(seed, invs, cfg, &st)) {
      // only reachable with the second-rotation check switched off
      if (!cfg.pruning.nondegenerate_second && !check_linear_diagram(t)) continue;
      ++st.chirality_checks;
      const bool chiral = !has_inverting_automorphism(t);
      if (chiral || cfg.include_regular) found[i].push_back({std::move(t), chiral});
    }
  });
  if (err) std::rethrow_exception(err);

  SearchResult result;
  result.stats.classes_seeded = seeds.size();
  std::vector<PolytopeRecord> candidates;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    result.stats += seed_stats[i];
    for (const auto& f : found[i]) candidates.push_back(make_record(f.tuple, f.chiral));
  }
  result.stats.candidates_before_dedup = candidates.size();
  std::sort(candidates.begin(), candidates.end(), record_less);

  std::vector<AlphaTuple> tuples;
  for (const auto& r : candidates) tuples.push_back(r.alpha_tuple);
  for (std::size_t i : class_leaders(tuples, cfg.merge_enantiomorphs)) {
    check_record(candidates[i], cfg);
    result.records.push_back(candidates[i]);
  }
  result.stats.records_emitted = result.records.size();
  result.stats.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace chiral
