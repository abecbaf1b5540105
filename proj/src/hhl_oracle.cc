#include "chiral/hhl_oracle.h"

#include <algorithm>
#include <atomic>
#include <map>

#include "seed_runner.h"

namespace chiral {

namespace {

// Depth-first over sigma tuples. Prefixes are pruned on the relation
// (s_i ... s_k)^2 = 1 and on the sigma intersection property; both are
// inherited by prefixes of a valid tuple.
class SigmaSearch {
 public:
  SigmaSearch(std::shared_ptr<const PermGroup> group, std::span<const Permutation> elements,
              const SearchConfig& cfg, std::atomic<std::uint64_t>& spent, SearchStats& stats)
      : group_(std::move(group)), elements_(elements), cfg_(cfg), spent_(spent), stats_(stats) {}

  std::vector<SigmaTuple> run(const Permutation& first) {
    std::vector<Permutation> sigmas{first};
    ++stats_.tuples_tested;
    recurse(sigmas, PermGroup(group_->degree(), sigmas));
    return std::move(out_);
  }

 private:
  void recurse(std::vector<Permutation>& sigmas, const PermGroup& generated) {
    if (generated.order() == group_->order()) {
      out_.emplace_back(group_, sigmas);
      return;
    }
    if (sigmas.size() + 1 >= cfg_.max_rank) {
      ++stats_.truncated_branches;
      return;
    }
    for (const auto& x : elements_) {
      if (spent_.fetch_add(1, std::memory_order_relaxed) >= cfg_.hhl_budget)
        throw BudgetExceeded("sigma enumeration exceeded its budget of " +
                                 std::to_string(cfg_.hhl_budget) + " candidate evaluations",
                             stats_);
      ++stats_.tuples_tested;
      // tau_{i,k+1} = s_i ... s_k x must square to the identity for all i <= k
      Permutation tau = x;
      bool ok = true;
      for (std::size_t i = sigmas.size(); ok && i-- > 0;) {
        tau = sigmas[i] * tau;
        ok = (tau * tau).is_identity();
      }
      if (!ok) continue;
      sigmas.push_back(x);
      ++stats_.ic_checks;
      if (check_intersection_property_sigma(SigmaTuple(group_, sigmas), cfg_.enumeration_cap))
        recurse(sigmas, generated.with_generator(x));
      sigmas.pop_back();
    }
  }

  std::shared_ptr<const PermGroup> group_;
  std::span<const Permutation> elements_;
  const SearchConfig& cfg_;
  std::atomic<std::uint64_t>& spent_;
  SearchStats& stats_;
  std::vector<SigmaTuple> out_;
};

std::vector<std::uint64_t> sigma_type(const SigmaTuple& s) {
  std::vector<std::uint64_t> out;
  for (const auto& x : s.sigmas()) out.push_back(element_order(x));
  return out;
}

}  // namespace

SearchResult classify_hhl(std::shared_ptr<const PermGroup> group, const SearchConfig& cfg) {
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
  std::vector<Permutation> elements;
  group->for_each_element(cap, [&](const Permutation& x) {
    if (!x.is_identity() && !x.is_involution()) elements.push_back(x);
  });
  std::sort(elements.begin(), elements.end());

  struct Found {
    SigmaTuple sigma;
    bool chiral;
  };
  std::atomic<std::uint64_t> spent{0};
  std::vector<std::vector<Found>> found(seeds.size());
  std::vector<SearchStats> seed_stats(seeds.size());
  auto err = detail::run_seeds(seeds.size(), cfg.threads, [&](std::size_t i) {
    SearchStats& st = seed_stats[i];
    SigmaSearch search(group, elements, cfg, spent, st);
    for (auto& s : search.run(seeds[i])) {
      ++st.chirality_checks;
      const bool regular = extends_to_automorphism(*group, s.sigmas(), regularity_images(s));
      if (!regular || cfg.include_regular) found[i].push_back({std::move(s), !regular});
    }
  });

  SearchResult result;
  result.stats.classes_seeded = seeds.size();
  for (const auto& st : seed_stats) result.stats += st;
  if (err) {
    try {
      std::rethrow_exception(err);
    } catch (const BudgetExceeded& e) {
      result.stats.wall_time = std::chrono::steady_clock::now() - start;
      throw BudgetExceeded(e.what(), result.stats);
    }
  }

  // Canonical order is that of the alpha form, so both algorithms pick the
  // same representative of each class.
  struct Candidate {
    PolytopeRecord record;
    SigmaTuple sigma;
  };
  std::vector<Candidate> candidates;
  for (auto& per_seed : found)
    for (auto& f : per_seed) candidates.push_back({make_record(alpha_from_sigma(f.sigma), f.chiral), f.sigma});
  result.stats.candidates_before_dedup = candidates.size();
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return record_less(a.record, b.record); });

  std::map<std::pair<std::size_t, std::vector<std::uint64_t>>, std::vector<const SigmaTuple*>> kept;
  for (const auto& c : candidates) {
    auto& bucket = kept[{c.sigma.rank(), sigma_type(c.sigma)}];
    bool seen = false;
    for (const SigmaTuple* k : bucket) {
      if (extends_to_automorphism(*group, k->sigmas(), c.sigma.sigmas()) ||
          (cfg.merge_enantiomorphs &&
           extends_to_automorphism(*group, regularity_images(*k), c.sigma.sigmas()))) {
        seen = true;
        break;
      }
    }
    if (seen) continue;
    bucket.push_back(&c.sigma);
    result.records.push_back(c.record);
  }
  result.stats.records_emitted = result.records.size();
  result.stats.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace chiral
