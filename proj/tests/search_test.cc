#include <algorithm>
#include <map>
#include <memory>
#include <random>

#include "chiral/blt_search.h"
#include "chiral/errors.h"
#include "chiral/hhl_oracle.h"
#include "doctest.h"
#include "support/oracles.h"
#include "support/test_groups.h"

using namespace chiral;
using namespace testing_groups;

namespace {

using GroupPtr = std::shared_ptr<const PermGroup>;

GroupPtr share(PermGroup g) { return std::make_shared<const PermGroup>(std::move(g)); }

using TypeCount = std::map<std::pair<std::size_t, std::vector<std::uint64_t>>, int>;

TypeCount type_counts(const std::vector<PolytopeRecord>& rs) {
  TypeCount out;
  for (const auto& r : rs) ++out[{r.rank, r.schlafli.entries}];
  return out;
}

int count_type(const std::vector<PolytopeRecord>& rs, std::vector<std::uint64_t> type) {
  return static_cast<int>(std::ranges::count_if(rs, [&](const auto& r) { return r.schlafli.entries == type; }));
}

std::vector<AlphaTuple> sorted(std::vector<AlphaTuple> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Tuple isomorphism pairs the two record lists off one to one.
bool bijective_match(const std::vector<PolytopeRecord>& a, const std::vector<PolytopeRecord>& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> hits(b.size(), 0);
  for (const auto& r : a) {
    int matches = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto& s = b[j];
      if (r.rank != s.rank || !(r.schlafli == s.schlafli)) continue;
      if (extends_to_automorphism(r.alpha_tuple.group(), r.alpha_tuple.alphas(), s.alpha_tuple.alphas())) {
        ++matches;
        ++hits[j];
      }
    }
    if (matches != 1) return false;
  }
  return std::ranges::all_of(hits, [](int h) { return h == 1; });
}

std::vector<std::pair<std::string, PermGroup>> small_corpus() {
  return {{"sym3", sym(3)},     {"sym4", sym(4)},   {"alt4", alt(4)},     {"alt5", alt(5)},
          {"sym5", sym(5)},     {"dih3", dihedral(3)}, {"dih4", dihedral(4)}, {"dih5", dihedral(5)},
          {"dih6", dihedral(6)}, {"dih12", dihedral(12)}, {"c5c4", c5_c4()},  {"psl32", psl32()}};
}

}  // namespace

TEST_CASE("chiral torus map in C5:C4") {
  auto g = share(c5_c4());
  const auto res = classify(g);
  REQUIRE_FALSE(res.records.empty());
  const int n44 = count_type(res.records, {4, 4});
  CHECK(n44 >= 1);
  for (const auto& r : res.records) {
    CHECK(r.chiral);
    CHECK(r.group_order == 20);
  }
  SearchConfig merge;
  merge.merge_enantiomorphs = true;
  const auto merged = classify(g, merge);
  CHECK(count_type(merged.records, {4, 4}) * 2 == n44);
}

TEST_CASE("directly regular tuples are filtered") {
  auto g = share(alt(5));
  const auto chiral_only = classify(g);
  CHECK(count_type(chiral_only.records, {3, 5}) == 0);
  CHECK(count_type(chiral_only.records, {5, 5}) == 0);

  SearchConfig cfg;
  cfg.include_regular = true;
  const auto all = classify(g, cfg);
  CHECK(count_type(all.records, {3, 5}) >= 1);
  CHECK(count_type(all.records, {5, 5}) >= 1);
  for (const auto& r : all.records)
    if (r.schlafli.entries == std::vector<std::uint64_t>{3, 5}) CHECK_FALSE(r.chiral);
}

TEST_CASE("abelian groups have no chiral polytopes") {
  for (int n : {3, 5, 7, 12}) {
    auto g = share(cyclic(n));
    CHECK(classify(g).records.empty());
    CHECK(classify_hhl(g).records.empty());
  }
}

TEST_CASE("extend_tuple edge cases") {
  auto g = share(sym(3));
  const AlphaTuple seed(g, {P(3, {{1, 2, 3}})});
  CHECK(extend_tuple(seed, {}, SearchConfig{}).empty());

  // every transposition makes o(a_1^-1 a_2) = 2
  const auto invs = involutions(*g);
  SearchStats st;
  CHECK(extend_tuple(seed, invs, SearchConfig{}, &st).empty());
  CHECK(st.degenerate_second_rotation == 3);

  // without that check the three degenerate pairs of type {3,2} come back,
  // all directly regular
  SearchConfig loose;
  loose.pruning.nondegenerate_second = false;
  const auto out = extend_tuple(seed, invs, loose);
  CHECK(out.size() == 3);
  for (const auto& t : out) {
    CHECK(schlafli_type(t).entries == std::vector<std::uint64_t>{3, 2});
    CHECK(has_inverting_automorphism(t));
  }

  CHECK_THROWS_AS(extend_tuple(AlphaTuple(g, {P(3, {{1, 2}})}), invs, SearchConfig{}), InputError);
  SearchConfig bad;
  bad.max_rank = 2;
  CHECK_THROWS_AS(extend_tuple(seed, invs, bad), InputError);
}

TEST_CASE("emitted tuples satisfy every pruning predicate") {
  for (auto& [name, raw] : small_corpus()) {
    CAPTURE(name);
    auto g = share(raw);
    const auto invs = involutions(*g);
    for (const auto& c : conjugacy_classes(*g)) {
      if (c.element_order < 3) continue;
      const AlphaTuple seed(g, {c.representative});
      const auto norm = oracle::normalizer_of_cyclic(oracle::closure(g->degree(), g->generators()),
                                                     oracle::img(c.representative));
      for (const auto& t : extend_tuple(seed, invs, SearchConfig{})) {
        const auto& a = t.alphas();
        CHECK(oracle::closure(g->degree(), a).size() == g->order().to_u64());
        CHECK(oracle::alpha_linear(oracle::to_imgs(a)));
        CHECK(oracle::alpha_ic_plus(oracle::to_imgs(a)));
        for (std::size_t k = 2; k < a.size(); ++k) {
          CHECK(norm.count(oracle::img(a[k])) == 1);
          CHECK(element_order(inverse(a[0]) * a[k]) == 2);
          if (k >= 3) CHECK(a[k] * a[k - 2] == a[k - 2] * a[k]);
          CHECK(a[k] * a[k - 1] != a[k - 1] * a[k]);
        }
        if (a.size() >= 2) {
          CHECK(element_order(inverse(a[0]) * a[1]) >= 3);
        }
        // no proper prefix generates
        for (std::size_t k = 1; k < a.size(); ++k)
          CHECK(PermGroup(g->degree(), std::vector<Permutation>(a.begin(), a.begin() + k)).order() <
                g->order());
      }
    }
  }
}

TEST_CASE("pruning rules do not change the emitted tuples") {
  SearchConfig off;
  off.pruning = Pruning::none();
  for (auto& [name, raw] : small_corpus()) {
    if (raw.order() > 360) continue;
    CAPTURE(name);
    auto g = share(raw);
    const auto invs = involutions(*g);
    for (const auto& c : conjugacy_classes(*g)) {
      if (c.element_order < 3) continue;
      const AlphaTuple seed(g, {c.representative});
      CHECK(sorted(extend_tuple(seed, invs, SearchConfig{})) == sorted(extend_tuple(seed, invs, off)));
    }
  }
}

TEST_CASE("deduplicate") {
  auto g = share(c5_c4());
  const auto res = classify(g);
  REQUIRE_FALSE(res.records.empty());
  const AlphaTuple t = res.records.front().alpha_tuple;

  std::mt19937 rng(7);
  const auto elems = g->elements(1000);
  const auto h = elems[rng() % elems.size()];
  std::vector<Permutation> conj;
  for (const auto& a : t.alphas()) conj.push_back(conjugate(a, h));
  const AlphaTuple u(g, conj);
  SearchConfig cfg;
  CHECK(deduplicate(std::vector<AlphaTuple>{t, u}, cfg).size() == 1);
  CHECK(deduplicate(std::vector<AlphaTuple>{t, u}, cfg).front() == t);

  const AlphaTuple m = mirror(t);
  REQUIRE(is_chiral(t));
  CHECK(deduplicate(std::vector<AlphaTuple>{t, m}, cfg).size() == 2);
  cfg.merge_enantiomorphs = true;
  CHECK(deduplicate(std::vector<AlphaTuple>{t, m}, cfg).size() == 1);

  // different types stay apart
  auto a5 = share(alt(5));
  SearchConfig reg;
  reg.include_regular = true;
  const auto all = classify(a5, reg);
  std::vector<AlphaTuple> mixed;
  for (const auto& r : all.records) mixed.push_back(r.alpha_tuple);
  CHECK(deduplicate(mixed, reg).size() == mixed.size());
}

TEST_CASE("classification is deterministic and thread-independent") {
  for (const char* name : {"sym5", "psl32"}) {
    CAPTURE(name);
    auto g = share(std::string(name) == "sym5" ? sym(5) : psl32());
    SearchConfig serial;
    serial.threads = 1;
    serial.include_regular = true;
    SearchConfig parallel = serial;
    parallel.threads = 4;
    const auto a = classify(g, serial);
    const auto b = classify(g, serial);
    const auto c = classify(g, parallel);
    REQUIRE(a.records.size() == b.records.size());
    REQUIRE(a.records.size() == c.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(a.records[i].alpha_tuple == b.records[i].alpha_tuple);
      CHECK(a.records[i].alpha_tuple == c.records[i].alpha_tuple);
    }
    CHECK(a.stats.tuples_tested == c.stats.tuples_tested);
    CHECK(a.stats.records_emitted <= a.stats.tuples_tested);
  }
}

TEST_CASE("search agrees with the sigma-tuple baseline") {
  for (bool regular : {false, true}) {
    for (auto& [name, raw] : small_corpus()) {
      CAPTURE(name);
      CAPTURE(regular);
      auto g = share(raw);
      SearchConfig cfg;
      cfg.include_regular = regular;
      const auto blt = classify(g, cfg);
      const auto hhl = classify_hhl(g, cfg);
      CHECK(type_counts(blt.records) == type_counts(hhl.records));
      REQUIRE(blt.records.size() == hhl.records.size());
      for (std::size_t i = 0; i < blt.records.size(); ++i) {
        CHECK(blt.records[i].alpha_tuple == hhl.records[i].alpha_tuple);
        CHECK(blt.records[i].chiral == hhl.records[i].chiral);
      }
      CHECK(bijective_match(blt.records, hhl.records));
      for (const auto& r : hhl.records) {
        const auto s = sigma_from_alpha(r.alpha_tuple);
        for (std::size_t i = 1; i < s.rank(); ++i)
          for (std::size_t j = i + 1; j < s.rank(); ++j) {
            const auto t = tau_sigma(s, i, j);
            CHECK((t * t).is_identity());
          }
      }
    }
  }
}

TEST_CASE("baseline budget") {
  SearchConfig cfg;
  cfg.hhl_budget = 50;
  try {
    classify_hhl(share(sym(5)), cfg);
    FAIL("expected the budget to run out");
  } catch (const BudgetExceeded& e) {
    CHECK(e.partial_stats().tuples_tested > 0);
    CHECK(std::string(e.what()).find("50") != std::string::npos);
  }
}
