#include <algorithm>
#include <random>
#include <set>

#include "chiral/errors.h"
#include "chiral/group_analysis.h"
#include "doctest.h"
#include "support/oracles.h"
#include "support/test_groups.h"

using namespace chiral;
using namespace testing_groups;

namespace {

std::set<oracle::Img> as_set(const PermGroup& g) {
  std::set<oracle::Img> out;
  g.for_each_element(100000, [&](const Permutation& p) { out.insert(oracle::img(p)); });
  return out;
}

}  // namespace

TEST_CASE("conjugacy classes of small groups") {
  const auto s3 = conjugacy_classes(sym(3));
  REQUIRE(s3.size() == 3);
  CHECK(s3[0].size == 1);
  CHECK(s3[1].size == 3);
  CHECK(s3[2].size == 2);
  CHECK(s3[1].element_order == 2);

  const auto triv = conjugacy_classes(PermGroup::trivial(3));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].size == 1);

  const auto a5 = conjugacy_classes(alt(5));
  CHECK(a5.size() == 5);
  auto inv = std::find_if(a5.begin(), a5.end(), [](const ClassData& c) { return c.element_order == 2; });
  REQUIRE(inv != a5.end());
  CHECK(inv->size == 15);

  CHECK_THROWS_AS(conjugacy_classes(sym(6), 100), CapacityError);
}

TEST_CASE("involution counts") {
  CHECK(involutions(sym(5)).size() == 25);
  CHECK(involutions(psl32()).size() == 21);
  CHECK(involutions(cyclic(5)).empty());
  const auto inv = involutions(sym(4));
  CHECK(std::is_sorted(inv.begin(), inv.end()));
  CHECK(inv.size() == 9);
}

TEST_CASE("centralizers") {
  const auto s3 = sym(3);
  CHECK(centralizer(s3, Permutation(3)).order() == 6);

  const auto t = P(3, {{1, 2}});
  const auto brute = oracle::centralizer(as_set(s3), oracle::img(t));
  CHECK(brute.size() == 2);
  CHECK(centralizer(s3, t).order() == brute.size());

  CHECK(centralizer(alt(5), P(5, {{1, 2, 3, 4, 5}})).order() == 5);
  CHECK_THROWS_AS(centralizer(alt(5), P(5, {{1, 2}})), InputError);
}

TEST_CASE("normalizers of cyclic subgroups") {
  CHECK(cyclic_normalizer(sym(3), Permutation(3)).order() == 6);
  CHECK(cyclic_normalizer(sym(3), P(3, {{1, 2, 3}})).order() == 6);

  const auto a4 = alt(4);
  const auto c = P(4, {{1, 2, 3}});
  const auto brute = oracle::normalizer_of_cyclic(as_set(a4), oracle::img(c));
  CHECK(brute.size() == 3);
  CHECK(cyclic_normalizer(a4, c).order() == 3);
  CHECK_THROWS_AS(cyclic_normalizer(a4, P(4, {{1, 2}})), InputError);
}

TEST_CASE("subgroup intersections") {
  const auto h = PermGroup(4, {P(4, {{1, 2, 3, 4}})});
  const auto k = PermGroup(4, {P(4, {{1, 3}}), P(4, {{2, 4}})});
  const auto both = subgroup_intersection(h, k);
  CHECK(both.order() == oracle::intersect(as_set(h), as_set(k)).size());
  CHECK(both.order() == 2);
  CHECK(both.contains(P(4, {{1, 3}, {2, 4}})));

  const auto hh = subgroup_intersection(h, h);
  CHECK(hh.order() == h.order());
  CHECK(hh.is_subgroup_of(h));
  CHECK(h.is_subgroup_of(hh));
  CHECK(subgroup_intersection(h, PermGroup::trivial(4)).order() == 1);

  CHECK(intersection_order(h, k, 100) == 2);
  CHECK_THROWS_AS(subgroup_intersection(sym(6), alt(6), 100), CapacityError);
}

TEST_CASE("property: structural queries agree with brute force") {
  std::mt19937 rng(99);
  std::vector<PermGroup> groups{sym(3), sym(4), alt(4), alt(5), sym(5), dihedral(6), dihedral(12),
                                c5_c4(), psl32(), cyclic(9)};
  for (int extra = 0; extra < 12; ++extra) {
    const std::size_t n = 3 + rng() % 5;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      auto id = oracle::identity(n);
      std::shuffle(id.begin(), id.end(), rng);
      gens.push_back(oracle::perm(id));
    }
    PermGroup g(n, gens);
    if (g.order() <= 5000) groups.push_back(g);
  }

  for (const auto& g : groups) {
    const auto elems = as_set(g);
    const auto brute = oracle::conjugacy_partition(elems);
    const auto classes = conjugacy_classes(g);
    REQUIRE(classes.size() == brute.size());
    std::uint64_t total = 0;
    for (const auto& c : classes) {
      total += c.size;
      CHECK(g.order().to_u64() % c.size == 0);
      CHECK(element_order(c.representative) == c.element_order);
      auto it = std::find_if(brute.begin(), brute.end(), [&](const auto& s) {
        return s.count(oracle::img(c.representative)) == 1;
      });
      REQUIRE(it != brute.end());
      CHECK(it->size() == c.size);
      CHECK(oracle::img(c.representative) == *it->begin());

      const auto cent = centralizer(g, c.representative);
      CHECK(cent.order() * c.size == g.order());
      CHECK(as_set(cent) == oracle::centralizer(elems, oracle::img(c.representative)));

      const auto norm = cyclic_normalizer(g, c.representative);
      CHECK(as_set(norm) == oracle::normalizer_of_cyclic(elems, oracle::img(c.representative)));

      const auto cyc = PermGroup(g.degree(), {c.representative});
      const auto meet = subgroup_intersection(cent, norm.with_generator(c.representative));
      CHECK(as_set(meet) == oracle::intersect(as_set(cent), as_set(norm)));
      CHECK(as_set(subgroup_intersection(cyc, cent)) == oracle::intersect(as_set(cyc), as_set(cent)));
    }
    CHECK(total == g.order().to_u64());
  }
}
