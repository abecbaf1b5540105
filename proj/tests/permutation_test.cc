#include <random>

#include "chiral/errors.h"
#include "chiral/permutation.h"
#include "doctest.h"
#include "support/oracles.h"
#include "support/test_groups.h"

using namespace chiral;
using testing_groups::P;

TEST_CASE("compose applies the left factor first") {
  const auto t12 = P(3, {{1, 2}});
  const auto t23 = P(3, {{2, 3}});
  CHECK(compose(t12, t12).is_identity());
  CHECK(compose(P(3, {{1, 2, 3}}), Permutation(3)) == P(3, {{1, 2, 3}}));

  // Point-wise: 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2.
  const auto expected = oracle::then(oracle::img(t12), oracle::img(t23));
  CHECK(oracle::img(compose(t12, t23)) == expected);
  CHECK(compose(t12, t23) == P(3, {{1, 3, 2}}));
}

TEST_CASE("compose rejects a degree mismatch") {
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), InputError);
}

TEST_CASE("inverse") {
  CHECK(inverse(P(3, {{1, 2, 3}})) == P(3, {{1, 3, 2}}));
  CHECK(inverse(Permutation(4)).is_identity());
  const auto t = P(6, {{1, 4}, {2, 6}});
  CHECK(inverse(t) == t);
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(element_order(Permutation(5)) == 1);
  CHECK(element_order(P(5, {{1, 2}, {3, 4, 5}})) == 6);
  CHECK(element_order(P(5, {{1, 2, 3, 4, 5}})) == 5);
}

TEST_CASE("cycle notation") {
  CHECK(P(5, {{1, 2}, {3, 4, 5}}).to_cycle_string() == "(1,2)(3,4,5)");
  CHECK(Permutation(3).to_cycle_string() == "()");
  CHECK_THROWS_AS(P(3, {{1, 2, 1}}), InputError);
  CHECK_THROWS_AS(P(3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), InputError);
}

TEST_CASE("power and conjugate") {
  const auto c = P(5, {{1, 2, 3, 4, 5}});
  CHECK(power(c, 5).is_identity());
  CHECK(power(c, -1) == inverse(c));
  CHECK(power(c, 7) == power(c, 2));
  const auto h = P(5, {{1, 2}});
  CHECK(conjugate(c, h) == inverse(h) * c * h);
}

TEST_CASE("property: group laws on random permutations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    auto rand_perm = [&] {
      auto id = oracle::identity(n);
      std::shuffle(id.begin(), id.end(), rng);
      return oracle::perm(id);
    };
    const auto a = rand_perm(), b = rand_perm(), c = rand_perm();
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * inverse(a)).is_identity());
    CHECK((inverse(a) * a).is_identity());
    CHECK(element_order(a) == oracle::order_of(oracle::img(a)));
    CHECK(oracle::img(a * b) == oracle::then(oracle::img(a), oracle::img(b)));
  }
}
