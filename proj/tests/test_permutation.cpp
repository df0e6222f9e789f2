#include "doctest.h"

#include <random>
#include <stdexcept>

#include "lnc/permutation.hpp"

using lnc::Permutation;
using lnc::all_permutations;

TEST_CASE("identity") {
  CHECK(Permutation::identity(3).images() == std::vector<int>{1, 2, 3});
  CHECK(Permutation::identity(1).images() == std::vector<int>{1});
  CHECK_THROWS_AS(Permutation::identity(0), std::invalid_argument);

  const Permutation id5 = Permutation::identity(5);
  for (const Permutation& sigma : all_permutations(5)) {
    CHECK(id5.compose(sigma) == sigma);
    CHECK(sigma.compose(id5) == sigma);
  }
}

TEST_CASE("composition applies the inner factor first") {
  // sigma_2 o sigma_1 with sigma_1 = [2,1,3], sigma_2 = [3,1,2].
  const Permutation s1({2, 1, 3});
  const Permutation s2({3, 1, 2});
  CHECK(s2.compose(s1) == Permutation({1, 3, 2}));

  // tau_2 o tau_4 in degree 6.
  const Permutation t2 = Permutation::reverse(6, 2);
  const Permutation t4 = Permutation::reverse(6, 4);
  CHECK(t2.compose(t4) == Permutation({4, 3, 1, 2, 5, 6}));

  CHECK_THROWS_AS(s1.compose(Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("composition is associative") {
  for (int m = 2; m <= 4; ++m) {
    const auto all = all_permutations(m);
    for (const auto& a : all) {
      for (const auto& b : all) {
        for (const auto& c : all) {
          CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
        }
      }
    }
  }
  // Sampled at degree 5.
  std::mt19937 rng(7);
  const auto all5 = all_permutations(5);
  std::uniform_int_distribution<size_t> pick(0, all5.size() - 1);
  for (int k = 0; k < 500; ++k) {
    const auto& a = all5[pick(rng)];
    const auto& b = all5[pick(rng)];
    const auto& c = all5[pick(rng)];
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
  }
}

TEST_CASE("inverse") {
  CHECK(Permutation({2, 1, 3}).inverse() == Permutation({2, 1, 3}));
  CHECK(Permutation({3, 1, 2}).inverse() == Permutation({2, 3, 1}));

  for (const Permutation& sigma : all_permutations(4)) {
    CHECK(sigma.compose(sigma.inverse()).is_identity());
    CHECK(sigma.inverse().compose(sigma).is_identity());
    for (int i = 1; i <= 4; ++i) {
      CHECK(sigma.inverse()(sigma(i)) == i);
    }
  }
}

TEST_CASE("reverse permutations") {
  CHECK(Permutation::reverse(6, 4) == Permutation({4, 3, 2, 1, 5, 6}));
  CHECK(Permutation::reverse(5, 1) == Permutation::identity(5));
  CHECK(Permutation::reverse(5, 5) == Permutation({5, 4, 3, 2, 1}));
  CHECK_THROWS_AS(Permutation::reverse(5, 6), std::invalid_argument);

  for (int m = 1; m <= 7; ++m) {
    for (int i = 1; i <= m; ++i) {
      const Permutation tau = Permutation::reverse(m, i);
      CHECK(tau.compose(tau).is_identity());
      CHECK(tau.inverse() == tau);
      for (int k = i + 1; k <= m; ++k) {
        CHECK(tau(k) == k);
      }
    }
  }
}

TEST_CASE("descending cycles") {
  CHECK(Permutation::descending_cycle(3, 3) == Permutation({3, 1, 2}));
  CHECK(Permutation::descending_cycle(4, 1) == Permutation::identity(4));
  CHECK(Permutation::descending_cycle(4, 2) == Permutation({2, 1, 3, 4}));
  CHECK_THROWS_AS(Permutation::descending_cycle(4, 5), std::invalid_argument);

  // (j ... 1) has order j: composing j times fixes everything.
  for (int m = 1; m <= 6; ++m) {
    for (int j = 1; j <= m; ++j) {
      Permutation power = Permutation::identity(m);
      for (int k = 0; k < j; ++k) {
        power = power.compose(Permutation::descending_cycle(m, j));
      }
      CHECK(power.is_identity());
    }
  }
}

TEST_CASE("embedding fixes the upper symbols") {
  const Permutation sigma({2, 1, 3});
  CHECK(sigma.embed(5) == Permutation({2, 1, 3, 4, 5}));
  CHECK(sigma.embed(3) == sigma);
  CHECK_THROWS_AS(sigma.embed(2), std::invalid_argument);
}

TEST_CASE("text round trip") {
  CHECK(Permutation({2, 1, 3}).one_line() == "2,1,3");
  CHECK(Permutation::parse_one_line("4,3,1,2,5,6") ==
        Permutation({4, 3, 1, 2, 5, 6}));
  CHECK_THROWS_AS(Permutation::parse_one_line("1,1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse_one_line("1,x,2"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse_one_line(""), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse_one_line("0,1"), std::invalid_argument);

  for (const Permutation& sigma : all_permutations(5)) {
    CHECK(Permutation::parse_one_line(sigma.one_line()) == sigma);
  }
}

TEST_CASE("validation rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
}
