#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ttlink/reduction.hpp"

using namespace ttlink;

TEST_CASE("reduce worked examples") {
  ReducedModel figure3 = reduce(3, 7, 5, 0);
  CHECK(figure3.n == 3);
  CHECK(figure3.m == 4);
  CHECK(figure3.s_prime == 0);
  CHECK(figure3.cf == std::vector<long long>{0, 1});
  CHECK_FALSE(figure3.swapped);  // M(3,4,5,0), matching the slot order

  ReducedModel nine_seven = reduce(9, 7, 5, 3);
  CHECK(nine_seven.n == 2);
  CHECK(nine_seven.m == 3);
  CHECK(nine_seven.s_prime == 3);

  ReducedModel fixed = reduce(4, 3, 5, 7);
  CHECK(((fixed.n == 3 && fixed.m == 4) || (fixed.n == 4 && fixed.m == 3)));
  CHECK(fixed.s_prime == 2);
  CHECK(fixed.cf.empty());
}

TEST_CASE("reduce rejects bad inputs") {
  CHECK_THROWS_AS(reduce(3, 7, 11, 0), Error);  // r > p+q
  CHECK_THROWS_AS(reduce(3, 7, 1, 0), Error);
  CHECK_THROWS_AS(reduce(0, 7, 3, 0), Error);

  try {
    reduce(6, 9, 3, 0);  // r = gcd
    FAIL("expected a satellite error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ReducibleToSatellite);
  }
}

TEST_CASE("reconstruct worked examples") {
  CHECK(reconstruct({0, 1}, 4, 3) == Fraction{3, 7});
  CHECK(reconstruct({}, 4, 3) == Fraction{4, 3});
  ReducedModel model = reduce(9, 7, 5, 0);
  CHECK(reconstruct(model.cf, model.m, model.n) == Fraction{9, 7});
}

TEST_CASE("negative s wraps into 0 <= s' < r") {
  CHECK(reduce(9, 7, 5, -2).s_prime == 3);
  CHECK(reduce(9, 7, 5, -10).s_prime == 0);
}

TEST_CASE("random sweep: invariants and exact reconstruction") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<long long> draw(1, 1'000'000);
  int cases = 0;
  while (cases < 1000) {
    long long p = draw(rng), q = draw(rng);
    long long g = std::gcd(p, q);
    long long lo = std::max<long long>(2, g + 1);
    if (lo > p + q) continue;
    std::uniform_int_distribution<long long> draw_r(lo, std::min(p + q, lo + 1000));
    long long r = draw_r(rng);
    long long s = static_cast<long long>(rng() % 2000001) - 1000000;
    ++cases;

    ReducedModel model = reduce(p, q, r, s);
    CHECK(model.n > 0);
    CHECK(model.m > 0);
    CHECK(model.n < r);
    CHECK(model.m < r);
    CHECK(model.n + model.m >= r);
    CHECK(model.s_prime == ((s % r) + r) % r);
    for (std::size_t i = 1; i < model.cf.size(); ++i) CHECK(model.cf[i] >= 1);

    Fraction ratio = reconstruct(model.cf, model.m, model.n);
    CHECK(ratio.num * q == ratio.den * p);  // exact integer identity
  }
}

TEST_CASE("Dehn twist invariance") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    long long p = 1 + static_cast<long long>(rng() % 4000);
    long long q = 1 + static_cast<long long>(rng() % 4000);
    long long g = std::gcd(p, q);
    long long r = std::max<long long>(2, g + 1 + static_cast<long long>(rng() % 50));
    if (r > p + q) continue;
    long long s = static_cast<long long>(rng() % 100) - 50;

    ReducedModel base = reduce(p, q, r, s);
    auto pair_of = [](const ReducedModel& model) {
      return std::minmax(model.n, model.m);
    };
    ReducedModel twisted = reduce(p, q + p, r, s);
    CHECK(pair_of(twisted) == pair_of(base));
    CHECK(twisted.s_prime == base.s_prime);
    ReducedModel flipped = reduce(q, p, r, s);
    CHECK(pair_of(flipped) == pair_of(base));
    CHECK(flipped.s_prime == base.s_prime);
  }
}

TEST_CASE("subtractive stepping stays inside the window") {
  // A full mod jump would overshoot: 1000 mod 7 = 6, but the first value
  // below r = 500 on the subtractive path is 496.
  ReducedModel model = reduce(1000, 7, 500, 0);
  CHECK(model.m == 496);
  CHECK(model.n == 7);
  CHECK(model.m + model.n >= 500);
}
