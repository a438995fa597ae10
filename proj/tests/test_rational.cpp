#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "sbcw/rational.hpp"

using sbcw::cross_det;
using sbcw::Error;
using sbcw::errc;
using sbcw::farey_difference;
using sbcw::mediant;
using sbcw::Ratio;

namespace {

Ratio R(long long n, long long d) { return Ratio::reduce(n, d); }

}  // namespace

TEST_CASE("reduce normalizes sign and gcd") {
  CHECK(R(2, 4) == R(1, 2));
  CHECK(R(2, 4).num() == 1);
  CHECK(R(2, 4).den() == 2);
  CHECK(R(1, 0).str() == "1/0");
  CHECK(R(3, -6) == R(-1, 2));
  CHECK(R(3, -6).str() == "-1/2");
  CHECK(R(-5, 0) == R(1, 0));  // one infinity, not a signed pair
  CHECK(R(0, -7).str() == "0/1");
  CHECK_THROWS_AS(Ratio::reduce(0, 0), Error);
  try {
    Ratio::reduce(0, 0);
  } catch (const Error& e) {
    CHECK(e.code() == errc::both_zero);
  }
}

TEST_CASE("reduce is idempotent on random inputs") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    long long n = static_cast<long long>(rng() % 20001) - 10000;
    long long d = static_cast<long long>(rng() % 20001) - 10000;
    if (n == 0 && d == 0) continue;
    Ratio r = R(n, d);
    CHECK(Ratio::reduce(r.num(), r.den()) == r);
    CHECK(r.den() >= 0);
    mpz_class g = gcd(r.num(), r.den());
    CHECK((g == 1 || (r.num() == 1 && r.den() == 0)));
  }
}

TEST_CASE("cross_det basics") {
  CHECK(cross_det(R(0, 1), R(1, 0)) == -1);
  CHECK(cross_det(R(3, 2), R(0, 1)) == 3);
  CHECK(cross_det(R(1, 1), R(1, 1)) == 0);
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Ratio x = R(static_cast<long long>(rng() % 199) - 99, rng() % 100);
    Ratio y = R(static_cast<long long>(rng() % 199) - 99, rng() % 100);
    CHECK(cross_det(x, y) == -cross_det(y, x));
    CHECK((cross_det(x, y) == 0) == (x == y));
  }
}

TEST_CASE("mediant of Farey neighbors") {
  CHECK(mediant(R(0, 1), R(1, 0)) == R(1, 1));
  CHECK(mediant(R(1, 1), R(1, 0)) == R(2, 1));
  CHECK(mediant(R(1, 2), R(1, 1)) == R(2, 3));
  CHECK(mediant(R(1, 2), R(1, 1)) == mediant(R(1, 1), R(1, 2)));
  CHECK_THROWS_AS(mediant(R(1, 3), R(2, 3)), Error);
}

TEST_CASE("mediant stays unimodular with both parents") {
  // Random Farey pairs built by walking mediants down from (0/1, 1/0).
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Ratio lo = R(0, 1), hi = R(1, 0);
    int steps = 1 + rng() % 12;
    for (int s = 0; s < steps; ++s) {
      Ratio m = mediant(lo, hi);
      mpz_class dl = abs(cross_det(lo, m));
      mpz_class dh = abs(cross_det(m, hi));
      CHECK(dl == 1);
      CHECK(dh == 1);
      if (rng() % 2)
        lo = m;
      else
        hi = m;
    }
  }
}

TEST_CASE("farey_difference") {
  CHECK(farey_difference(R(0, 1), R(1, 1)) == R(1, 0));
  CHECK(farey_difference(R(0, 1), R(1, 0)) == R(-1, 1));  // back to the initial diagonal
  CHECK(farey_difference(R(1, 2), R(1, 1)) == R(0, 1));
  CHECK(farey_difference(R(1, 1), R(0, 1)) == farey_difference(R(0, 1), R(1, 1)));
  CHECK_THROWS_AS(farey_difference(R(1, 3), R(2, 3)), Error);
}

TEST_CASE("farey_difference undoes mediant") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Ratio lo = R(0, 1), hi = R(1, 0);
    for (int s = 0; s < static_cast<int>(1 + rng() % 10); ++s) {
      Ratio m = mediant(lo, hi);
      CHECK(farey_difference(lo, m) == hi);
      CHECK(farey_difference(m, hi) == lo);
      if (rng() % 2)
        lo = m;
      else
        hi = m;
    }
  }
}

TEST_CASE("ordering puts 1/0 on top and matches rational value") {
  CHECK(R(-1, 1) < R(0, 1));
  CHECK(R(0, 1) < R(1, 2));
  CHECK(R(1, 2) < R(1, 1));
  CHECK(R(3, 2) < R(1, 0));
  CHECK(R(1, 0) > R(1000000, 1));
  CHECK(compare(R(1, 0), R(1, 0)) == 0);

  std::mt19937 rng(41);
  std::vector<Ratio> values;
  for (int i = 0; i < 100; ++i)
    values.push_back(R(static_cast<long long>(rng() % 61) - 30, 1 + rng() % 30));
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    double prev = values[i - 1].num().get_d() / values[i - 1].den().get_d();
    double cur = values[i].num().get_d() / values[i].den().get_d();
    CHECK(prev <= cur);
  }
}

TEST_CASE("parse accepts n/d only") {
  CHECK(Ratio::parse("3/2") == R(3, 2));
  CHECK(Ratio::parse("-1/1") == R(-1, 1));
  CHECK(Ratio::parse("1/0") == R(1, 0));
  CHECK(Ratio::parse("6/4") == R(3, 2));
  CHECK_THROWS_AS(Ratio::parse("3"), Error);
  CHECK_THROWS_AS(Ratio::parse("3/"), Error);
  CHECK_THROWS_AS(Ratio::parse("/2"), Error);
  CHECK_THROWS_AS(Ratio::parse("a/b"), Error);
  CHECK_THROWS_AS(Ratio::parse("1/-2"), Error);
  CHECK_THROWS_AS(Ratio::parse("0/0"), Error);
}
