#include <doctest.h>

#include "chi/primes.hpp"

using namespace chi;

TEST_CASE("prime counts") {
  CHECK(prime_count(10) == 4);
  CHECK(prime_count(10000) == 1229);
  CHECK(prime_count(1000000) == 78498);
  CHECK(sieve(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("segmented sieve agrees with trial division across segment boundaries") {
  const std::uint64_t lo = (1u << 18) - 500, hi = (1u << 18) + 500;
  std::vector<std::uint64_t> got;
  for_each_prime(lo, hi, [&](std::uint64_t p) { got.push_back(p); });
  std::vector<std::uint64_t> want;
  for (auto n = lo; n <= hi; ++n)
    if (is_prime_trial(n)) want.push_back(n);
  CHECK(got == want);
  CHECK(primes_in_range(lo, hi) == want);
}

TEST_CASE("factorisation") {
  CHECK(factorize(720).entries() == std::vector<FactorMap::Entry>{{2, 4}, {3, 2}, {5, 1}});
  CHECK(factorize(1).empty());
  const Factorizer f(1000);
  for (std::uint64_t n = 1; n <= 1000; ++n) CHECK(f.factorize(n).value() == n);
  CHECK_THROWS(f.factorize(1001));
  CHECK(valuation(48, 2) == 4);
  CHECK(valuation(48, 5) == 0);
  CHECK(isqrt(99) == 9);
  CHECK(isqrt(100) == 10);
}
