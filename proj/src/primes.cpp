#include "chi/primes.hpp"

#include <algorithm>
#include <cmath>

#include "chi/error.hpp"

namespace chi {

FactorMap::FactorMap(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
}

std::uint64_t FactorMap::value() const {
  std::uint64_t v = 1;
  for (auto [q, e] : entries_)
    for (unsigned i = 0; i < e; ++i) v *= q;
  return v;
}

unsigned FactorMap::exponent_of(std::uint64_t prime) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{prime, 0});
  return (it != entries_.end() && it->first == prime) ? it->second : 0;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

namespace detail {

std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

void sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& base,
                   std::vector<std::uint64_t>& out) {
  if (lo < 2) lo = 2;
  if (lo > hi) return;
  std::vector<char> composite(hi - lo + 1, 0);
  for (std::uint64_t q : base) {
    if (q * q > hi) break;
    std::uint64_t first = std::max(q * q, (lo + q - 1) / q * q);
    for (std::uint64_t m = first; m <= hi; m += q) composite[m - lo] = 1;
  }
  for (std::uint64_t n = lo; n <= hi; ++n)
    if (!composite[n - lo]) out.push_back(n);
}

}  // namespace detail

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

std::vector<std::uint64_t> sieve(std::uint64_t limit) {
  if (limit < 2) throw Error(Errc::InvalidArgument, "sieve limit must be >= 2");
  return primes_in_range(2, limit);
}

std::uint64_t prime_count(std::uint64_t limit) {
  std::uint64_t n = 0;
  for_each_prime(2, limit, [&](std::uint64_t) { ++n; });
  return n;
}

Factorizer::Factorizer(std::uint64_t max_n) : max_n_(max_n) {
  small_ = detail::base_primes(isqrt(max_n) + 1);
}

FactorMap Factorizer::factorize(std::uint64_t n) const {
  if (n == 0) throw Error(Errc::InvalidArgument, "cannot factorize 0");
  if (n > max_n_) throw Error(Errc::InvalidArgument, "factorize: n exceeds table bound");
  std::vector<FactorMap::Entry> out;
  for (std::uint64_t q : small_) {
    if (q * q > n) break;
    if (n % q) continue;
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return FactorMap(std::move(out));
}

FactorMap factorize(std::uint64_t n) { return Factorizer(n).factorize(n); }

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned valuation(std::uint64_t n, std::uint64_t q) {
  if (n == 0) throw Error(Errc::InvalidArgument, "valuation of 0");
  unsigned e = 0;
  while (n % q == 0) {
    n /= q;
    ++e;
  }
  return e;
}

}  // namespace chi
