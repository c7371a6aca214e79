#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace chi {

/// Sorted (prime, exponent) pairs.
class FactorMap {
public:
  using Entry = std::pair<std::uint64_t, unsigned>;

  FactorMap() = default;
  explicit FactorMap(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Product of prime^exponent.  Caller keeps it within 64 bits.
  std::uint64_t value() const;
  unsigned exponent_of(std::uint64_t prime) const;

  friend bool operator==(const FactorMap&, const FactorMap&) = default;

private:
  std::vector<Entry> entries_;
};

/// All primes <= limit, ascending.  Segmented, so memory stays near sqrt(limit).
std::vector<std::uint64_t> sieve(std::uint64_t limit);

/// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Calls fn(p) for every prime in [lo, hi] without materialising the list.
template <class Fn>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, Fn&& fn);

std::uint64_t prime_count(std::uint64_t limit);

/// Trial division by precomputed primes up to sqrt(max_n).
class Factorizer {
public:
  explicit Factorizer(std::uint64_t max_n);

  FactorMap factorize(std::uint64_t n) const;
  std::uint64_t max_n() const { return max_n_; }

private:
  std::uint64_t max_n_;
  std::vector<std::uint32_t> small_;
};

/// Convenience: factorize with a fresh trial-division table.
FactorMap factorize(std::uint64_t n);

bool is_prime_trial(std::uint64_t n);

/// Exponent of q in n (n != 0).
unsigned valuation(std::uint64_t n, std::uint64_t q);

std::uint64_t isqrt(std::uint64_t n);

namespace detail {
void sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& base,
                   std::vector<std::uint64_t>& out);
std::vector<std::uint32_t> base_primes(std::uint64_t limit);
}  // namespace detail

template <class Fn>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
  if (hi < 2 || lo > hi) return;
  if (lo < 2) lo = 2;
  const auto base = detail::base_primes(isqrt(hi));
  constexpr std::uint64_t kSegment = 1u << 18;
  std::vector<std::uint64_t> chunk;
  for (std::uint64_t start = lo; start <= hi;) {
    const std::uint64_t stop = (hi - start >= kSegment) ? start + kSegment - 1 : hi;
    chunk.clear();
    detail::sieve_segment(start, stop, base, chunk);
    for (auto p : chunk) fn(p);
    if (stop == hi) break;
    start = stop + 1;
  }
}

}  // namespace chi
