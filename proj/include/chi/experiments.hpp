#pragma once

// Exact per-prime verification suites.  Every check here compares two
// independently computed quantities prime by prime; a violation is a prime where
// they disagree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chi/chebyshev.hpp"
#include "chi/exactnum.hpp"
#include "chi/polyfp.hpp"

namespace chi {

struct Violation {
  std::uint64_t p = 0;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  static constexpr std::size_t kMaxStored = 100;

  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  std::string name;
  std::uint64_t primes_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // first kMaxStored only

  void fail(std::uint64_t p, std::string expected, std::string actual);
  void absorb(const CheckReport& other);
  bool passed() const { return violation_count == 0; }
};

CheckReport verify_prop11(const Rational& t, long r, std::uint64_t limit);
CheckReport verify_twin(const Rational& t, std::uint64_t limit);
/// Throws NotCubic.
CheckReport verify_cubic_associates(const Rational& t, std::uint64_t limit);
/// Throws NotCircular.
CheckReport verify_circular(const Rational& t, std::uint64_t limit);

/// Smallest k >= 1 with p | L_k.  Throws BadPrime if p | Q.
std::uint64_t lucas_index(const LucasSpec& spec, std::uint64_t p);
CheckReport verify_bridge(const LucasSpec& spec, std::uint64_t limit);

struct BallotReport {
  CheckReport integrality;   // L_k | L_{rk}
  CheckReport identities;    // closed forms through W_r, U_r, V_k, C_s
  CheckReport certificates;  // divisor set equals primes with r | chi
  std::vector<BigInt> values;  // B_1..B_kmax
  bool passed() const { return integrality.passed() && identities.passed() && certificates.passed(); }
};

BallotReport ballot_check(const LucasSpec& spec, long r, std::uint64_t limit, long k_max);

enum class Family { W, V, C, S, Subsequence };

const char* family_name(Family f);

/// Divisor set of a sequence in R(t) against its predicted partition class.
/// Subsequence uses r; the others ignore it.  Primes above 10^4 are not scanned.
CheckReport sequence_divisor_check(const Rational& t, Family family, std::uint64_t limit, long r = 2);

struct FactorSplit {
  std::string name;
  int degree = 0;
  std::uint64_t roots = 0;
  SplitKind kind = SplitKind::Other;
};

struct SplittingReport {
  std::uint64_t p = 0;
  std::vector<FactorSplit> factors;
  bool polynomial_side = false;  // the splitting condition of the theorem
  bool group_side = false;       // p in M_n and K_j, computed in S_p(t)
};

/// Polynomial and group descriptions of M_n and K_j at one prime (p <= 10^4).
SplittingReport splitting_oracle(const Rational& t, long r, long n, long j, std::uint64_t p);
CheckReport verify_splitting_theorems(const Rational& t, long r, std::uint64_t limit, long n_max, long j_max);

struct OrbitDivisor {
  std::uint64_t p = 0;
  long n = 0;  // first orbit index with y_n = 0 mod p
};

struct OrbitReport {
  CheckReport checks;
  std::vector<OrbitDivisor> divisors;
  std::vector<std::pair<std::uint64_t, double>> checkpoints;  // (N', divisors / pi(N'))
};

OrbitReport chebyshev_orbit_divisors(const Rational& x0, long k, long n_max, std::uint64_t limit);

struct QuadmapReport {
  CheckReport checks;
  std::vector<std::uint64_t> divisors;  // primes where the orbit of y -> y^2 - 2 returns to t
  std::uint64_t admissible = 0;
};

QuadmapReport quadmap_divisor_check(const Rational& t, std::uint64_t limit);

struct NondivisorReport {
  CheckReport checks;
  Rational trace;  // b = 2 y1 - t y0
  long r = 0;
  std::uint64_t prime_count = 0;  // pi(limit)
  std::uint64_t target_count = 0;  // |T|
  std::uint64_t target_scanned = 0;
  std::uint64_t divisor_count = 0;  // primes with +-Y in <D>
  std::uint64_t admissible = 0;
  std::vector<std::uint64_t> criterion_disagreements;  // ord(Y) | 2 chi but +-Y not in <D>
  double target_fraction() const {
    return prime_count ? static_cast<double>(target_count) / static_cast<double>(prime_count) : 0.0;
  }
};

/// Throws NotUnitDet if det Y != 1 and TorsionTimesPower if Y = +-D^k, |k| <= 64.
NondivisorReport nondivisor_density(const Rational& t, const Rational& y0, const Rational& y1, long r,
                                    std::uint64_t limit);

struct RotationReport {
  CheckReport checks;            // every divisor p has det([x0, x1]) a square mod p
  Rational det;
  bool det_is_square = false;
  std::uint64_t scanned = 0;
  std::uint64_t divisor_count = 0;
};

/// Divisors of x_n with [x_n, x_{n+1}] = [x0, x1] D^n over primes p <= min(limit, 10^4).
RotationReport rotation_check(const Rational& t, const Rational& x0, const Rational& x1, std::uint64_t limit);

/// Scan bound for sequence membership tests.
inline constexpr std::uint64_t kScanLimit = 10000;

}  // namespace chi
