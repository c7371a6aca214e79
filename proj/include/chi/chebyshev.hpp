#pragma once

// Chebyshev polynomials of the second kind U_n and first kind C_n (normalised so
// that C_n(x) = trace D_x^n), plus W_{2m+1} = U_{m+1} + U_m, V_{2m+1} = U_{m+1} - U_m.
// Modular evaluation goes through powers of D in the ring; exact evaluation uses
// the three-term recurrence on rationals.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chi/exactnum.hpp"

namespace chi {

inline constexpr long kExactCap = 60;

struct Modular {
  std::uint64_t p;
};

std::uint64_t cheb_U(std::int64_t n, std::uint64_t x, Modular mod);
std::uint64_t cheb_C(std::int64_t n, std::uint64_t x, Modular mod);
std::uint64_t cheb_W(std::uint64_t m, std::uint64_t x, Modular mod);
std::uint64_t cheb_V(std::uint64_t m, std::uint64_t x, Modular mod);

/// Exact values.  |n| must not exceed cap.
Rational cheb_U(long n, const Rational& x, long cap = kExactCap);
Rational cheb_C(long n, const Rational& x, long cap = kExactCap);
Rational cheb_W(long m, const Rational& x, long cap = kExactCap);
Rational cheb_V(long m, const Rational& x, long cap = kExactCap);

/// U_0..U_n exactly.
std::vector<Rational> cheb_U_table(long n, const Rational& x);

/// Integer Lucas pair with t = (T^2 - 2Q)/Q.
struct LucasSpec {
  BigInt T;
  BigInt Q;

  Rational t() const { return Rational(T * T - 2 * Q, Q); }
  BigInt delta() const { return T * T - 4 * Q; }

  /// For t = a/b reduced: T = a + 2b, Q = b(a + 2b).  Needs t != -2.
  static LucasSpec from_parameter(const Rational& t);
};

/// L_0..L_n exactly.
std::vector<BigInt> lucas_table(const LucasSpec& spec, long n);

struct IdentityResult {
  std::string name;
  long checks = 0;
  std::optional<std::string> counterexample;
};

struct IdentityReport {
  std::vector<IdentityResult> results;
  bool passed() const;
};

/// Exact checks for 1 <= n, m, s <= n_max:
///   C_n - 2 = (Delta / Q^n) L_n^2, C_s^2 - (x^2-4) U_s^2 = 4, U_{2m+1} = W V,
///   U_{2m} = C_m U_m, U_{mn} = U_m(C_n) U_n.
IdentityReport identity_suite(const Rational& t, long n_max);

}  // namespace chi
