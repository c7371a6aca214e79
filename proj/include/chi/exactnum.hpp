#pragma once

// Exact rationals and square-class tests.  Big integers are GMP's mpz_class;
// everything modular elsewhere in the library uses 64-bit residues.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chi {

using BigInt = mpz_class;

/// Reduced fraction num/den with den >= 1.  Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT: implicit from integer literals
  Rational(const BigInt& n) : q_(n) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "a/b" or "a" with an optional leading sign on a, no whitespace.
  static Rational parse(std::string_view text);
  std::string str() const;

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return from_mpq(-q_); }
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational pow(unsigned e) const;
  double to_double() const { return q_.get_d(); }
  long double to_long_double() const;

  /// num * den^{-1} mod p.  Caller guarantees p does not divide den.
  std::uint64_t mod(std::uint64_t p) const;
  bool den_divisible_by(std::uint64_t p) const;
  bool num_divisible_by(std::uint64_t p) const;

private:
  static Rational from_mpq(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }
  mpq_class q_{0};
};

enum class SquareKind { Square, NonSquare, NegativeNonSquare };

struct SquareClass {
  SquareKind kind = SquareKind::NonSquare;
  std::optional<Rational> root;  // non-negative root, present iff Square

  bool is_square() const { return kind == SquareKind::Square; }
};

SquareClass is_square(const Rational& q);

/// Does q == sign * r * b^2 for some rational b?  Returns b >= 0 when so.
SquareClass is_r_scaled_square(const Rational& q, long r, int sign);

/// Exact integer r-th root of n > 0, if any.
std::optional<BigInt> rth_root(const BigInt& n, unsigned r);

BigInt mod_floor(const BigInt& a, const BigInt& m);
std::uint64_t mod_ui(const BigInt& a, std::uint64_t p);

}  // namespace chi
