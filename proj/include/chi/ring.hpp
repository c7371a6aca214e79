#pragma once

// The ring R_p(t) of 2x2 matrices over F_p commuting with D = [[0,1],[-1,t]],
// its norm-one group S_p(t), and the index of appearance chi(t,p).

#include <cstdint>

#include "chi/exactnum.hpp"
#include "chi/primes.hpp"

namespace chi {

struct ModParam {
  std::uint64_t p = 0;
  std::uint64_t t_mod = 0;
  std::uint64_t delta_mod = 0;  // t^2 - 4 mod p

  friend bool operator==(const ModParam&, const ModParam&) = default;
};

/// Throws DenominatorDivisible if p | den(t), InvalidArgument if p < 3.
ModParam reduce_param(const Rational& t, std::uint64_t p);
ModParam make_param(std::uint64_t t_mod, std::uint64_t p);

/// Element X = [x0, x1] (second row of the matrix).  Stored as alpha*I + beta*D
/// with beta = x0, alpha = x1 - t*x0.
class RingElem {
public:
  static RingElem from_row(const ModParam& m, std::uint64_t x0, std::uint64_t x1);
  static RingElem from_row(const ModParam& m, const Rational& x0, const Rational& x1);
  static RingElem identity(const ModParam& m) { return {m, 1 % m.p, 0}; }
  static RingElem generator(const ModParam& m) { return {m, 0, 1}; }  // D

  const ModParam& param() const { return m_; }
  std::uint64_t x0() const { return beta_; }
  std::uint64_t x1() const;
  std::uint64_t trace() const;
  std::uint64_t det() const;

  bool is_identity() const { return beta_ == 0 && alpha_ == 1 % m_.p; }
  bool is_minus_identity() const { return beta_ == 0 && alpha_ == m_.p - 1; }
  RingElem operator-() const;

  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.m_.p == b.m_.p;
  }

private:
  RingElem(const ModParam& m, std::uint64_t alpha, std::uint64_t beta)
      : m_(m), alpha_(alpha), beta_(beta) {}

  ModParam m_;
  std::uint64_t alpha_;
  std::uint64_t beta_;
};

inline RingElem mul(const RingElem& a, const RingElem& b) { return a * b; }
RingElem pow(RingElem a, std::uint64_t n);

enum class OrderKind { Split, Inert, DeltaZero };

struct GroupOrder {
  std::uint64_t value = 0;  // p-hat
  OrderKind kind = OrderKind::Split;
};

GroupOrder group_order(const ModParam& m);

/// Exact multiplicative order of a, given that a^bound = I.
std::uint64_t element_order(const RingElem& a, const FactorMap& bound);

/// chi(t,p), the order of D.  The Factorizer overload must cover p + 1.
std::uint64_t index(const Rational& t, std::uint64_t p);
std::uint64_t index(const ModParam& m, const Factorizer& fac);

/// Smallest n >= 1 with U_n = 0 and U_{n+1} = 1 mod p, by direct recurrence.
std::uint64_t index_by_scan(const Rational& t, std::uint64_t p);
std::uint64_t index_by_scan(const ModParam& m);

const char* order_kind_name(OrderKind k);

}  // namespace chi
