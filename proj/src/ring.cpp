#include "chi/ring.hpp"

#include <string>

#include "chi/error.hpp"
#include "chi/modarith.hpp"

namespace chi {

ModParam make_param(std::uint64_t t_mod, std::uint64_t p) {
  if (p < 3) throw Error(Errc::InvalidArgument, "p must be an odd prime, got " + std::to_string(p));
  t_mod %= p;
  return {p, t_mod, submod(mulmod(t_mod, t_mod, p), 4 % p, p)};
}

ModParam reduce_param(const Rational& t, std::uint64_t p) {
  if (p < 3) throw Error(Errc::InvalidArgument, "p must be an odd prime, got " + std::to_string(p));
  if (t.den_divisible_by(p))
    throw Error(Errc::DenominatorDivisible, std::to_string(p) + " divides the denominator of " + t.str());
  return make_param(t.mod(p), p);
}

RingElem RingElem::from_row(const ModParam& m, std::uint64_t x0, std::uint64_t x1) {
  x0 %= m.p;
  x1 %= m.p;
  return {m, submod(x1, mulmod(m.t_mod, x0, m.p), m.p), x0};
}

RingElem RingElem::from_row(const ModParam& m, const Rational& x0, const Rational& x1) {
  return from_row(m, x0.mod(m.p), x1.mod(m.p));
}

std::uint64_t RingElem::x1() const { return addmod(alpha_, mulmod(m_.t_mod, beta_, m_.p), m_.p); }

std::uint64_t RingElem::trace() const {
  // trace(alpha I + beta D) = 2 alpha + t beta
  const u64 p = m_.p;
  return addmod(addmod(alpha_, alpha_, p), mulmod(m_.t_mod, beta_, p), p);
}

std::uint64_t RingElem::det() const {
  // det(alpha I + beta D) = alpha^2 + t alpha beta + beta^2
  const u64 p = m_.p;
  u64 d = mulmod(alpha_, alpha_, p);
  d = addmod(d, mulmod(mulmod(m_.t_mod, alpha_, p), beta_, p), p);
  return addmod(d, mulmod(beta_, beta_, p), p);
}

RingElem RingElem::operator-() const { return {m_, negmod(alpha_, m_.p), negmod(beta_, m_.p)}; }

RingElem operator*(const RingElem& a, const RingElem& b) {
  const u64 p = a.m_.p;
  // D^2 = tD - I
  const u64 bb = mulmod(a.beta_, b.beta_, p);
  const u64 alpha = submod(mulmod(a.alpha_, b.alpha_, p), bb, p);
  u64 beta = addmod(mulmod(a.alpha_, b.beta_, p), mulmod(b.alpha_, a.beta_, p), p);
  beta = addmod(beta, mulmod(a.m_.t_mod, bb, p), p);
  return {a.m_, alpha, beta};
}

RingElem pow(RingElem a, std::uint64_t n) {
  RingElem result = RingElem::identity(a.param());
  while (n) {
    if (n & 1) result = result * a;
    a = a * a;
    n >>= 1;
  }
  return result;
}

GroupOrder group_order(const ModParam& m) {
  if (m.delta_mod == 0) {
    const u64 value = m.t_mod == 2 % m.p ? m.p : 2 * m.p;
    return {value, OrderKind::DeltaZero};
  }
  if (legendre(m.delta_mod, m.p) == 1) return {m.p - 1, OrderKind::Split};
  return {m.p + 1, OrderKind::Inert};
}

std::uint64_t element_order(const RingElem& a, const FactorMap& bound) {
  if (a.det() != 1 % a.param().p)
    throw Error(Errc::NotUnitDet, "element has determinant " + std::to_string(a.det()));
  std::uint64_t order = bound.value();
  if (!pow(a, order).is_identity())
    throw Error(Errc::BoundViolation, "a^" + std::to_string(order) + " is not the identity");
  for (auto [q, e] : bound) {
    for (unsigned i = 0; i < e; ++i) {
      if (!pow(a, order / q).is_identity()) break;
      order /= q;
    }
  }
  return order;
}

std::uint64_t index(const ModParam& m, const Factorizer& fac) {
  if (m.delta_mod == 0) return m.t_mod == 2 % m.p ? m.p : 2 * m.p;
  const GroupOrder g = group_order(m);
  return element_order(RingElem::generator(m), fac.factorize(g.value));
}

std::uint64_t index(const Rational& t, std::uint64_t p) {
  const ModParam m = reduce_param(t, p);
  return index(m, Factorizer(p + 1));
}

std::uint64_t index_by_scan(const ModParam& m) {
  const u64 p = m.p;
  u64 prev = 0, cur = 1;  // U_0, U_1
  for (std::uint64_t n = 1; n <= 2 * p + 2; ++n) {
    const u64 next = submod(mulmod(m.t_mod, cur, p), prev, p);
    if (cur == 0 && next == 1) return n;
    prev = cur;
    cur = next;
  }
  throw Error(Errc::BoundViolation, "scan did not terminate within 2p+2 steps");
}

std::uint64_t index_by_scan(const Rational& t, std::uint64_t p) { return index_by_scan(reduce_param(t, p)); }

const char* order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::Split: return "split";
    case OrderKind::Inert: return "inert";
    case OrderKind::DeltaZero: return "delta_zero";
  }
  return "unknown";
}

}  // namespace chi
