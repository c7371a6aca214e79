#include "chi/polyfp.hpp"

#include <algorithm>

#include "chi/error.hpp"
#include "chi/modarith.hpp"

namespace chi {

PolyFp::PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t PolyFp::eval(std::uint64_t x) const {
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addmod(mulmod(acc, x, p_), *it, p_);
  return acc;
}

PolyFp PolyFp::monic() const {
  if (c_.empty()) return *this;
  const u64 inv = invmod(c_.back(), p_);
  std::vector<u64> out(c_);
  for (auto& c : out) c = mulmod(c, inv, p_);
  return PolyFp(p_, std::move(out));
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
  std::vector<u64> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = addmod(out[i], b.c_[i], a.p_);
  return PolyFp(a.p_, std::move(out));
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
  std::vector<u64> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = submod(out[i], b.c_[i], a.p_);
  return PolyFp(a.p_, std::move(out));
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  if (a.c_.empty() || b.c_.empty()) return PolyFp(a.p_, {});
  std::vector<u64> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] = addmod(out[i + j], mulmod(a.c_[i], b.c_[j], a.p_), a.p_);
  return PolyFp(a.p_, std::move(out));
}

DivMod divmod(const PolyFp& a, const PolyFp& b) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
  const u64 p = a.p();
  std::vector<u64> rem = a.coeffs();
  const auto& d = b.coeffs();
  if (rem.size() < d.size()) return {PolyFp(p, {}), a};
  const u64 inv = invmod(d.back(), p);
  std::vector<u64> quot(rem.size() - d.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const u64 q = mulmod(rem[k + d.size() - 1], inv, p);
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] = submod(rem[k + i], mulmod(q, d[i], p), p);
  }
  rem.resize(d.size() - 1);
  return {PolyFp(p, std::move(quot)), PolyFp(p, std::move(rem))};
}

PolyFp operator%(const PolyFp& a, const PolyFp& b) { return divmod(a, b).rem; }

PolyFp gcd(PolyFp a, PolyFp b) {
  while (!b.is_zero()) {
    PolyFp r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyFp powmod(const PolyFp& base, std::uint64_t e, const PolyFp& mod) {
  PolyFp result = PolyFp::constant(base.p(), 1) % mod;
  PolyFp b = base % mod;
  while (e) {
    if (e & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return result;
}

std::uint64_t count_roots(const PolyFp& f) {
  if (f.is_zero()) return f.p();
  std::uint64_t n = 0;
  for (u64 x = 0; x < f.p(); ++x)
    if (f.eval(x) == 0) ++n;
  return n;
}

namespace {

// Strip every factor dividing x^{p^k} - x; true if nothing else remains.
bool splits_over_degree(PolyFp f, std::uint64_t k) {
  const u64 p = f.p();
  while (f.degree() > 0) {
    const PolyFp frob = powmod(PolyFp::x(p), k == 1 ? p : p * p, f) - PolyFp::x(p);
    const PolyFp g = gcd(f, frob);
    if (g.degree() <= 0) return false;
    f = divmod(f, g).quot;
  }
  return true;
}

}  // namespace

SplitKind split_kind(const PolyFp& f) {
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "split_kind of the zero polynomial");
  if (f.degree() <= 0) return SplitKind::Linear;
  if (splits_over_degree(f, 1)) return SplitKind::Linear;
  if (count_roots(f) == 0 && splits_over_degree(f, 2)) return SplitKind::Quadratic;
  return SplitKind::Other;
}

const char* split_kind_name(SplitKind k) {
  switch (k) {
    case SplitKind::Linear: return "linear";
    case SplitKind::Quadratic: return "quadratic";
    case SplitKind::Other: return "other";
  }
  return "unknown";
}

}  // namespace chi
