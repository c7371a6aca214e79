#pragma once

// Dense polynomials over F_p for small p, coefficients low degree first.

#include <cstdint>
#include <vector>

namespace chi {

class PolyFp {
public:
  PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  static PolyFp constant(std::uint64_t p, std::uint64_t c) { return PolyFp(p, {c}); }
  static PolyFp x(std::uint64_t p) { return PolyFp(p, {0, 1}); }

  std::uint64_t p() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }

  std::uint64_t eval(std::uint64_t x) const;
  PolyFp monic() const;

  friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  friend bool operator==(const PolyFp& a, const PolyFp& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

private:
  void trim();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

struct DivMod {
  PolyFp quot;
  PolyFp rem;
};

DivMod divmod(const PolyFp& a, const PolyFp& b);
PolyFp operator%(const PolyFp& a, const PolyFp& b);
PolyFp gcd(PolyFp a, PolyFp b);  // monic, or zero
PolyFp powmod(const PolyFp& base, std::uint64_t e, const PolyFp& mod);

/// Number of distinct roots in F_p, by evaluation at every residue.
std::uint64_t count_roots(const PolyFp& f);

enum class SplitKind { Linear, Quadratic, Other };

/// Linear: product of linear factors.  Quadratic: product of irreducible quadratics.
/// Constants count as linear splits.
SplitKind split_kind(const PolyFp& f);

const char* split_kind_name(SplitKind k);

}  // namespace chi
