#include "chi/exactnum.hpp"

#include <cmath>

#include "chi/error.hpp"
#include "chi/modarith.hpp"

namespace chi {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::ExcludedParameter: return "ExcludedParameter";
    case Errc::DenominatorDivisible: return "DenominatorDivisible";
    case Errc::NotUnitDet: return "NotUnitDet";
    case Errc::BoundViolation: return "BoundViolation";
    case Errc::NotCubic: return "NotCubic";
    case Errc::NotCircular: return "NotCircular";
    case Errc::BadPrime: return "BadPrime";
    case Errc::PrimeTooLarge: return "PrimeTooLarge";
    case Errc::UnsupportedPrediction: return "UnsupportedPrediction";
    case Errc::TorsionTimesPower: return "TorsionTimesPower";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text))
    throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (q_ == 0) throw Error(Errc::InvalidArgument, "inverse of zero");
  return from_mpq(1 / q_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.q_ == 0) throw Error(Errc::InvalidArgument, "division by zero");
  return Rational::from_mpq(a.q_ / b.q_);
}

Rational Rational::pow(unsigned e) const {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Rational(n, d);
}

long double Rational::to_long_double() const {
  // mpz -> long double loses nothing relevant for root bracketing.
  long num_exp = 0, den_exp = 0;
  const double nm = mpz_get_d_2exp(&num_exp, q_.get_num_mpz_t());
  const double dm = mpz_get_d_2exp(&den_exp, q_.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(nm) / dm, static_cast<int>(num_exp - den_exp));
}

std::uint64_t Rational::mod(std::uint64_t p) const {
  const u64 n = mod_ui(q_.get_num(), p);
  const u64 d = mod_ui(q_.get_den(), p);
  if (d == 0) throw Error(Errc::DenominatorDivisible, std::to_string(p) + " divides " + den().get_str());
  return mulmod(n, invmod(d, p), p);
}

bool Rational::den_divisible_by(std::uint64_t p) const {
  return mpz_divisible_ui_p(q_.get_den_mpz_t(), p) != 0;
}

bool Rational::num_divisible_by(std::uint64_t p) const {
  return mpz_divisible_ui_p(q_.get_num_mpz_t(), p) != 0;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::uint64_t mod_ui(const BigInt& a, std::uint64_t p) {
  return mpz_fdiv_ui(a.get_mpz_t(), p);
}

namespace {

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

}  // namespace

SquareClass is_square(const Rational& q) {
  if (q.sign() < 0) return {SquareKind::NegativeNonSquare, std::nullopt};
  // Reduced fraction: a square iff numerator and denominator both are.
  auto n = exact_sqrt(q.num());
  auto d = exact_sqrt(q.den());
  if (n && d) return {SquareKind::Square, Rational(*n, *d)};
  return {SquareKind::NonSquare, std::nullopt};
}

SquareClass is_r_scaled_square(const Rational& q, long r, int sign) {
  if (r < 2) throw Error(Errc::InvalidArgument, "is_r_scaled_square needs r >= 2");
  if (sign != 1 && sign != -1) throw Error(Errc::InvalidArgument, "sign must be +1 or -1");
  return is_square(q / Rational(sign * r));
}

std::optional<BigInt> rth_root(const BigInt& n, unsigned r) {
  if (r < 2) throw Error(Errc::InvalidArgument, "rth_root needs r >= 2");
  if (n <= 0) return std::nullopt;
  BigInt root;
  if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), r) != 0) return root;
  return std::nullopt;
}

}  // namespace chi
