#include "chi/chebyshev.hpp"

#include <algorithm>

#include "chi/error.hpp"
#include "chi/modarith.hpp"
#include "chi/ring.hpp"

namespace chi {

namespace {

std::uint64_t abs_u(std::int64_t n) {
  return n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
}

void check_cap(long n, long cap) {
  if (n < -cap || n > cap)
    throw Error(Errc::InvalidArgument, "exact Chebyshev index " + std::to_string(n) + " exceeds cap " +
                                           std::to_string(cap));
}

}  // namespace

std::uint64_t cheb_U(std::int64_t n, std::uint64_t x, Modular mod) {
  const ModParam m = make_param(x, mod.p);
  const u64 u = pow(RingElem::generator(m), abs_u(n)).x0();
  return n < 0 ? negmod(u, mod.p) : u;
}

std::uint64_t cheb_C(std::int64_t n, std::uint64_t x, Modular mod) {
  // C_{-n} = C_n
  const ModParam m = make_param(x, mod.p);
  return pow(RingElem::generator(m), abs_u(n)).trace();
}

std::uint64_t cheb_W(std::uint64_t m, std::uint64_t x, Modular mod) {
  const RingElem dm = pow(RingElem::generator(make_param(x, mod.p)), m);
  return addmod(dm.x0(), dm.x1(), mod.p);
}

std::uint64_t cheb_V(std::uint64_t m, std::uint64_t x, Modular mod) {
  const RingElem dm = pow(RingElem::generator(make_param(x, mod.p)), m);
  return submod(dm.x1(), dm.x0(), mod.p);
}

std::vector<Rational> cheb_U_table(long n, const Rational& x) {
  std::vector<Rational> u;
  u.reserve(static_cast<std::size_t>(std::max(n, 1L)) + 1);
  u.emplace_back(0L);
  u.emplace_back(1L);
  for (long k = 1; k < n; ++k) u.push_back(x * u[k] - u[k - 1]);
  u.resize(static_cast<std::size_t>(n) + 1);
  return u;
}

Rational cheb_U(long n, const Rational& x, long cap) {
  check_cap(n, cap);
  if (n < 0) return -cheb_U(-n, x, cap);
  return cheb_U_table(n, x)[static_cast<std::size_t>(n)];
}

Rational cheb_C(long n, const Rational& x, long cap) {
  check_cap(n, cap);
  if (n < 0) n = -n;
  if (n == 0) return Rational(2);
  const auto u = cheb_U_table(n + 1, x);
  return u[n + 1] - u[n - 1];
}

Rational cheb_W(long m, const Rational& x, long cap) {
  check_cap(m + 1, cap);
  const auto u = cheb_U_table(m + 1, x);
  return u[m + 1] + u[m];
}

Rational cheb_V(long m, const Rational& x, long cap) {
  check_cap(m + 1, cap);
  const auto u = cheb_U_table(m + 1, x);
  return u[m + 1] - u[m];
}

LucasSpec LucasSpec::from_parameter(const Rational& t) {
  const BigInt a = t.num(), b = t.den();
  const BigInt T = a + 2 * b;
  if (T == 0) throw Error(Errc::ExcludedParameter, "t = -2 has no Lucas pair");
  return {T, b * T};
}

std::vector<BigInt> lucas_table(const LucasSpec& spec, long n) {
  std::vector<BigInt> l{BigInt(0), BigInt(1)};
  for (long k = 1; k < n; ++k) l.push_back(spec.T * l[k] - spec.Q * l[k - 1]);
  l.resize(static_cast<std::size_t>(std::max(n, 0L)) + 1);
  return l;
}

bool IdentityReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return !r.counterexample; });
}

IdentityReport identity_suite(const Rational& t, long n_max) {
  if (n_max < 1) throw Error(Errc::InvalidArgument, "n_max must be >= 1");
  if (n_max > kExactCap) throw Error(Errc::InvalidArgument, "n_max exceeds the exact cap");
  const long top = n_max * n_max + 1;
  const auto U = cheb_U_table(top, t);
  auto C = [&](long n) { return n == 0 ? Rational(2) : U[n + 1] - U[n - 1]; };
  auto W = [&](long m) { return U[m + 1] + U[m]; };
  auto V = [&](long m) { return U[m + 1] - U[m]; };

  IdentityReport report;
  auto record = [&](IdentityResult& r, bool ok, const std::string& where) {
    ++r.checks;
    if (!ok && !r.counterexample) r.counterexample = where;
  };

  {
    IdentityResult r{"lucas_bridge", 0, std::nullopt};
    const LucasSpec spec = LucasSpec::from_parameter(t);
    const auto L = lucas_table(spec, n_max);
    const Rational delta(spec.delta());
    for (long n = 1; n <= n_max; ++n) {
      const Rational rhs = delta * Rational(L[n] * L[n]) / Rational(spec.Q).pow(n);
      record(r, C(n) - 2 == rhs, "n=" + std::to_string(n));
    }
    report.results.push_back(r);
  }
  {
    IdentityResult r{"pell_norm", 0, std::nullopt};
    const Rational d = t * t - 4;
    for (long s = 1; s <= n_max; ++s) record(r, C(s) * C(s) - d * U[s] * U[s] == 4, "s=" + std::to_string(s));
    report.results.push_back(r);
  }
  {
    IdentityResult r{"odd_factorisation", 0, std::nullopt};
    for (long m = 1; m <= n_max; ++m) record(r, U[2 * m + 1] == W(m) * V(m), "m=" + std::to_string(m));
    report.results.push_back(r);
  }
  {
    IdentityResult r{"even_factorisation", 0, std::nullopt};
    for (long m = 1; m <= n_max; ++m) record(r, U[2 * m] == C(m) * U[m], "m=" + std::to_string(m));
    report.results.push_back(r);
  }
  {
    IdentityResult r{"composition", 0, std::nullopt};
    for (long n = 1; n <= n_max; ++n) {
      const auto Um_of_Cn = cheb_U_table(n_max, C(n));
      for (long m = 1; m <= n_max; ++m)
        record(r, U[m * n] == Um_of_Cn[m] * U[n], "m=" + std::to_string(m) + ",n=" + std::to_string(n));
    }
    report.results.push_back(r);
  }
  return report;
}

}  // namespace chi
