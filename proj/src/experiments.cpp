#include "chi/experiments.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "chi/classify.hpp"
#include "chi/error.hpp"
#include "chi/modarith.hpp"
#include "chi/primes.hpp"
#include "chi/ring.hpp"

namespace chi {

void CheckReport::fail(std::uint64_t p, std::string expected, std::string actual) {
  ++violation_count;
  if (violations.size() < kMaxStored) violations.push_back({p, std::move(expected), std::move(actual)});
}

void CheckReport::absorb(const CheckReport& other) {
  primes_checked += other.primes_checked;
  violation_count += other.violation_count;
  for (const auto& v : other.violations)
    if (violations.size() < kMaxStored) violations.push_back(v);
}

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

bool any_den_divisible(std::uint64_t p, std::initializer_list<const Rational*> qs) {
  for (const Rational* q : qs)
    if (q->den_divisible_by(p)) return true;
  return false;
}

// chi for several parameters at one prime, sharing one factor table.
struct IndexCalc {
  explicit IndexCalc(std::uint64_t limit) : fac(limit + 1) {}
  std::uint64_t operator()(const Rational& t, std::uint64_t p) const { return index(reduce_param(t, p), fac); }
  Factorizer fac;
};

long v(std::uint64_t n, long r) { return static_cast<long>(valuation(n, static_cast<std::uint64_t>(r))); }

}  // namespace

CheckReport verify_prop11(const Rational& t, long r, std::uint64_t limit) {
  if (is_excluded(t)) throw Error(Errc::ExcludedParameter, "t = " + t.str() + " is excluded");
  CheckReport rep{"prop11"};
  const Rational tr = cheb_C(r, t, r + 1);
  const Rational ur = cheb_U(r, t, r + 1);
  const IndexCalc chi(limit);
  for_each_prime(3, limit, [&](std::uint64_t p) {
    if (t.den_divisible_by(p) || ur.num_divisible_by(p)) return;
    ++rep.primes_checked;
    const auto c = chi(t, p);
    const auto cr = chi(tr, p);
    const auto expected = c % r == 0 ? c / r : c;
    if (cr != expected) rep.fail(p, "chi(C_r(t)) = " + str(expected), str(cr));
  });
  return rep;
}

CheckReport verify_twin(const Rational& t, std::uint64_t limit) {
  if (is_excluded(t)) throw Error(Errc::ExcludedParameter, "t = " + t.str() + " is excluded");
  CheckReport rep{"twin"};
  const IndexCalc chi(limit);
  const Rational neg = -t;
  for_each_prime(3, limit, [&](std::uint64_t p) {
    if (t.den_divisible_by(p)) return;
    ++rep.primes_checked;
    const auto c = chi(t, p);
    const auto cn = chi(neg, p);
    std::uint64_t expected;
    switch (v(c, 2)) {
      case 0: expected = 2 * c; break;
      case 1: expected = c / 2; break;
      default: expected = c;
    }
    if (cn != expected) rep.fail(p, "chi(-t) = " + str(expected), str(cn));
  });
  return rep;
}

CheckReport verify_cubic_associates(const Rational& t, std::uint64_t limit) {
  const ParamClass c = classify(t, {});
  if (!c.cubic) throw Error(Errc::NotCubic, t.str() + " is not cubic");
  CheckReport rep{"cubic_associates"};
  const IndexCalc chi(limit);
  const std::array<Rational, 3> a{t, *c.a1, *c.a2};
  for_each_prime(5, limit, [&](std::uint64_t p) {
    if (any_den_divisible(p, {&a[0], &a[1], &a[2]})) return;
    ++rep.primes_checked;
    std::array<long, 3> j{};
    for (int k = 0; k < 3; ++k) j[k] = v(chi(a[k], p), 3);
    const auto desc = "j = (" + std::to_string(j[0]) + "," + std::to_string(j[1]) + "," + std::to_string(j[2]) + ")";
    const int zeros = static_cast<int>(std::count(j.begin(), j.end(), 0L));
    if (zeros > 1) rep.fail(p, "level-0 sets disjoint", desc);
    for (int k = 0; k < 3; ++k) {
      const bool lhs = j[k] == 1;
      const bool rhs = j[(k + 1) % 3] == 0 || j[(k + 2) % 3] == 0;
      if (lhs != rhs) rep.fail(p, "level 1 of a" + std::to_string(k) + " = union of the other level-0 sets", desc);
    }
    const bool deep = std::any_of(j.begin(), j.end(), [](long x) { return x >= 2; });
    if (deep && !(j[0] == j[1] && j[1] == j[2])) rep.fail(p, "equal levels >= 2", desc);
  });
  return rep;
}

CheckReport verify_circular(const Rational& t, std::uint64_t limit) {
  const ParamClass c = classify(t, {});
  if (!c.circular) throw Error(Errc::NotCircular, t.str() + " is not circular");
  CheckReport rep{"circular"};
  const IndexCalc chi(limit);
  const Rational w = *c.circular;
  for_each_prime(3, limit, [&](std::uint64_t p) {
    if (any_den_divisible(p, {&t, &w})) return;
    ++rep.primes_checked;
    const long jt = v(chi(t, p), 2), jw = v(chi(w, p), 2);
    const auto desc = "j(t)=" + std::to_string(jt) + " j(w)=" + std::to_string(jw);
    if ((jw == 2) != (jt <= 1)) rep.fail(p, "level 2 of w = levels 0,1 of t", desc);
    if ((jt == 2) != (jw <= 1)) rep.fail(p, "level 2 of t = levels 0,1 of w", desc);
    if ((jt >= 3 || jw >= 3) && jt != jw) rep.fail(p, "equal levels >= 3", desc);
  });
  return rep;
}

std::uint64_t lucas_index(const LucasSpec& spec, std::uint64_t p) {
  if (p < 3) throw Error(Errc::InvalidArgument, "p must be an odd prime");
  if (mod_ui(spec.Q, p) == 0) throw Error(Errc::BadPrime, str(p) + " divides Q");
  const u64 T = mod_ui(spec.T, p), Q = mod_ui(spec.Q, p);
  u64 prev = 0, cur = 1;  // L_0, L_1
  for (std::uint64_t k = 1; k <= 2 * p + 2; ++k) {
    if (cur == 0) return k;
    const u64 next = submod(mulmod(T, cur, p), mulmod(Q, prev, p), p);
    prev = cur;
    cur = next;
  }
  throw Error(Errc::BoundViolation, "Lucas scan did not reach zero");
}

CheckReport verify_bridge(const LucasSpec& spec, std::uint64_t limit) {
  CheckReport rep{"bridge"};
  const Rational t = spec.t();
  const BigInt bad = 2 * spec.Q * spec.T * spec.delta();
  const IndexCalc chi(limit);
  for_each_prime(3, limit, [&](std::uint64_t p) {
    if (mod_ui(bad, p) == 0 || t.den_divisible_by(p)) return;
    ++rep.primes_checked;
    const auto a = lucas_index(spec, p);
    const auto b = chi(t, p);
    if (a != b) rep.fail(p, "lucas rank " + str(a), "chi " + str(b));
  });
  return rep;
}

namespace {

// L_n mod p via the companion matrix [[T, -Q], [1, 0]].
u64 lucas_mod(u64 T, u64 Q, std::uint64_t n, u64 p) {
  using M = std::array<u64, 4>;
  auto mul = [p](const M& a, const M& b) {
    return M{addmod(mulmod(a[0], b[0], p), mulmod(a[1], b[2], p), p),
             addmod(mulmod(a[0], b[1], p), mulmod(a[1], b[3], p), p),
             addmod(mulmod(a[2], b[0], p), mulmod(a[3], b[2], p), p),
             addmod(mulmod(a[2], b[1], p), mulmod(a[3], b[3], p), p)};
  };
  M result{1, 0, 0, 1}, base{T, negmod(Q, p), 1, 0};
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result[2];  // lower-left entry of M^n is L_n
}

}  // namespace

BallotReport ballot_check(const LucasSpec& spec, long r, std::uint64_t limit, long k_max) {
  if (k_max < 1 || k_max > kExactCap) throw Error(Errc::InvalidArgument, "k_max must be in 1..60");
  if (r < 2) throw Error(Errc::InvalidArgument, "r must be a prime >= 2");
  BallotReport rep;
  rep.integrality.name = "ballot_integrality";
  rep.identities.name = "ballot_identities";
  rep.certificates.name = "ballot_certificates";
  const Rational t = spec.t();
  const auto L = lucas_table(spec, r * k_max);
  const auto U = cheb_U_table(k_max + 2, t);
  auto C = [&](long n) { return n == 0 ? Rational(2) : U[n + 1] - U[n - 1]; };
  const Rational Q(spec.Q);

  for (long k = 1; k <= k_max; ++k) {
    ++rep.integrality.primes_checked;
    if (L[k] == 0 || L[r * k] % L[k] != 0) {
      rep.integrality.fail(static_cast<std::uint64_t>(k), "L_k | L_rk", L[k] == 0 ? "L_k = 0" : "remainder");
      rep.values.emplace_back(0);
      continue;
    }
    const BigInt B = L[r * k] / L[k];
    rep.values.push_back(B);
    Rational rhs;
    if (r == 2) {
      if (k % 2) rhs = Q.pow((k - 1) / 2) * (U[(k + 1) / 2] - U[(k - 1) / 2]);
      else rhs = Q.pow(k / 2) * C(k / 2);
    } else {
      const auto alpha = static_cast<unsigned>((r - 1) * k / 2);
      if (k % 2) rhs = Q.pow(alpha) * cheb_W((r - 1) / 2, C(k), r + 1);
      else rhs = Q.pow(alpha) * cheb_U(r, C(k / 2), r + 1);
    }
    ++rep.identities.primes_checked;
    if (rhs != Rational(B)) rep.identities.fail(static_cast<std::uint64_t>(k), B.get_str(), rhs.str());
  }

  const IndexCalc chi(limit);
  const auto ur = static_cast<std::uint64_t>(r);
  for_each_prime(3, limit, [&](std::uint64_t p) {
    if (p == ur || mod_ui(spec.Q, p) == 0 || t.den_divisible_by(p)) return;
    ++rep.certificates.primes_checked;
    const auto c = chi(t, p);
    const u64 T = mod_ui(spec.T, p), Qp = mod_ui(spec.Q, p);
    if (c % ur == 0) {
      const auto n = c / ur;
      // p | B_n iff p | L_{rn} and p does not divide L_n.
      if (lucas_mod(T, Qp, c, p) != 0 || lucas_mod(T, Qp, n, p) == 0)
        rep.certificates.fail(p, "p | B_" + str(n), "no certificate");
    }
    for (long k = 1; k <= k_max; ++k) {
      const BigInt& B = rep.values[k - 1];
      if (B != 0 && mod_ui(B, p) == 0 && c % ur != 0)
        rep.certificates.fail(p, "r | chi since p | B_" + std::to_string(k), "chi = " + str(c));
    }
  });
  return rep;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::W: return "W";
    case Family::V: return "V";
    case Family::C: return "C";
    case Family::S: return "S";
    case Family::Subsequence: return "subsequence";
  }
  return "unknown";
}

CheckReport sequence_divisor_check(const Rational& t, Family family, std::uint64_t limit, long r) {
  if (is_excluded(t)) throw Error(Errc::ExcludedParameter, "t = " + t.str() + " is excluded");
  CheckReport rep{std::string("sequence_") + family_name(family)};
  Rational x0, x1;
  switch (family) {
    case Family::W: x0 = -1; x1 = 1; break;
    case Family::V: x0 = 1; x1 = 1; break;
    case Family::C: x0 = 2; x1 = t; break;
    case Family::S: {
      const ParamClass c = classify(t, {});
      if (!c.cubic) throw Error(Errc::NotCubic, t.str() + " is not cubic");
      const Rational b = *c.cubic;
      x0 = b.inverse();
      x1 = (t + b) / (2 * b);
      break;
    }
    case Family::Subsequence:
      if (r < 2) throw Error(Errc::InvalidArgument, "r must be a prime >= 2");
      break;
  }
  const IndexCalc chi(limit);
  const std::uint64_t top = std::min(limit, kScanLimit);
  for_each_prime(3, top, [&](std::uint64_t p) {
    if (any_den_divisible(p, {&t, &x0, &x1})) return;
    if (family == Family::S && p == 3) return;
    if (family == Family::Subsequence && p == static_cast<std::uint64_t>(r)) return;
    ++rep.primes_checked;
    const ModParam m = reduce_param(t, p);
    const auto c = index(m, chi.fac);
    const RingElem D = RingElem::generator(m);
    RingElem cur = family == Family::Subsequence ? D : RingElem::from_row(m, x0, x1);
    const RingElem step = family == Family::Subsequence ? pow(D, static_cast<std::uint64_t>(r)) : D;
    bool divides = false;
    for (std::uint64_t n = 0; n < c && !divides; ++n) {
      divides = cur.x0() == 0;
      cur = cur * step;
    }
    bool predicted = false;
    switch (family) {
      case Family::W: predicted = c % 2 == 1; break;
      case Family::V: predicted = v(c, 2) == 1; break;
      case Family::C: predicted = c % 4 == 0; break;
      case Family::S: predicted = c % 3 == 0; break;
      case Family::Subsequence: predicted = r == 2 ? v(c, 2) <= 1 : c % r != 0; break;
    }
    if (divides != predicted)
      rep.fail(p, predicted ? "divisor (chi = " + str(c) + ")" : "non-divisor (chi = " + str(c) + ")",
               divides ? "divisor" : "non-divisor");
  });
  return rep;
}

namespace {

PolyFp cheb_C_poly(std::uint64_t n, std::uint64_t p) {
  PolyFp prev = PolyFp::constant(p, 2), cur = PolyFp::x(p);
  if (n == 0) return prev;
  for (std::uint64_t k = 1; k < n; ++k) {
    PolyFp next = PolyFp::x(p) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::uint64_t ipow(std::uint64_t b, long e) {
  std::uint64_t out = 1;
  for (long i = 0; i < e; ++i) out *= b;
  return out;
}

FactorSplit describe(std::string name, const PolyFp& f) {
  return {std::move(name), f.degree(), count_roots(f), split_kind(f)};
}

}  // namespace

SplittingReport splitting_oracle(const Rational& t, long r, long n, long j, std::uint64_t p) {
  if (p > kScanLimit) throw Error(Errc::PrimeTooLarge, str(p) + " exceeds the root-enumeration bound");
  if (n < 0 || j < 1 || j < n) throw Error(Errc::InvalidArgument, "need j >= n >= 0 and j >= 1");
  const ModParam m = reduce_param(t, p);
  const bool reducible = is_square(t * t - 4).is_square();
  if (r == 2 && !reducible && j < 2) throw Error(Errc::InvalidArgument, "r = 2 needs j >= 2");
  SplittingReport rep;
  rep.p = p;

  // Group side: S_p(t) is cyclic of order p-hat.
  const std::uint64_t phat = group_order(m).value;
  const auto ur = static_cast<std::uint64_t>(r);
  const std::uint64_t rj = ipow(ur, j), rn = ipow(ur, n);
  const bool in_K = phat % rj == 0;
  const bool in_M = pow(RingElem::generator(m), phat / std::gcd(phat, rn)).is_identity();
  rep.group_side = in_K && in_M;

  // Polynomial side.
  const u64 tm = m.t_mod;
  const PolyFp g = cheb_C_poly(rn, p) - PolyFp::constant(p, tm);
  std::vector<u64> phi_coeffs(static_cast<std::size_t>((ur - 1) * ipow(ur, j - 1)) + 1, 0);
  for (std::uint64_t i = 0; i < ur; ++i) phi_coeffs[i * ipow(ur, j - 1)] = 1;
  const PolyFp phi(p, phi_coeffs);
  const PolyFp f(p, {1, negmod(tm, p), 1});
  if (reducible) {
    rep.factors = {describe("Phi_j", phi), describe("g_n", g)};
    rep.polynomial_side = split_kind(phi * g) == SplitKind::Linear;
  } else if (r == 2) {
    const PolyFp ft(p, {submod(mulmod(tm, tm, p), 4, p), 0, 1});
    const PolyFp cj = cheb_C_poly(ipow(2, j - 2), p);
    rep.factors = {describe("f~", ft), describe("c_{j-2}", cj), describe("g_n", g)};
    rep.polynomial_side = split_kind(cj * ft * g) == SplitKind::Linear;
  } else {
    rep.factors = {describe("f", f), describe("Phi_j", phi), describe("g_n", g)};
    const SplitKind fp = split_kind(f * phi);
    rep.polynomial_side = fp != SplitKind::Other && split_kind(g) == SplitKind::Linear;
  }
  return rep;
}

CheckReport verify_splitting_theorems(const Rational& t, long r, std::uint64_t limit, long n_max, long j_max) {
  if (is_excluded(t)) throw Error(Errc::ExcludedParameter, "t = " + t.str() + " is excluded");
  if (limit > kScanLimit) throw Error(Errc::PrimeTooLarge, "splitting checks need limit <= 10^4");
  CheckReport rep{"splitting"};
  const Rational delta = t * t - 4;
  const bool reducible = is_square(delta).is_square();
  const long j_min = (r == 2 && !reducible) ? 2 : 1;
  for_each_prime(3, limit, [&](std::uint64_t p) {
    if (p == static_cast<std::uint64_t>(r) || t.den_divisible_by(p) || delta.num_divisible_by(p)) return;
    ++rep.primes_checked;
    for (long n = 0; n <= n_max; ++n)
      for (long j = std::max(n, j_min); j <= j_max; ++j) {
        const auto s = splitting_oracle(t, r, n, j, p);
        if (s.polynomial_side != s.group_side)
          rep.fail(p, "n=" + std::to_string(n) + " j=" + std::to_string(j) + " group " + (s.group_side ? "yes" : "no"),
                   std::string("polynomial ") + (s.polynomial_side ? "yes" : "no"));
      }
  });
  return rep;
}

OrbitReport chebyshev_orbit_divisors(const Rational& x0, long k, long n_max, std::uint64_t limit) {
  if (is_excluded(x0)) throw Error(Errc::ExcludedParameter, "x0 = " + x0.str() + " is excluded");
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  OrbitReport rep;
  rep.checks.name = "chebyshev_orbit";
  const IndexCalc chi(limit);
  const auto uk = static_cast<std::uint64_t>(k);
  for_each_prime(3, limit, [&](std::uint64_t p) {
    if (x0.den_divisible_by(p)) return;
    ++rep.checks.primes_checked;
    const ModParam m = reduce_param(x0, p);
    std::vector<u64> seen;
    u64 y = m.t_mod;
    for (long n = 0; n <= n_max; ++n) {
      if (y == 0) {
        rep.divisors.push_back({p, n});
        // Z = D^{k^n} by n successive k-th powers.
        RingElem z = RingElem::generator(m);
        for (long i = 0; i < n; ++i) z = pow(z, uk);
        const RingElem z2 = z * z;
        if (!(z2 * z2).is_identity() || z2.is_identity())
          rep.checks.fail(p, "ord(D^{k^n}) = 4", "n = " + std::to_string(n) + ", chi = " + str(chi(x0, p)));
        // p >= 4 k^n - 1, with k^n saturated once it passes p.
        std::uint64_t kn = 1;
        for (long i = 0; i < n && kn <= p; ++i) kn *= uk;
        if (kn > p || 4 * kn - 1 > p) rep.checks.fail(p, "p >= 4k^n - 1", "n = " + std::to_string(n));
        break;
      }
      if (std::find(seen.begin(), seen.end(), y) != seen.end()) break;
      seen.push_back(y);
      y = cheb_C(static_cast<std::int64_t>(k), y, Modular{p});
    }
  });
  for (std::uint64_t div : {8u, 4u, 2u, 1u}) {
    const std::uint64_t cut = limit / div;
    if (cut < 2) continue;
    const auto count = std::count_if(rep.divisors.begin(), rep.divisors.end(),
                                     [cut](const OrbitDivisor& d) { return d.p <= cut; });
    rep.checkpoints.emplace_back(cut, static_cast<double>(count) / static_cast<double>(prime_count(cut)));
  }
  return rep;
}

QuadmapReport quadmap_divisor_check(const Rational& t, std::uint64_t limit) {
  if (is_excluded(t)) throw Error(Errc::ExcludedParameter, "t = " + t.str() + " is excluded");
  QuadmapReport rep;
  rep.checks.name = "quadmap";
  const IndexCalc chi(limit);
  for_each_prime(3, limit, [&](std::uint64_t p) {
    if (t.den_divisible_by(p)) return;
    ++rep.checks.primes_checked;
    ++rep.admissible;
    const u64 tm = t.mod(p);
    u64 y = tm;
    bool returns = false;
    for (std::uint64_t n = 1; n <= p && !returns; ++n) {
      y = submod(mulmod(y, y, p), 2, p);
      returns = y == tm;
    }
    if (returns) rep.divisors.push_back(p);
    const auto c = chi(t, p);
    if (returns != (c % 2 == 1))
      rep.checks.fail(p, "orbit returns iff chi odd (chi = " + str(c) + ")", returns ? "returns" : "no return");
  });
  return rep;
}

NondivisorReport nondivisor_density(const Rational& t, const Rational& y0, const Rational& y1, long r,
                                    std::uint64_t limit) {
  if (is_excluded(t)) throw Error(Errc::ExcludedParameter, "t = " + t.str() + " is excluded");
  const Rational det = y1 * y1 - t * y0 * y1 + y0 * y0;
  if (det != 1) throw Error(Errc::NotUnitDet, "det Y = " + det.str());
  {
    const auto U = cheb_U_table(66, t);
    for (long k = 0; k <= 64; ++k) {
      // D^k = [U_k, U_{k+1}], D^{-k} = [-U_k, -U_{k-1}]
      const std::array<std::pair<Rational, Rational>, 2> powers{
          std::pair{U[k], U[k + 1]}, std::pair{-U[k], k == 0 ? Rational(1) : -U[k - 1]}};
      for (int s = 0; s < 2; ++s)
        for (int sign : {1, -1}) {
          const auto& [a, b] = powers[s];
          if (a * sign == y0 && b * sign == y1)
            throw Error(Errc::TorsionTimesPower, std::string("Y = ") + (sign > 0 ? "" : "-") + "D^" +
                                                     (s ? "-" : "") + std::to_string(k));
        }
    }
  }
  NondivisorReport rep;
  rep.checks.name = "nondivisor";
  rep.r = r;
  rep.trace = 2 * y1 - t * y0;
  rep.prime_count = prime_count(limit);
  const Rational delta = t * t - 4;
  const auto ur = static_cast<std::uint64_t>(r);
  const Factorizer fac(limit + 1);
  for_each_prime(3, limit, [&](std::uint64_t p) {
    if (any_den_divisible(p, {&t, &y0, &y1}) || delta.num_divisible_by(p)) return;
    ++rep.admissible;
    ++rep.checks.primes_checked;
    const ModParam m = reduce_param(t, p);
    const GroupOrder g = group_order(m);
    const FactorMap bound = fac.factorize(g.value);
    const auto c = element_order(RingElem::generator(m), bound);
    const RingElem Y = RingElem::from_row(m, y0, y1);
    const auto oy = element_order(Y, bound);
    const auto oneg = element_order(-Y, bound);
    const bool divisor = c % oy == 0 || c % oneg == 0;
    if ((2 * c) % oy == 0 && !divisor) rep.criterion_disagreements.push_back(p);
    if (divisor) ++rep.divisor_count;

    const bool scanned = p <= kScanLimit;
    if (scanned) {
      RingElem cur = Y;
      const RingElem D = RingElem::generator(m);
      bool zero = false;
      for (std::uint64_t n = 0; n < c && !zero; ++n) {
        zero = cur.x0() == 0;
        cur = cur * D;
      }
      if (zero != divisor) rep.checks.fail(p, divisor ? "divisor by order" : "non-divisor by order",
                                           zero ? "scan finds zero" : "scan finds none");
    }

    const bool in_target = valuation(g.value, ur) == 1 && c % ur != 0 && oy % ur == 0;
    if (in_target) {
      ++rep.target_count;
      if (scanned) ++rep.target_scanned;
      if (divisor) rep.checks.fail(p, "non-divisor (target set)", "divisor");
    }

    const u64 b = Y.trace();
    if (b != 2 && b != p - 2) {
      const auto cb = index(make_param(b, p), fac);
      if (cb != oy) rep.checks.fail(p, "ord(Y) = chi(b) = " + str(cb), str(oy));
    }
  });
  return rep;
}

RotationReport rotation_check(const Rational& t, const Rational& x0, const Rational& x1, std::uint64_t limit) {
  if (is_excluded(t)) throw Error(Errc::ExcludedParameter, "t = " + t.str() + " is excluded");
  RotationReport rep;
  rep.checks.name = "rotation";
  rep.det = x1 * x1 - t * x0 * x1 + x0 * x0;
  if (rep.det == 0) throw Error(Errc::InvalidArgument, "initial condition has determinant 0");
  rep.det_is_square = is_square(rep.det).is_square();
  const Rational delta = t * t - 4;
  const IndexCalc chi(limit);
  for_each_prime(3, std::min(limit, kScanLimit), [&](std::uint64_t p) {
    if (any_den_divisible(p, {&t, &x0, &x1}) || delta.num_divisible_by(p) || rep.det.num_divisible_by(p)) return;
    ++rep.scanned;
    ++rep.checks.primes_checked;
    const ModParam m = reduce_param(t, p);
    const auto c = index(m, chi.fac);
    RingElem cur = RingElem::from_row(m, x0, x1);
    const RingElem D = RingElem::generator(m);
    bool zero = false;
    for (std::uint64_t n = 0; n < c && !zero; ++n) {
      zero = cur.x0() == 0;
      cur = cur * D;
    }
    if (!zero) return;
    ++rep.divisor_count;
    if (legendre(rep.det.mod(p), p) != 1) rep.checks.fail(p, "det is a square mod p", "non-square");
  });
  return rep;
}

}  // namespace chi
