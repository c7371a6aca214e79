#include "chi/classify.hpp"

#include <cmath>
#include <numbers>

#include "chi/chebyshev.hpp"
#include "chi/error.hpp"

namespace chi {

namespace {

bool sq(const Rational& q) { return is_square(q).is_square(); }

constexpr int kMaxDepth = 4;
constexpr int kMaxDescent = 8;

long double real_rth_root(long double z, long r) {
  return z < 0 ? -std::pow(-z, 1.0L / r) : std::pow(z, 1.0L / r);
}

// Real roots of C_r(x) = t for odd r, in floating point.
std::vector<long double> approximate_roots(const Rational& t, long r) {
  const long double tt = t.to_long_double();
  std::vector<long double> out;
  if (std::fabs(tt) >= 2) {
    const long double z = (tt + std::copysign(std::sqrt(tt * tt - 4), tt)) / 2;
    const long double y = real_rth_root(z, r);
    out.push_back(y + 1 / y);
  } else {
    const long double phi = std::acos(tt / 2);
    for (long k = 0; k < r; ++k)
      out.push_back(2 * std::cos((phi + 2 * std::numbers::pi_v<long double> * k) / r));
  }
  return out;
}

}  // namespace

bool is_excluded(const Rational& t) {
  return t == 0 || t == 1 || t == -1 || t == 2 || t == -2;
}

std::vector<Rational> chebyshev_rational_roots(const Rational& t, long r) {
  if (r < 2) throw Error(Errc::InvalidArgument, "r must be a prime >= 2");
  std::vector<Rational> out;
  if (r == 2) {
    // C_2(x) = x^2 - 2
    if (auto s = is_square(t + 2); s.is_square()) {
      out.push_back(*s.root);
      if (*s.root != 0) out.push_back(-*s.root);
    }
    return out;
  }
  // A rational root c/d in lowest terms forces den(t) = d^r.
  const auto d = rth_root(t.den(), static_cast<unsigned>(r));
  if (!d) return out;
  if (*d > BigInt(1) << 60)
    throw Error(Errc::InvalidArgument, "denominator of " + t.str() + " too large for root search");
  const long double dd = d->get_d();
  for (long double x : approximate_roots(t, r)) {
    const long double scaled = std::round(x * dd);
    if (std::fabs(scaled) > 9.0e18L) continue;
    const long long c0 = static_cast<long long>(scaled);
    for (long long c = c0 - 1; c <= c0 + 1; ++c) {
      const Rational u(BigInt(static_cast<long>(c)), *d);
      if (cheb_C(r, u, r) != t) continue;
      bool seen = false;
      for (const auto& v : out) seen = seen || v == u;
      if (!seen) out.push_back(u);
    }
  }
  return out;
}

bool is_r_primitive(const Rational& t, long r) { return chebyshev_rational_roots(t, r).empty(); }

PerPrimeClass classify_at(const Rational& t, long r) {
  PerPrimeClass out;
  const auto roots = chebyshev_rational_roots(t, r);
  out.r_primitive = roots.empty();
  if (!roots.empty()) out.root = roots.front();
  if (r == 2) return out;
  const Rational delta = t * t - 4;
  const int sign = (r % 4 == 1) ? 1 : -1;
  if (auto s = is_r_scaled_square(delta, r, sign); s.is_square()) {
    out.genericity = sign > 0 ? Genericity::PlusSquare : Genericity::MinusSquare;
    out.scale_b = s.root;
  }
  return out;
}

PerPrimeClass ParamClass::at(long r) const {
  if (auto it = per_r.find(r); it != per_r.end()) return it->second;
  return classify_at(t, r);
}

ParamClass classify(const Rational& t, const std::vector<long>& rs) {
  if (is_excluded(t)) throw Error(Errc::ExcludedParameter, "t = " + t.str() + " is excluded");
  ParamClass c;
  c.t = t;
  const Rational delta = t * t - 4;
  if (auto s = is_square(delta); s.is_square()) c.reducible = s.root;
  if (auto s = is_square(-delta); s.is_square()) c.circular = s.root;
  if (auto s = is_r_scaled_square(delta, 3, -1); s.is_square()) {
    c.cubic = s.root;
    c.a1 = (-t + 3 * *s.root) / 2;
    c.a2 = (-t - 3 * *s.root) / 2;
  }
  const Rational plus = 2 + t, minus = 2 - t, prod = 4 - t * t;
  c.twin_primitive = !sq(plus) && !sq(minus);
  const bool plain_irrational = c.twin_primitive && !c.circular;
  c.typeA = plain_irrational && (sq(2 * plus) || sq(2 * minus));
  c.typeB = plain_irrational && sq(2 * prod);
  c.two_generic = !sq(plus) && !sq(minus) && !sq(prod) && !sq(2 * plus) && !sq(2 * minus) && !sq(2 * prod);
  c.circular_primitive = c.circular && !sq(plus) && !sq(2 * plus);
  c.cubic_primitive = c.cubic && is_r_primitive(t, 3) && is_r_primitive(*c.a1, 3) && is_r_primitive(*c.a2, 3);
  for (long r : rs) c.per_r[r] = classify_at(t, r);
  return c;
}

std::vector<std::pair<std::string, Rational>> associates(const ParamClass& c) {
  std::vector<std::pair<std::string, Rational>> out{{"twin", -c.t}};
  if (c.cubic) {
    out.emplace_back("a1", *c.a1);
    out.emplace_back("a2", *c.a2);
  }
  if (c.circular) out.emplace_back("w", *c.circular);
  return out;
}

Rational Prediction::density(long j) const {
  if (head.empty()) throw Error(Errc::UnsupportedPrediction, "empty prediction");
  const long last = static_cast<long>(head.size()) - 1;
  if (j <= last) return head[static_cast<std::size_t>(j)];
  return head.back() / Rational(r).pow(static_cast<unsigned>(j - last));
}

std::vector<Rational> Prediction::densities(long j_max) const {
  std::vector<Rational> out;
  for (long j = 0; j <= j_max; ++j) out.push_back(density(j));
  return out;
}

Rational Prediction::total_mass() const {
  Rational sum;
  for (const auto& d : head) sum += d;
  return sum + head.back() / Rational(r - 1);
}

namespace {

Prediction law(long r, std::vector<Rational> head, std::string source, bool conjectural = false) {
  Prediction p;
  p.r = r;
  p.head = std::move(head);
  p.supported = true;
  p.conjectural = conjectural;
  p.source = std::move(source);
  return p;
}

Prediction unsupported(long r, std::string note) {
  Prediction p;
  p.r = r;
  p.note = std::move(note);
  return p;
}

Prediction generic_law(long r) {
  const Rational rr(r);
  return law(r, {1 - rr / (rr * rr - 1), Rational(1, r + 1)}, "generic");
}

Prediction minus_square_law(long r, std::string source) {
  const Rational rr(r);
  return law(r, {1 - 2 * rr / (rr * rr - 1), Rational(2, r + 1)}, std::move(source));
}

// Law for C_r(u) given the law for u: the two lowest levels merge, the rest shift down.
Prediction lifted(const Prediction& u) {
  const long r = u.r;
  const long n = std::max<long>(static_cast<long>(u.head.size()), 2);
  std::vector<Rational> head{u.density(0) + u.density(1)};
  for (long j = 2; j <= n; ++j) head.push_back(u.density(j));
  Prediction p = law(r, std::move(head), "non_primitive/" + u.source, u.conjectural);
  return p;
}

// Law for -t given the law for t (r = 2): levels 0 and 1 trade places.
Prediction swapped(const Prediction& u) {
  const long n = std::max<long>(static_cast<long>(u.head.size()), 3);
  std::vector<Rational> head;
  for (long j = 0; j < n; ++j) head.push_back(u.density(j));
  std::swap(head[0], head[1]);
  return law(u.r, std::move(head), "twin/" + u.source, u.conjectural);
}

Prediction predict(const ParamClass& c, long r, int depth);

Prediction predict(const Rational& t, long r, int depth) {
  if (depth > kMaxDepth) return unsupported(r, "recursion depth exceeded");
  return predict(classify(t, {r}), r, depth);
}

// Shortest chain w = +-C_2(x_1), x_1 = +-C_2(x_2), ... ending at a circular
// primitive value.  Returns the chain length, or 0 if none within the cap.
long circular_depth(const Rational& cur, long k) {
  if (k > 0 && classify(cur, {}).circular_primitive) return k;
  if (k == kMaxDescent) return 0;
  long best = 0;
  for (const Rational& v : {2 + cur, 2 - cur})
    if (auto s = is_square(v); s.is_square())
      if (const long d = circular_depth(*s.root, k + 1); d && (!best || d < best)) best = d;
  return best;
}

Prediction circular_descent(const ParamClass& c) {
  // t = w_k: the associate is +-C_{2^k}(t0) for a circular primitive t0.
  const long k = circular_depth(*c.circular, 0);
  if (k == 0) return unsupported(2, "circular, not reached from a circular primitive value");
  const Rational x = Rational(1, 3) / Rational(2).pow(static_cast<unsigned>(k + 1));
  const Rational mid = 1 - Rational(1, 3) / Rational(2).pow(static_cast<unsigned>(k - 1));
  return law(2, {x, x, mid, x}, "circular_descent", true);
}

// Shortest chain cur = C_3(x_1), x_1 = C_3(x_2), ... ending at a cubic primitive
// value.  Returns the chain length, or 0 if none within the cap.
long cubic_depth(const Rational& cur, long k) {
  if (k > 0 && classify(cur, {}).cubic_primitive) return k;
  if (k == kMaxDescent) return 0;
  long best = 0;
  for (const Rational& x : chebyshev_rational_roots(cur, 3))
    if (const long d = cubic_depth(x, k + 1); d && (!best || d < best)) best = d;
  return best;
}

Prediction cubic_descent(const ParamClass& c) {
  // t is an associate of C_{3^k}(t0) for a cubic primitive t0.
  long k = 0;
  for (const auto& a : {*c.a1, *c.a2})
    if (const long d = cubic_depth(a, 0); d && (!k || d < k)) k = d;
  if (k == 0) return unsupported(3, "cubic, not reached from a cubic primitive value");
  const Prediction base = minus_square_law(3, "cubic_primitive");
  const Rational q = Rational(1, 4) / Rational(3).pow(static_cast<unsigned>(k));
  Rational level1 = q;
  for (long j = 0; j <= k; ++j) level1 += base.density(j);
  return law(3, {q, level1, base.density(k + 2)}, "cubic_descent");
}

Prediction predict(const ParamClass& c, long r, int depth) {
  const PerPrimeClass pc = c.at(r);
  if (!pc.r_primitive) {
    const Prediction u = predict(*pc.root, r, depth + 1);
    return u.supported ? lifted(u) : u;
  }
  if (r == 2) {
    if (sq(2 - c.t)) {
      const Prediction u = predict(-c.t, r, depth + 1);
      return u.supported ? swapped(u) : u;
    }
    if (c.circular) {
      if (c.circular_primitive) return law(2, {Rational(1, 6), Rational(1, 6), Rational(1, 3)}, "circular_primitive");
      return circular_descent(c);
    }
    if (c.typeB) return law(2, {Rational(7, 24), Rational(7, 24), Rational(1, 12), Rational(1, 6)}, "type_b");
    if (c.typeA) return law(2, {Rational(7, 24), Rational(7, 24), Rational(1, 3), Rational(1, 24)}, "type_a");
    if (c.two_generic) {
      Prediction p = generic_law(2);
      p.source = "two_generic";
      return p;
    }
    return unsupported(2, "2-non-generic case without a density law");
  }
  switch (pc.genericity) {
    case Genericity::Generic:
    case Genericity::PlusSquare: {
      Prediction p = generic_law(r);
      if (pc.genericity == Genericity::PlusSquare) p.source = "plus_square";
      return p;
    }
    case Genericity::MinusSquare:
      if (r == 3) return c.cubic_primitive ? minus_square_law(3, "cubic_primitive") : cubic_descent(c);
      return minus_square_law(r, "minus_square");
  }
  return unsupported(r, "unreachable");
}

}  // namespace

Prediction predicted_densities(const ParamClass& c, long r, long j_max) {
  if (r < 2) throw Error(Errc::InvalidArgument, "r must be a prime >= 2");
  if (j_max < 0) throw Error(Errc::InvalidArgument, "j_max must be >= 0");
  Prediction p = predict(c, r, 0);
  p.j_max = j_max;
  return p;
}

Prediction predicted_densities(const Rational& t, long r, long j_max) {
  return predicted_densities(classify(t, {r}), r, j_max);
}

const char* genericity_name(Genericity g) {
  switch (g) {
    case Genericity::Generic: return "generic";
    case Genericity::PlusSquare: return "plus_square";
    case Genericity::MinusSquare: return "minus_square";
  }
  return "unknown";
}

}  // namespace chi
