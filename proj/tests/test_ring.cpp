#include <doctest.h>

#include <array>

#include "chi/error.hpp"
#include "chi/modarith.hpp"
#include "chi/ring.hpp"

using namespace chi;

namespace {

// Order of the integer matrix [[0,1],[-1,t]] mod p by repeated multiplication.
std::uint64_t naive_order(std::uint64_t t, std::uint64_t p) {
  using M = std::array<std::uint64_t, 4>;
  const M d{0, 1, p - 1, t % p};
  M cur = d;
  for (std::uint64_t n = 1;; ++n) {
    if (cur == M{1, 0, 0, 1}) return n;
    cur = M{(cur[0] * d[0] + cur[1] * d[2]) % p, (cur[0] * d[1] + cur[1] * d[3]) % p,
            (cur[2] * d[0] + cur[3] * d[2]) % p, (cur[2] * d[1] + cur[3] * d[3]) % p};
  }
}

}  // namespace

TEST_CASE("known indices") {
  const std::array<std::pair<std::uint64_t, std::uint64_t>, 7> t3{
      {{3, 4}, {5, 10}, {7, 8}, {11, 5}, {13, 14}, {17, 18}, {19, 9}}};
  for (auto [p, c] : t3) CHECK(index(Rational(3), p) == c);
  CHECK(index(Rational(2, 7), 5) == 6);
  CHECK(index(Rational(-3), 11) == 10);
  CHECK(index(Rational(-6), 3) == 4);
  CHECK(index(Rational(6, 5), 7) == 8);
  CHECK(index(Rational(8, 5), 7) == 8);
}

TEST_CASE("fast index matches integer matrix powers") {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 101, 211, 409})
    for (std::uint64_t t = 0; t < p; ++t) {
      INFO("p=" << p << " t=" << t);
      const auto m = make_param(t, p);
      const Factorizer fac(p + 1);
      CHECK(index(m, fac) == naive_order(t, p));
      CHECK(index_by_scan(m) == naive_order(t, p));
    }
}

TEST_CASE("group order") {
  CHECK(group_order(make_param(3, 11)).value == 10);  // 5 is a square mod 11
  CHECK(group_order(make_param(3, 7)).value == 8);
  CHECK(group_order(make_param(2, 7)).value == 7);
  CHECK(group_order(make_param(5, 7)).value == 14);
  for (std::uint64_t p : {5, 13, 97})
    for (std::uint64_t t = 0; t < p; ++t) {
      const auto m = make_param(t, p);
      const auto g = group_order(m).value;
      CHECK(pow(RingElem::generator(m), g).is_identity());
      if (m.delta_mod == 0) continue;
      // every unit-determinant element has order dividing g
      const auto e = RingElem::from_row(m, std::uint64_t{1}, std::uint64_t{0});
      if (e.det() == 1) CHECK(pow(e, g).is_identity());
    }
}

TEST_CASE("ring elements") {
  const auto m = reduce_param(Rational(3), 7);
  const auto d = RingElem::generator(m);
  CHECK(d.x0() == 1);
  CHECK(d.x1() == 3);
  CHECK(d.trace() == 3);
  CHECK(d.det() == 1);
  CHECK(pow(d, 4).is_minus_identity());
  CHECK((d * pow(d, 7)).is_identity());
  const auto y = RingElem::from_row(m, Rational(-8, 19), Rational(-33, 19));
  CHECK(y.x0() == 4);
  CHECK(y.x1() == 6);
  CHECK(y.det() == 1);
  CHECK(y.trace() == 0);
  CHECK(element_order(y, factorize(8)) == 4);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(reduce_param(Rational(1, 7), 7), Error);
  CHECK_THROWS_AS(reduce_param(Rational(3), 2), Error);
  const auto m = make_param(3, 7);
  CHECK_THROWS_AS(element_order(RingElem::from_row(m, std::uint64_t{0}, std::uint64_t{2}), factorize(8)), Error);
}
