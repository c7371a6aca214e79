#include <doctest.h>

#include "chi/polyfp.hpp"

using namespace chi;

TEST_CASE("arithmetic") {
  const PolyFp a(7, {1, 1}), b(7, {6, 1});  // x+1, x-1
  CHECK(a * b == PolyFp(7, {6, 0, 1}));
  CHECK((a - a).is_zero());
  CHECK((a * b) % a == PolyFp(7, {}));
  CHECK(gcd(a * b, a * a) == a);
  CHECK(PolyFp(7, {3, 0, 2}).monic() == PolyFp(7, {5, 0, 1}));
  CHECK(powmod(PolyFp::x(7), 7, PolyFp(7, {1, 0, 1})) == PolyFp(7, {0, 6}));  // x^7 = -x mod x^2 + 1
}

TEST_CASE("splitting of x^2 + x + 1") {
  const PolyFp phi7(7, {1, 1, 1}), phi5(5, {1, 1, 1});
  CHECK(count_roots(phi7) == 2);  // 2 and 4
  CHECK(split_kind(phi7) == SplitKind::Linear);
  CHECK(count_roots(phi5) == 0);
  CHECK(split_kind(phi5) == SplitKind::Quadratic);
}

TEST_CASE("mixed factorisations are neither") {
  // x^2 - 3x + 1 over F_7 is irreducible (5 is a non-square), x^2 + x + 1 splits.
  const PolyFp f(7, {1, 4, 1}), phi(7, {1, 1, 1});
  CHECK(split_kind(f) == SplitKind::Quadratic);
  CHECK(split_kind(f * phi) == SplitKind::Other);
  CHECK(split_kind(PolyFp(7, {1, 0, 0, 1}) * PolyFp(7, {3, 0, 1})) == SplitKind::Linear);
  CHECK(split_kind(PolyFp(7, {2, 0, 0, 1})) == SplitKind::Other);  // 5 is not a cube mod 7
  CHECK(split_kind(PolyFp::constant(7, 3)) == SplitKind::Linear);
}
