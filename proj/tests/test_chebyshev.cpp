#include <doctest.h>

#include "chi/chebyshev.hpp"
#include "chi/error.hpp"

using namespace chi;

TEST_CASE("exact values") {
  CHECK(cheb_U(3, Rational(3)) == 8);
  CHECK(cheb_C(2, Rational(3)) == 7);
  CHECK(cheb_C(3, Rational(3)) == 18);
  CHECK(cheb_U(-2, Rational(3)) == -3);
  CHECK(cheb_W(1, Rational(3)) == 4);  // U_2 + U_1
  CHECK(cheb_V(1, Rational(3)) == 2);
  CHECK_THROWS_AS(cheb_U(61, Rational(3)), Error);
  const auto tab = cheb_U_table(5, Rational(3));
  CHECK(tab == std::vector<Rational>{0, 1, 3, 8, 21, 55});
}

TEST_CASE("modular evaluation matches exact values") {
  for (const Rational x : {Rational(3), Rational(2, 7), Rational(-6, 5)})
    for (std::uint64_t p : {11, 13, 101})
      for (long n = -5; n <= 40; ++n) {
        INFO(x.str() << " p=" << p << " n=" << n);
        CHECK(cheb_U(static_cast<std::int64_t>(n), x.mod(p), Modular{p}) == cheb_U(n, x).mod(p));
        CHECK(cheb_C(static_cast<std::int64_t>(n), x.mod(p), Modular{p}) == cheb_C(n, x).mod(p));
        if (n >= 0) {
          CHECK(cheb_W(static_cast<std::uint64_t>(n / 2), x.mod(p), Modular{p}) == cheb_W(n / 2, x).mod(p));
          CHECK(cheb_V(static_cast<std::uint64_t>(n / 2), x.mod(p), Modular{p}) == cheb_V(n / 2, x).mod(p));
        }
      }
}

TEST_CASE("Lucas pairs") {
  const LucasSpec fib{1, -1};
  CHECK(fib.t() == -3);
  CHECK(fib.delta() == 5);
  CHECK(lucas_table(fib, 10).back() == 55);
  const LucasSpec s = LucasSpec::from_parameter(Rational(2, 7));
  CHECK(s.t() == Rational(2, 7));
  CHECK_THROWS_AS(LucasSpec::from_parameter(Rational(-2)), Error);
}

TEST_CASE("identity suite") {
  for (const Rational t : {Rational(3), Rational(-3), Rational(2, 7)}) {
    const auto rep = identity_suite(t, 30);
    CHECK(rep.passed());
    CHECK(rep.results.size() == 5);
  }
  CHECK_THROWS_AS(identity_suite(Rational(3), 61), Error);
}
