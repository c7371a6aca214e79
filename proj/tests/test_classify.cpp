#include <doctest.h>

#include "chi/chebyshev.hpp"
#include "chi/classify.hpp"
#include "chi/error.hpp"
#include "chi/partition.hpp"

using namespace chi;

TEST_CASE("excluded parameters") {
  for (long t : {0, 1, -1, 2, -2}) {
    CHECK(is_excluded(Rational(t)));
    CHECK_THROWS_AS(classify(Rational(t)), Error);
  }
  CHECK_FALSE(is_excluded(Rational(1, 2)));
}

TEST_CASE("cubic parameter") {
  const auto c = classify(Rational(2, 7));
  REQUIRE(c.cubic);
  CHECK(*c.cubic == Rational(8, 7));
  CHECK(*c.a1 == Rational(11, 7));
  CHECK(*c.a2 == Rational(-13, 7));
  CHECK(c.cubic_primitive);
  CHECK_FALSE(c.circular);
  CHECK(c.per_r.at(3).genericity == Genericity::MinusSquare);
  const auto names = associates(c);
  CHECK(names.size() == 3);
}

TEST_CASE("circular, reducible and type flags") {
  const auto circ = classify(Rational(6, 5));
  REQUIRE(circ.circular);
  CHECK(*circ.circular == Rational(8, 5));
  CHECK(circ.circular_primitive);
  const auto red = classify(Rational(10, 3));
  REQUIRE(red.reducible);
  CHECK(*red.reducible == Rational(8, 3));
  CHECK(classify(Rational(6)).typeA);
  CHECK(classify(Rational(2, 3)).typeB);
  CHECK(classify(Rational(3)).two_generic);
  CHECK(classify(Rational(3)).per_r.at(5).genericity == Genericity::PlusSquare);
  CHECK(classify(Rational(3, 2)).per_r.at(7).genericity == Genericity::MinusSquare);
}

TEST_CASE("r-primitivity") {
  CHECK_FALSE(is_r_primitive(Rational(7), 2));  // C_2(3)
  CHECK_FALSE(is_r_primitive(Rational(18), 3));  // C_3(3)
  CHECK(is_r_primitive(Rational(3), 2));
  CHECK(is_r_primitive(Rational(3), 3));
  CHECK(is_r_primitive(Rational(2, 7), 3));
  const auto roots = chebyshev_rational_roots(Rational(-286, 343), 3);
  CHECK(roots.size() == 3);  // 2/7 and its two associates
  for (const auto& u : roots) CHECK(cheb_C(3, u) == Rational(-286, 343));
  // C_5 of a rational with a large denominator
  const Rational u(3, 11);
  CHECK_FALSE(is_r_primitive(cheb_C(5, u), 5));
  CHECK_FALSE(is_r_primitive(cheb_C(7, Rational(-5, 3)), 7));
}

TEST_CASE("prediction values") {
  auto dens = [](const Rational& t, long r) { return predicted_densities(t, r).densities(3); };
  CHECK(dens(Rational(3), 2) == std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 6), Rational(1, 12)});
  CHECK(dens(Rational(2, 7), 3) == std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(1, 6), Rational(1, 18)});
  CHECK(dens(Rational(3, 2), 7)[0] == Rational(17, 24));
  CHECK(dens(Rational(3, 2), 7)[1] == Rational(1, 4));
  CHECK(dens(Rational(2, 3), 2)[2] == Rational(1, 12));
  CHECK(dens(Rational(6), 2)[2] == Rational(1, 3));
  CHECK(dens(Rational(6, 5), 2)[0] == Rational(1, 6));
  const auto w1 = predicted_densities(Rational(48, 25), 2);
  CHECK(w1.conjectural);
  CHECK(w1.density(2) == Rational(2, 3));
  const auto w2 = predicted_densities(Rational(672, 625), 2);
  CHECK(w2.density(0) == Rational(1, 24));
  CHECK(w2.density(2) == Rational(5, 6));
  const auto cubic2 = predicted_densities(Rational(-19413973, 40353607), 3);
  CHECK(cubic2.density(0) == Rational(1, 36));
  CHECK(cubic2.density(1) == Rational(17, 18));
}

TEST_CASE("every supported prediction has total mass one") {
  for (long a = -12; a <= 12; ++a)
    for (long b : {1, 2, 3, 5, 7, 9, 25}) {
      const Rational t(a, b);
      if (is_excluded(t)) continue;
      const auto c = classify(t);
      for (long r : kDefaultRs) {
        const auto p = predicted_densities(c, r);
        if (!p.supported) continue;
        INFO(t.str() << " r=" << r << " " << p.source);
        CHECK(p.total_mass() == 1);
        for (long j = 0; j < 12; ++j) CHECK(p.density(j) >= 0);
      }
    }
}

TEST_CASE("predictions track empirical densities") {
  // A wide spread of rules: generic, lifted, twin swap, type A/B, circular,
  // circular descent, cubic, cubic descent, minus-square at r = 7.
  const std::vector<std::pair<Rational, long>> cases{
      {Rational(3), 2},       {Rational(7), 2},          {Rational(-7), 2},        {Rational(6), 2},
      {Rational(-2, 3), 2},   {Rational(6, 5), 2},       {Rational(48, 25), 2},    {Rational(1054, 625), 2},
      {Rational(2, 7), 3},    {Rational(683, 343), 3},   {Rational(-286, 343), 3}, {Rational(3, 2), 7},
      {Rational(1, 4), 2},    {Rational(18), 3},         {Rational(3), 5}};
  for (const auto& [t, r] : cases) {
    const auto pred = predicted_densities(t, r, 4);
    INFO(t.str() << " r=" << r << " " << pred.source);
    REQUIRE(pred.supported);
    const auto rep = compute_partition(t, r, 300000, 4);
    for (const auto& row : compare(rep, pred)) CHECK(row.abs_error < 0.01);
  }
}

TEST_CASE("compare rejects unsupported predictions") {
  CHECK_THROWS_AS(compare(compute_partition(Rational(3), 2, 100), Prediction{}), Error);
}
