#include <doctest.h>

#include "chi/error.hpp"
#include "chi/report_io.hpp"

using namespace chi;

TEST_CASE("fixed decimals") {
  CHECK(fixed6(1.0 / 3) == "0.333333");
  CHECK(fixed6(-0.0000001) == "0.000000");
  CHECK(fixed6(2) == "2.000000");
}

TEST_CASE("comparison CSV") {
  const auto rep = compute_partition(Rational(3), 2, 20, 3);
  const auto csv = comparison_csv(compare(rep, predicted_densities(Rational(3), 2, 3)));
  CHECK(csv.rfind("j,count,empirical,predicted,abs_error,z_score\n0,2,0.285714,1/3,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("partition JSON round-trip") {
  const auto rep = compute_partition(Rational(-6, 5), 3, 3000, 4);
  const auto back = partition_from_json(Json::parse(to_json(rep).dump()));
  CHECK(back.t == rep.t);
  CHECK(back.r == rep.r);
  CHECK(back.limit == rep.limit);
  CHECK(back.j_max == rep.j_max);
  CHECK(back.counts == rep.counts);
  CHECK(back.overflow == rep.overflow);
  CHECK(back.total == rep.total);
  CHECK(back.excluded == rep.excluded);
  CHECK_THROWS_AS(partition_from_json(Json::parse("{\"t\": \"3\"}")), Error);
}

TEST_CASE("check report JSON round-trip") {
  CheckReport rep{"demo"};
  rep.primes_checked = 9;
  rep.fail(7, "a", "b");
  const auto back = check_from_json(Json::parse(to_json(rep).dump()));
  CHECK(back.name == "demo");
  CHECK(back.primes_checked == 9);
  CHECK(back.violation_count == 1);
  CHECK(back.violations.at(0).p == 7);
  CHECK(violations_csv(rep) == "p,expected,actual\n7,\"a\",\"b\"\n");
}

TEST_CASE("classification JSON") {
  const auto j = to_json(classify(Rational(2, 7)));
  CHECK(j["cubic"] == true);
  CHECK(j["b"] == "8/7");
  CHECK(j["associates"]["a1"] == "11/7");
  CHECK(j["associates"]["a2"] == "-13/7");
  const auto p = to_json(predicted_densities(Rational(2, 7), 3, 2));
  CHECK(p["densities"] == Json::array({"1/4", "1/2", "1/6"}));
}
