#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chi/cli.hpp"
#include "chi/report_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = chi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("chi_test_" + name);
}

}  // namespace

TEST_CASE("index") {
  const auto r = run({"index", "3", "11"});
  CHECK(r.code == 0);
  CHECK(r.out == "chi(3,11) = 5\n");
  CHECK(run({"index", "-3", "11"}).out == "chi(-3,11) = 10\n");
  CHECK(run({"index", "2/7", "5", "--scan"}).out == "chi(2/7,5) = 6\n");
  CHECK(run({"index", "3", "12"}).code == 1);
  CHECK(run({"index", "1/7", "7"}).code == 1);
  CHECK(run({"index", "x", "7"}).code == 1);
}

TEST_CASE("classify") {
  const auto r = run({"classify", "2/7"});
  REQUIRE(r.code == 0);
  const auto j = chi::Json::parse(r.out);
  CHECK(j["cubic"] == true);
  CHECK(j["b"] == "8/7");
  CHECK(j["associates"]["a1"] == "11/7");
  CHECK(j["associates"]["a2"] == "-13/7");
  CHECK(run({"classify", "2"}).code == 1);
  CHECK(run({"classify", "-2/1"}).code == 1);
}

TEST_CASE("partition CSV") {
  const auto r = run({"partition", "3", "--r", "2", "--limit", "20", "--jmax", "3"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> counts;
  std::getline(in, line);
  CHECK(line == "j,count,empirical,predicted,abs_error,z_score");
  while (std::getline(in, line)) counts.push_back(line.substr(2, line.find(',', 2) - 2));
  CHECK(counts == std::vector<std::string>{"2", "3", "1", "1"});
}

TEST_CASE("thread count does not change the output") {
  const auto one = run({"partition", "2/7", "--r", "3", "--limit", "200000"});
  for (const char* k : {"2", "3", "8"}) {
    CHECK(run({"partition", "2/7", "--r", "3", "--limit", "200000", "--threads", k}).out == one.out);
    CHECK(run({"partition", "2/7", "--r", "3", "--limit", "200000", "--threads", k, "--format", "json"}).out ==
          run({"partition", "2/7", "--r", "3", "--limit", "200000", "--format", "json"}).out);
  }
}

TEST_CASE("partition JSON round-trips through the CLI") {
  const auto r = run({"partition", "-6/5", "--r", "2", "--limit", "50000", "--format", "json", "--threads", "4"});
  REQUIRE(r.code == 0);
  const auto j = chi::Json::parse(r.out);
  const auto rep = chi::partition_from_json(j["report"]);
  CHECK(rep.t == chi::Rational(-6, 5));
  CHECK(rep.limit == 50000);
  CHECK(rep.conserved());
  CHECK(chi::to_json(rep) == j["report"]);
  const auto direct = chi::compute_partition(chi::Rational(-6, 5), 2, 50000);
  CHECK(rep.counts == direct.counts);
  CHECK(rep.excluded == direct.excluded);
}

TEST_CASE("batch mode and output file") {
  const auto batch = temp_file("batch.txt");
  const auto out = temp_file("out.csv");
  {
    std::ofstream f(batch);
    f << "# parameters\n3\n\n2/7  # cubic\n-6/5\n";
  }
  const auto r = run({"partition", "--batch", batch.string(), "--r", "2", "--limit", "5000", "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(text.find("# t = 3\n") != std::string::npos);
  CHECK(text.find("# t = 2/7\n") != std::string::npos);
  CHECK(text.find("# t = -6/5\n") != std::string::npos);
  std::filesystem::remove(batch);
  std::filesystem::remove(out);
  CHECK(run({"partition", "--batch", "/nonexistent/file"}).code == 1);
}

TEST_CASE("input validation") {
  CHECK(run({}).code == 1);
  CHECK(run({"partition", "3", "--limit", "100000001"}).code == 1);
  CHECK(run({"partition", "3", "--r", "4"}).code == 1);
  CHECK(run({"partition", "3", "--threads", "0"}).code == 1);
  CHECK(run({"partition", "3", "--format", "xml"}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify commands") {
  auto r = run({"verify", "twin", "3", "--limit", "2000"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS twin:", 0) == 0);
  CHECK(run({"verify", "bridge", "--T", "1", "--Q", "-1", "--limit", "2000"}).code == 0);
  CHECK(run({"verify", "ballot", "--T", "1", "--Q", "-1", "--r", "2", "--limit", "2000", "--kmax", "20"}).code == 0);
  CHECK(run({"verify", "sequences", "2/7", "--family", "S", "--limit", "1000"}).code == 0);
  CHECK(run({"verify", "splitting", "3", "--r", "3", "--limit", "300"}).code == 0);
  CHECK(run({"verify", "prop11", "-3", "--r", "3", "--limit", "2000", "--format", "json"}).code == 0);
  CHECK(run({"verify", "cubic", "3"}).code == 1);
  CHECK(run({"verify", "circular", "6/5", "--limit", "2000"}).code == 0);
}

TEST_CASE("dynamics and non-divisors") {
  auto r = run({"dynamics", "chebyshev", "3", "--k", "2", "--limit", "20000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fraction") != std::string::npos);
  CHECK(run({"dynamics", "quadmap", "5/2", "--limit", "2000"}).code == 0);
  r = run({"nondivisor", "3", "-8/19", "-33/19", "--r", "7", "--limit", "5000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("trace b = -42/19") != std::string::npos);
  CHECK(run({"nondivisor", "3", "1", "3", "--r", "7", "--limit", "100"}).code == 1);
}
