#include "chi/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "chi/error.hpp"

namespace chi {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "j,count,empirical,predicted,abs_error,z_score\n";
  for (const auto& r : rows)
    out << r.j << ',' << r.count << ',' << fixed6(r.empirical) << ',' << r.predicted.str() << ','
        << fixed6(r.abs_error) << ',' << fixed6(r.z_score) << '\n';
  return out.str();
}

std::string partition_csv(const PartitionReport& report) {
  std::ostringstream out;
  out << "j,count,empirical\n";
  for (long j = 0; j <= report.j_max; ++j)
    out << j << ',' << report.counts[static_cast<std::size_t>(j)] << ',' << fixed6(empirical_density(report, j))
        << '\n';
  return out.str();
}

std::string violations_csv(const CheckReport& report) {
  std::ostringstream out;
  out << "p,expected,actual\n";
  for (const auto& v : report.violations) out << v.p << ",\"" << v.expected << "\",\"" << v.actual << "\"\n";
  return out.str();
}

Json to_json(const PartitionReport& report) {
  Json excluded = Json::object();
  for (const auto& [p, why] : report.excluded) excluded[std::to_string(p)] = exclusion_name(why);
  return {{"t", report.t.str()},        {"r", report.r},
          {"limit", report.limit},      {"j_max", report.j_max},
          {"counts", report.counts},    {"overflow", report.overflow},
          {"total", report.total},      {"excluded", excluded}};
}

namespace {

ExclusionReason exclusion_from_name(const std::string& s) {
  for (auto r : {ExclusionReason::IsTwo, ExclusionReason::EqualsR, ExclusionReason::DividesDenominator})
    if (s == exclusion_name(r)) return r;
  throw Error(Errc::ParseError, "unknown exclusion reason " + s);
}

}  // namespace

PartitionReport partition_from_json(const Json& j) {
  try {
    PartitionReport rep;
    rep.t = Rational::parse(j.at("t").get<std::string>());
    rep.r = j.at("r").get<long>();
    rep.limit = j.at("limit").get<std::uint64_t>();
    rep.j_max = j.at("j_max").get<long>();
    rep.counts = j.at("counts").get<std::vector<std::uint64_t>>();
    rep.overflow = j.at("overflow").get<std::uint64_t>();
    rep.total = j.at("total").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("excluded").items())
      rep.excluded[std::stoull(k)] = exclusion_from_name(v.get<std::string>());
    return rep;
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Json to_json(const std::vector<ComparisonRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"j", r.j},
                   {"count", r.count},
                   {"empirical", r.empirical},
                   {"predicted", r.predicted.str()},
                   {"abs_error", r.abs_error},
                   {"z_score", r.z_score}});
  return out;
}

namespace {

Json opt(const std::optional<Rational>& q) { return q ? Json(q->str()) : Json(nullptr); }

}  // namespace

Json to_json(const ParamClass& c) {
  Json per_r = Json::object();
  for (const auto& [r, pc] : c.per_r)
    per_r[std::to_string(r)] = {{"r_primitive", pc.r_primitive},
                                {"genericity", genericity_name(pc.genericity)},
                                {"root", opt(pc.root)},
                                {"b", opt(pc.scale_b)}};
  Json assoc = Json::object();
  for (const auto& [name, v] : associates(c)) assoc[name] = v.str();
  return {{"t", c.t.str()},
          {"reducible", c.reducible.has_value()},
          {"a", opt(c.reducible)},
          {"circular", c.circular.has_value()},
          {"w", opt(c.circular)},
          {"cubic", c.cubic.has_value()},
          {"b", opt(c.cubic)},
          {"typeA", c.typeA},
          {"typeB", c.typeB},
          {"twin_primitive", c.twin_primitive},
          {"two_generic", c.two_generic},
          {"circular_primitive", c.circular_primitive},
          {"cubic_primitive", c.cubic_primitive},
          {"associates", assoc},
          {"per_r", per_r}};
}

Json to_json(const Prediction& p) {
  Json dens = Json::array();
  if (p.supported)
    for (const auto& d : p.densities(p.j_max)) dens.push_back(d.str());
  return {{"r", p.r},
          {"supported", p.supported},
          {"conjectural", p.conjectural},
          {"source", p.source},
          {"note", p.note},
          {"densities", dens}};
}

Json to_json(const CheckReport& report) {
  Json v = Json::array();
  for (const auto& x : report.violations) v.push_back({{"p", x.p}, {"expected", x.expected}, {"actual", x.actual}});
  return {{"name", report.name},
          {"primes_checked", report.primes_checked},
          {"violation_count", report.violation_count},
          {"passed", report.passed()},
          {"violations", v}};
}

CheckReport check_from_json(const Json& j) {
  try {
    CheckReport rep;
    rep.name = j.at("name").get<std::string>();
    rep.primes_checked = j.at("primes_checked").get<std::uint64_t>();
    rep.violation_count = j.at("violation_count").get<std::uint64_t>();
    for (const auto& v : j.at("violations"))
      rep.violations.push_back({v.at("p").get<std::uint64_t>(), v.at("expected").get<std::string>(),
                                v.at("actual").get<std::string>()});
    return rep;
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace chi
