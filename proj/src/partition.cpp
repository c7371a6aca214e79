#include "chi/partition.hpp"

#include <cmath>
#include <numeric>

#include "chi/error.hpp"
#include "chi/primes.hpp"
#include "chi/ring.hpp"

namespace chi {

const char* exclusion_name(ExclusionReason r) {
  switch (r) {
    case ExclusionReason::IsTwo: return "is_two";
    case ExclusionReason::EqualsR: return "equals_r";
    case ExclusionReason::DividesDenominator: return "divides_denominator";
  }
  return "unknown";
}

bool PartitionReport::conserved() const {
  const auto sum = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}) + overflow;
  return sum == total;
}

PartitionReport compute_partition_range(const Rational& t, long r, std::uint64_t lo, std::uint64_t hi,
                                        long j_max) {
  if (is_excluded(t)) throw Error(Errc::ExcludedParameter, "t = " + t.str() + " is excluded");
  if (r < 2) throw Error(Errc::InvalidArgument, "r must be a prime >= 2");
  if (j_max < 0) throw Error(Errc::InvalidArgument, "j_max must be >= 0");
  PartitionReport rep;
  rep.t = t;
  rep.r = r;
  rep.limit = hi;
  rep.j_max = j_max;
  rep.counts.assign(static_cast<std::size_t>(j_max) + 1, 0);
  if (hi < 2 || lo > hi) return rep;
  const Factorizer fac(hi + 1);
  const auto ur = static_cast<std::uint64_t>(r);
  for_each_prime(lo, hi, [&](std::uint64_t p) {
    if (p == 2) {
      rep.excluded[p] = ExclusionReason::IsTwo;
      return;
    }
    if (p == ur) {
      rep.excluded[p] = ExclusionReason::EqualsR;
      return;
    }
    if (t.den_divisible_by(p)) {
      rep.excluded[p] = ExclusionReason::DividesDenominator;
      return;
    }
    const std::uint64_t chi = index(reduce_param(t, p), fac);
    const long j = static_cast<long>(valuation(chi, ur));
    if (j > j_max) ++rep.overflow;
    else ++rep.counts[static_cast<std::size_t>(j)];
    ++rep.total;
  });
  return rep;
}

PartitionReport compute_partition(const Rational& t, long r, std::uint64_t limit, long j_max) {
  return compute_partition_range(t, r, 2, limit, j_max);
}

PartitionReport merge(const std::vector<PartitionReport>& parts) {
  if (parts.empty()) throw Error(Errc::InvalidArgument, "nothing to merge");
  PartitionReport out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto& p = parts[i];
    if (p.t != out.t || p.r != out.r || p.j_max != out.j_max)
      throw Error(Errc::InvalidArgument, "merging reports with different parameters");
    for (std::size_t j = 0; j < out.counts.size(); ++j) out.counts[j] += p.counts[j];
    out.overflow += p.overflow;
    out.total += p.total;
    out.excluded.insert(p.excluded.begin(), p.excluded.end());
    out.limit = std::max(out.limit, p.limit);
  }
  return out;
}

double empirical_density(const PartitionReport& report, long j) {
  if (report.total == 0) return 0.0;
  return static_cast<double>(report.counts.at(static_cast<std::size_t>(j))) / static_cast<double>(report.total);
}

std::vector<ComparisonRow> compare(const PartitionReport& report, const Prediction& pred) {
  if (!pred.supported) throw Error(Errc::UnsupportedPrediction, pred.note.empty() ? "no density law" : pred.note);
  if (pred.r != report.r) throw Error(Errc::InvalidArgument, "prediction and report use different r");
  std::vector<ComparisonRow> rows;
  const auto n = static_cast<double>(report.total);
  for (long j = 0; j <= report.j_max; ++j) {
    ComparisonRow row;
    row.j = j;
    row.count = report.counts[static_cast<std::size_t>(j)];
    row.empirical = empirical_density(report, j);
    row.predicted = pred.density(j);
    const double d = row.predicted.to_double();
    row.abs_error = std::fabs(row.empirical - d);
    const double var = n * d * (1 - d);
    row.z_score = var > 0 ? (static_cast<double>(row.count) - n * d) / std::sqrt(var) : 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace chi
