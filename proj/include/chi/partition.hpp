#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chi/classify.hpp"
#include "chi/exactnum.hpp"

namespace chi {

enum class ExclusionReason { IsTwo, EqualsR, DividesDenominator };

const char* exclusion_name(ExclusionReason r);

struct PartitionReport {
  Rational t;
  long r = 2;
  std::uint64_t limit = 0;
  long j_max = 8;
  std::vector<std::uint64_t> counts;  // j = 0..j_max
  std::uint64_t overflow = 0;          // j > j_max
  std::uint64_t total = 0;
  std::map<std::uint64_t, ExclusionReason> excluded;

  bool conserved() const;
};

/// Partition over primes in [lo, hi].  The range form is what workers run.
PartitionReport compute_partition_range(const Rational& t, long r, std::uint64_t lo, std::uint64_t hi,
                                        long j_max = 8);
PartitionReport compute_partition(const Rational& t, long r, std::uint64_t limit, long j_max = 8);

/// Sum of reports over disjoint ranges of the same (t, r, j_max).
PartitionReport merge(const std::vector<PartitionReport>& parts);

struct ComparisonRow {
  long j = 0;
  std::uint64_t count = 0;
  double empirical = 0;
  Rational predicted;
  double abs_error = 0;
  double z_score = 0;
};

/// Throws UnsupportedPrediction when pred is not supported.
std::vector<ComparisonRow> compare(const PartitionReport& report, const Prediction& pred);

/// Empirical density of level j (overflow excluded).
double empirical_density(const PartitionReport& report, long j);

}  // namespace chi
