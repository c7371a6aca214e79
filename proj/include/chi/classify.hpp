#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chi/exactnum.hpp"

namespace chi {

enum class Genericity { Generic, PlusSquare, MinusSquare };

struct PerPrimeClass {
  bool r_primitive = true;
  Genericity genericity = Genericity::Generic;
  std::optional<Rational> root;     // rational u with C_r(u) = t, when not r-primitive
  std::optional<Rational> scale_b;  // b with t^2 - 4 = +-r b^2
};

struct ParamClass {
  Rational t;
  std::optional<Rational> reducible;  // a > 0 with t^2 - 4 = a^2
  std::optional<Rational> circular;   // w > 0 with t^2 + w^2 = 4
  std::optional<Rational> cubic;      // b > 0 with t^2 - 4 = -3 b^2
  std::optional<Rational> a1, a2;     // (-t + 3b)/2, (-t - 3b)/2
  bool typeA = false;
  bool typeB = false;
  bool twin_primitive = false;
  bool two_generic = false;
  bool circular_primitive = false;
  bool cubic_primitive = false;
  std::map<long, PerPrimeClass> per_r;

  /// Per-r data, computed on demand for r outside the default list.
  PerPrimeClass at(long r) const;
};

inline const std::vector<long> kDefaultRs{2, 3, 5, 7, 11, 13};

bool is_excluded(const Rational& t);

/// Throws ExcludedParameter for t in {0, +-1, +-2}.
ParamClass classify(const Rational& t, const std::vector<long>& rs = kDefaultRs);

/// Rational roots u of C_r(u) = t (at most a few).
std::vector<Rational> chebyshev_rational_roots(const Rational& t, long r);
bool is_r_primitive(const Rational& t, long r);
PerPrimeClass classify_at(const Rational& t, long r);

/// ("twin", -t) always, ("a1", .), ("a2", .) when cubic, ("w", .) when circular.
std::vector<std::pair<std::string, Rational>> associates(const ParamClass& c);

/// Density law: explicit head values, then a geometric tail with ratio 1/r
/// that continues from the last head entry.
struct Prediction {
  long r = 0;
  long j_max = 8;  // default listing length
  std::vector<Rational> head;
  bool supported = false;
  bool conjectural = false;
  std::string source;  // short rule tag, e.g. "generic", "type_b"
  std::string note;    // why unsupported, when so

  Rational density(long j) const;
  std::vector<Rational> densities(long j_max) const;
  /// Mass of head plus the whole tail.  Equals 1 for supported predictions.
  Rational total_mass() const;
};

Prediction predicted_densities(const ParamClass& c, long r, long j_max = 8);
Prediction predicted_densities(const Rational& t, long r, long j_max = 8);

const char* genericity_name(Genericity g);

}  // namespace chi
