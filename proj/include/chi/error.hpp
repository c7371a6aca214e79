#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chi {

enum class Errc {
  ParseError,
  ExcludedParameter,
  DenominatorDivisible,
  NotUnitDet,
  BoundViolation,
  NotCubic,
  NotCircular,
  BadPrime,
  PrimeTooLarge,
  UnsupportedPrediction,
  TorsionTimesPower,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace chi
