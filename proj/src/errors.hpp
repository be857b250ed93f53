#pragma once

#include <stdexcept>
#include <string>

namespace liecurve {

enum class ErrorCode {
  InvalidArgument,
  Io,
  Parse,
  InsufficientSamples,
  NonUnitSpeed,
  GeodesicDegeneracy,
  IrregularCurve,
  ConstantH,
  NotSlantHelix,
  VanishingH,
  CuspInRange,
  DomainExceedsSingularity,
};

/// All failures in the core surface as Error; the C API maps code -> status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Curvature below kappa_min: the Frenet frame is undefined.
/// `everywhere` distinguishes a genuine geodesic from a local inflection.
class GeodesicDegeneracyError : public Error {
 public:
  GeodesicDegeneracyError(const std::string& what, bool everywhere)
      : Error(ErrorCode::GeodesicDegeneracy, what), everywhere_(everywhere) {}
  bool everywhere() const { return everywhere_; }

 private:
  bool everywhere_;
};

}  // namespace liecurve
