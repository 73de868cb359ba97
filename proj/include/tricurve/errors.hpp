#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tricurve {

enum class ErrorKind {
  ZeroVector,
  CoincidentArguments,
  PointAtInfinity,
  WeightSumNotOne,
  LineAtInfinity,
  NotADirection,
  DegenerateFrame,
  InvalidTriangle,
  OnSideline,
  RightTriangle,
  OddCenterWithoutSides,
  ExhaustedRetries,
  UnknownCenter,
  DegeneratePointSet,
  DegenerateConic,
  DegenerateAtInfinity,
  FocusOnDirectrix,
  NotCollinear,
  ParabolicDegenerate,
  NoLinearComponent,
  BothVanishOnLine,
  DependentForms,
  ZeroRatio,
  SingularMatrix,
  UnknownScenario,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::CoincidentArguments: return "CoincidentArguments";
    case ErrorKind::PointAtInfinity: return "PointAtInfinity";
    case ErrorKind::WeightSumNotOne: return "WeightSumNotOne";
    case ErrorKind::LineAtInfinity: return "LineAtInfinity";
    case ErrorKind::NotADirection: return "NotADirection";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::InvalidTriangle: return "InvalidTriangle";
    case ErrorKind::OnSideline: return "OnSideline";
    case ErrorKind::RightTriangle: return "RightTriangle";
    case ErrorKind::OddCenterWithoutSides: return "OddCenterWithoutSides";
    case ErrorKind::ExhaustedRetries: return "ExhaustedRetries";
    case ErrorKind::UnknownCenter: return "UnknownCenter";
    case ErrorKind::DegeneratePointSet: return "DegeneratePointSet";
    case ErrorKind::DegenerateConic: return "DegenerateConic";
    case ErrorKind::DegenerateAtInfinity: return "DegenerateAtInfinity";
    case ErrorKind::FocusOnDirectrix: return "FocusOnDirectrix";
    case ErrorKind::NotCollinear: return "NotCollinear";
    case ErrorKind::ParabolicDegenerate: return "ParabolicDegenerate";
    case ErrorKind::NoLinearComponent: return "NoLinearComponent";
    case ErrorKind::BothVanishOnLine: return "BothVanishOnLine";
    case ErrorKind::DependentForms: return "DependentForms";
    case ErrorKind::ZeroRatio: return "ZeroRatio";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::UnknownScenario: return "UnknownScenario";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Typed failure raised by every operation in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by curve fitting when the incidence matrix is rank deficient.
/// Carries the rank and the indices of a maximal independent subset of
/// the input points.
class DegeneratePointSetError : public Error {
 public:
  DegeneratePointSetError(std::size_t rank, std::vector<std::size_t> independent,
                          std::size_t required)
      : Error(ErrorKind::DegeneratePointSet,
              "incidence rank " + std::to_string(rank) + " < " + std::to_string(required)),
        rank_(rank),
        independent_(std::move(independent)) {}

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<std::size_t>& independent_subset() const noexcept { return independent_; }

 private:
  std::size_t rank_;
  std::vector<std::size_t> independent_;
};

}  // namespace tricurve
