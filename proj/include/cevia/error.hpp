#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cevia {

enum class Errc {
  DivisionByZero,
  ParseError,
  // exact_geom
  ZeroVector,
  CoincidentPoints,
  CoincidentLines,
  MapsToZero,
  InfinitePoint,
  NotCollinear,
  UndefinedRatio,
  DegenerateConfiguration,
  SingularMap,
  // cevian_engine
  OnSideline,
  VertexInput,
  DegenerateContext,
  ZUndefined,
  // curve_engine
  NotOnCurve,
  IndeterminateA,
  NotElliptic,
  ToleranceExceeded,
  WrongCurve,
  ExceptionalPoint,
  SingularAt,
  // real_roots
  ZeroPolynomial,
  NotCertified,
};

std::string_view to_string(Errc code);

/// Typed failure raised by every fallible operation in the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cevia
