#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nlf {

enum class Errc {
  DivisionByZero,
  UnresolvableSign,
  NotGalois,
  FieldMismatch,
  TraceZero,
  NotNormalized,
  ZeroShift,
  DimensionMismatch,
  TruncationMismatch,
  NonUnit,
  NonIntegerSupport,
  BoundMismatch,
  CapExceeded,
  NotMultiple,
  NotPrime,
  TruncationTooSmall,
  NotLatticeCharacter,
  QuadratureFailure,
  InvalidField,
  DomainUnsupported,
  ParseError,
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

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace nlf
