#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqdist {

enum class Errc {
  CompositeModulus,
  EvenModulus,
  ModulusTooSmall,
  ModulusTooLarge,
  ZeroInverse,
  CapExceeded,
  PairCapExceeded,
  FieldMismatch,
  RoundingDrift,
  EmptyOffzeroSupport,
  OddDimension,
  BadGenerator,
  SizeTooLarge,
  ParseError,
  DuplicatePoint,
  CoordinateOutOfRange,
  ConfigError,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// the CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fqdist
