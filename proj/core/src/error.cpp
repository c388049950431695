#include "fqdist/error.hpp"

namespace fqdist {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::CompositeModulus: return "CompositeModulus";
    case Errc::EvenModulus: return "EvenModulus";
    case Errc::ModulusTooSmall: return "ModulusTooSmall";
    case Errc::ModulusTooLarge: return "ModulusTooLarge";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::PairCapExceeded: return "PairCapExceeded";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::RoundingDrift: return "RoundingDrift";
    case Errc::EmptyOffzeroSupport: return "EmptyOffzeroSupport";
    case Errc::OddDimension: return "OddDimension";
    case Errc::BadGenerator: return "BadGenerator";
    case Errc::SizeTooLarge: return "SizeTooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case Errc::ConfigError: return "ConfigError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace fqdist
