#include "simstego/error.hpp"

namespace simstego {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::BadMagic: return "BadMagic";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::MaxvalUnsupported: return "MaxvalUnsupported";
    case Errc::TruncatedData: return "TruncatedData";
    case Errc::OddDimension: return "OddDimension";
    case Errc::InvalidDimensions: return "InvalidDimensions";
    case Errc::FieldOverflow: return "FieldOverflow";
    case Errc::StreamExhausted: return "StreamExhausted";
    case Errc::EmptyStream: return "EmptyStream";
    case Errc::NonCanonicalCode: return "NonCanonicalCode";
    case Errc::InvalidPattern: return "InvalidPattern";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ZeroValueCount: return "ZeroValueCount";
    case Errc::ValueCountOutOfRange: return "ValueCountOutOfRange";
    case Errc::DuplicateValue: return "DuplicateValue";
    case Errc::RankCountMismatch: return "RankCountMismatch";
    case Errc::InconsistentRanking: return "InconsistentRanking";
    case Errc::MalformedFormatFlag: return "MalformedFormatFlag";
    case Errc::MalformedWidth: return "MalformedWidth";
    case Errc::CoefficientOutOfRange: return "CoefficientOutOfRange";
    case Errc::CorruptBands: return "CorruptBands";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::InvalidPayload: return "InvalidPayload";
    case Errc::ImageTooSmall: return "ImageTooSmall";
    case Errc::NoEstimate: return "NoEstimate";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

ErrorClass error_class(Errc code) noexcept {
  switch (code) {
    case Errc::CapacityExceeded:
      return ErrorClass::Capacity;
    case Errc::Io:
      return ErrorClass::Io;
    case Errc::InvalidPayload:
    case Errc::ImageTooSmall:
    case Errc::InvalidArgument:
      return ErrorClass::Usage;
    default:
      return ErrorClass::Parse;
  }
}

CapacityError::CapacityError(std::uint64_t required, std::uint64_t available)
    : Error(Errc::CapacityExceeded, "payload needs " + std::to_string(required) +
                                        " bits but only " + std::to_string(available) +
                                        " are available"),
      required_(required),
      available_(available) {}

}  // namespace simstego
