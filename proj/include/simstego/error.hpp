#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace simstego {

enum class Errc : std::uint8_t {
  // image / PGM
  BadMagic,
  MalformedHeader,
  MaxvalUnsupported,
  TruncatedData,
  OddDimension,
  InvalidDimensions,
  // bitstream
  FieldOverflow,
  StreamExhausted,
  EmptyStream,
  // decomposition / mapping
  NonCanonicalCode,
  InvalidPattern,
  // transforms
  LengthMismatch,
  ZeroValueCount,
  ValueCountOutOfRange,
  DuplicateValue,
  RankCountMismatch,
  InconsistentRanking,
  MalformedFormatFlag,
  MalformedWidth,
  CoefficientOutOfRange,
  CorruptBands,
  // embedding
  CapacityExceeded,
  InvalidPayload,
  // analysis
  ImageTooSmall,
  NoEstimate,
  InvalidArgument,
  // files
  Io,
};

enum class ErrorClass : std::uint8_t { Usage, Capacity, Parse, Io };

const char* errc_name(Errc code) noexcept;
ErrorClass error_class(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class CapacityError : public Error {
 public:
  CapacityError(std::uint64_t required, std::uint64_t available);
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t available() const noexcept { return available_; }

 private:
  std::uint64_t required_;
  std::uint64_t available_;
};

}  // namespace simstego
