#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyparr {

enum class ErrorKind {
  MalformedRational,
  MalformedInput,
  DuplicateHyperplane,
  ZeroNormal,
  DimensionMismatch,
  IndexOutOfRange,
  FlatNotInPoset,
  RepeatedIndex,
  DegreeMismatch,
  ExpectedEssential,
  UnboundedRegion,
  DependentTuple,
  RegionMismatch,
  HyperplaneContainsFlat,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hyparr
