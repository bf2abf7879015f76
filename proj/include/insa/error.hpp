#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace insa {

enum class ErrorKind {
  OutOfValidityRange,
  NonPhysical,
  NoConvergence,
  NotInTroposphere,
  OutOfDomain,
  ParseError,
  IncompleteGrid,
  NonMonotonicAxis,
  EmptyNode,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace insa
