#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fga {

enum class ErrorKind {
  Parse,
  GroupFile,
  NotFiniteType,
  CapExceeded,
  NotTorsion,
  NotConnected,
  NotASimplex,
  EmptyInput,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure surfaced by the library carries a kind so the CLI can map
/// it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fga
