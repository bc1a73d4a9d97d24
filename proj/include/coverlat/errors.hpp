#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coverlat {

/// Error kinds raised by the library. The names double as the stable
/// identifiers printed by the CLI.
enum class Errc {
  EmptyBlock,
  NotACover,
  DuplicateBlock,
  UnknownElement,
  BadIndex,
  UniverseMismatch,
  NotAMember,
  NotUnary,
  SizeLimit,
  UnknownPredicate,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace coverlat
