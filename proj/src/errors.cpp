#include "coverlat/errors.hpp"

namespace coverlat {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyBlock: return "EmptyBlock";
    case Errc::NotACover: return "NotACover";
    case Errc::DuplicateBlock: return "DuplicateBlock";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::BadIndex: return "BadIndex";
    case Errc::UniverseMismatch: return "UniverseMismatch";
    case Errc::NotAMember: return "NotAMember";
    case Errc::NotUnary: return "NotUnary";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::UnknownPredicate: return "UnknownPredicate";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace coverlat
