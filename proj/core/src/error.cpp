#include "addbase/error.hpp"

namespace addbase {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidDescription: return "InvalidDescription";
    case Errc::InvalidRange: return "InvalidRange";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotASubset: return "NotASubset";
    case Errc::NotAMember: return "NotAMember";
    case Errc::NotABasis: return "NotABasis";
    case Errc::EqualElements: return "EqualElements";
    case Errc::IdenticalSubsets: return "IdenticalSubsets";
    case Errc::EmptySet: return "EmptySet";
    case Errc::ParseError: return "ParseError";
    case Errc::GenerationExhausted: return "GenerationExhausted";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error(Errc::ParseError, "at position " + std::to_string(position) + ": " + what),
      position_(position) {}

}  // namespace addbase
