#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace addbase {

enum class Errc {
  InvalidDescription,
  InvalidRange,
  InvalidInput,
  NotASubset,
  NotAMember,
  NotABasis,
  EqualElements,
  IdenticalSubsets,
  EmptySet,
  ParseError,
  GenerationExhausted,
};

std::string_view to_string(Errc code) noexcept;

// Contract violation by the caller (bad input or unmet precondition).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Raised when a proven law (coprimality of d-values, finiteness of the
// essential family, ...) fails on a concrete input. Always a bug here.
class LawViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace addbase
