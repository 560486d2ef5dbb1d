#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diamaug {

enum class Errc {
  OutOfRange,
  SelfLoop,
  ParseError,
  HeaderMismatch,
  DisconnectedInput,
  NotUVertex,
  EqualEndpoints,
  InvalidArgument,
  InconsistentMap,
  NotAugmenting,
  NotProper,
  ExistingEdge,
  RuleUnsound,
  NonTermination,
  UMinusNonEmpty,
};

const char* to_string(Errc code);

// Library-wide exception. `line` is 1-based and only set by the parsers.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Errc code_;
  std::size_t line_;
};

}  // namespace diamaug
