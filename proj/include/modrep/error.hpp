#pragma once

#include <stdexcept>
#include <string>

namespace modrep {

enum class ErrorKind {
  NotPrime,
  TooLarge,
  EvenCharacteristic,
  ZeroElement,
  LevelMismatch,
  ProfileMismatch,
  SlotOutOfRange,
  IndexOutOfRange,
  ProfileTooSmall,
  ProfileOverflow,
  BadBinomial,
  NotDivisible,
  DegreeTooSmall,
  HypothesisViolated,
  NonTerminating,
  RangeError,
  FactorialNotInvertible,
  ParseError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace modrep
