#pragma once

#include <stdexcept>
#include <string>

namespace torifan {

// Every failure mode carries a stable code so callers (and the CLI) can react
// without parsing message text.
enum class Err {
  Overflow,
  ZeroVector,
  NotUnimodular,
  ZeroDenominator,
  IndexOutOfRange,
  NotExceptional,
  TooSmall,
  InvalidFan,
  NotRealizable,
  NonPositive,
  OutOfRange,
  IntegerInput,
  BadRational,
  NotStrictlyConvex,
  WrongOrientation,
  NotCoprime,
  PEqualsOne,
  NotOneExceptional,
  MissingStructure,
  InvalidTarget,
  TypeMismatch,
  NotComplete,
  NotSmooth,
  BoundsExceeded,
  ParseError,
  InternalContradiction,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

  Err code() const { return code_; }

  // Exit status classes used by the CLI: 1 domain error, 2 unparseable input,
  // 3 broken internal invariant (a bug, never a bad input).
  int exit_code() const {
    if (code_ == Err::ParseError) return 2;
    if (code_ == Err::InternalContradiction) return 3;
    return 1;
  }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace torifan
