#include "torifan/errors.hpp"

namespace torifan {

const char* err_name(Err e) {
  switch (e) {
    case Err::Overflow: return "Overflow";
    case Err::ZeroVector: return "ZeroVector";
    case Err::NotUnimodular: return "NotUnimodular";
    case Err::ZeroDenominator: return "ZeroDenominator";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::NotExceptional: return "NotExceptional";
    case Err::TooSmall: return "TooSmall";
    case Err::InvalidFan: return "InvalidFan";
    case Err::NotRealizable: return "NotRealizable";
    case Err::NonPositive: return "NonPositive";
    case Err::OutOfRange: return "OutOfRange";
    case Err::IntegerInput: return "IntegerInput";
    case Err::BadRational: return "BadRational";
    case Err::NotStrictlyConvex: return "NotStrictlyConvex";
    case Err::WrongOrientation: return "WrongOrientation";
    case Err::NotCoprime: return "NotCoprime";
    case Err::PEqualsOne: return "PEqualsOne";
    case Err::NotOneExceptional: return "NotOneExceptional";
    case Err::MissingStructure: return "MissingStructure";
    case Err::InvalidTarget: return "InvalidTarget";
    case Err::TypeMismatch: return "TypeMismatch";
    case Err::NotComplete: return "NotComplete";
    case Err::NotSmooth: return "NotSmooth";
    case Err::BoundsExceeded: return "BoundsExceeded";
    case Err::ParseError: return "ParseError";
    case Err::InternalContradiction: return "InternalContradiction";
  }
  return "UnknownError";
}

}  // namespace torifan
