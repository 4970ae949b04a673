#pragma once

#include <string>

#include "doctest.h"
#include "torifan/errors.hpp"
#include "torifan/lattice.hpp"
#include "torifan/rational.hpp"

// Asserts that evaluating the expression raises a torifan::Error with the
// given code.  Varargs so constructor calls with braced lists parse.
#define CHECK_FAILS(code_, ...)                                                              \
  do {                                                                                       \
    try {                                                                                    \
      (void)(__VA_ARGS__);                                                                   \
      FAIL_CHECK("expected " << torifan::err_name(torifan::Err::code_) << " from "           \
                             << #__VA_ARGS__);                                               \
    } catch (const torifan::Error& e_) {                                                     \
      CHECK_MESSAGE(std::string(torifan::err_name(e_.code())) ==                             \
                        torifan::err_name(torifan::Err::code_),                              \
                    "raised instead: " << e_.what());                                        \
    }                                                                                        \
  } while (0)

namespace torifan {

inline doctest::String toString(const Vec2& v) {
  return ("(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")").c_str();
}

inline doctest::String toString(const Vec3& v) {
  return ("(" + std::to_string(v.x) + "," + std::to_string(v.y) + "," + std::to_string(v.z) + ")")
      .c_str();
}

inline doctest::String toString(const Rational& r) { return r.str().c_str(); }

}  // namespace torifan
