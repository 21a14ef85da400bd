#pragma once

#include <cstdint>

#include "tfbn/error.hpp"

// Overflow-checked int64 arithmetic. Every closed form in the library is a
// low-degree polynomial in the inputs, so checked machine integers are exact
// whenever they do not throw.
namespace tfbn::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

/// Exact halving; the caller guarantees evenness, violation is a logic error.
inline std::int64_t half_exact(std::int64_t a) {
  if (a % 2 != 0) fail(ErrorKind::InvalidInput, "expected an even intermediate value");
  return a / 2;
}

}  // namespace tfbn::checked
