#pragma once

#include <cstdint>
#include <string>

#include "wilf/error.hpp"

namespace wilf {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    fail(ErrorKind::Overflow, std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    fail(ErrorKind::Overflow, std::to_string(a) + " - " + std::to_string(b));
  }
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    fail(ErrorKind::Overflow, std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

/// k * delta - conductor, the common shape of every Wilf-type quantity.
inline Int wilf_combination(Int k, Int delta, Int conductor) {
  return checked_sub(checked_mul(k, delta), conductor);
}

inline Int ceil_div(Int num, Int den) {
  return num / den + ((num % den != 0) && ((num < 0) == (den < 0)) ? 1 : 0);
}

}  // namespace wilf
