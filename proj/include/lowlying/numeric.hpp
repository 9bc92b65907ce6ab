#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lowlying {

/// Exact counts. Never overflows.
using BigInt = boost::multiprecision::cpp_int;

/// 50 decimal digits; used where double rounding would swamp a residual.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

inline std::string to_string(const BigInt& value) { return value.str(); }

/// 2^e as an exact integer.
inline BigInt pow2(unsigned e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

}  // namespace lowlying
