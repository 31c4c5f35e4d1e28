#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sheaf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Every census quantity in range fits comfortably; p(200) ~ 4e12.
using Count = std::int64_t;

// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& r) { return r.str(); }

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

}  // namespace sheaf
