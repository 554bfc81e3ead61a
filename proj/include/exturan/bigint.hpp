#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace exturan {

// Exact non-negative count. All counting arithmetic is arbitrary precision;
// nothing in this library saturates, wraps, or touches floating point.
using CopyCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const CopyCount& v) { return v.str(); }

}  // namespace exturan
