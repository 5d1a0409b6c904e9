#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace spanlab {

// Exact arithmetic backends. Shortest-path multiplicities grow combinatorially
// on grid-like graphs, and the projection calculus must telescope with zero
// tolerance, so both run on arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(std::int64_t num, std::int64_t den) { return Rat(BigInt(num), BigInt(den)); }

}  // namespace spanlab
