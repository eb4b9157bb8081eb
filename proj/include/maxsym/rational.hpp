#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace maxsym {

using BigInt = boost::multiprecision::cpp_int;
// canonical reduced form with positive denominator, arbitrary precision
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline long long to_ll(const BigInt& n) { return n.convert_to<long long>(); }

}  // namespace maxsym
