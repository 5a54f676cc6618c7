#ifndef HVEC_ARITH_HPP
#define HVEC_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hvec {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with C(a, b) = 0 whenever b < 0 or b > a.
/// Negative `a` is treated the same way (no generalized binomials).
Integer binomial(long a, long b);

/// (-1)^e as an Integer.
inline Integer sign_power(long e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

inline std::string to_string(const Integer& v) { return v.str(); }
std::string to_string(const Rational& q);

}  // namespace hvec

#endif
