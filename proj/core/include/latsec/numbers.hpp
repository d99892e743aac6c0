#ifndef LATSEC_NUMBERS_HPP
#define LATSEC_NUMBERS_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace latsec {

// Exact integer and rational carriers for enumerators, series coefficients
// and Gleason-style decompositions.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Working real type for theta evaluations and secrecy functions: 50
// significant decimal digits, exponent range far beyond double.
using HighReal = boost::multiprecision::cpp_bin_float_50;

HighReal pi_value();
HighReal sqrt_half();  // 1/sqrt(2), the conjectured minimizer of f_C

inline HighReal to_real(const BigInt& v) { return HighReal(v); }
inline HighReal to_real(const BigRational& v) {
    return HighReal(boost::multiprecision::numerator(v)) /
           HighReal(boost::multiprecision::denominator(v));
}

}  // namespace latsec

#endif
