#pragma once

#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace seqfree {

/// Exact counts and series coefficients.
using big_int = boost::multiprecision::cpp_int;

/// Working real type for all asymptotic constants: 64 significant decimal digits.
using real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<64>,
                                           boost::multiprecision::et_off>;

inline constexpr int working_digits = std::numeric_limits<real>::digits10;

/// A real value together with the number of decimal digits it is good to.
struct HighPrecisionReal {
  real value;
  int digits = working_digits;
};

/// Combining two values keeps the weaker precision.
inline int combined_digits(const HighPrecisionReal& a, const HighPrecisionReal& b) {
  return a.digits < b.digits ? a.digits : b.digits;
}

inline real pi_r() { return boost::math::constants::pi<real>(); }

inline real golden_ratio() { return (1 + sqrt(real(5))) / 2; }

/// Decimal rendering with `digits` significant digits, no exponent for ordinary magnitudes.
inline std::string to_decimal(const real& x, int digits = working_digits - 4) {
  return x.str(digits);
}

inline std::string to_decimal(const big_int& x) { return x.str(); }

}  // namespace seqfree
