#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace seqfree {

/// Li_2(x) = sum_{n>=1} x^n / n^2 for -1 <= x <= 1.
///
/// The power series is summed directly for |x| <= 1/2. Above 1/2 the
/// reflection Li_2(x) = pi^2/6 - log(x) log(1-x) - Li_2(1-x) is used, and below
/// -1/2 Landen's identity Li_2(x) = -Li_2(x/(x-1)) - log(1-x)^2 / 2.
template <class Real>
Real dilog(const Real& x) {
  using std::abs;
  using std::log;
  const Real pi2_6 = boost::math::constants::pi_sqr<Real>() / 6;
  if (x > 1 || x < -1) throw std::domain_error("dilog argument outside [-1, 1]");
  if (x == 1) return pi2_6;
  if (x == 0) return Real(0);
  const Real half = Real(1) / 2;
  if (x > half) return pi2_6 - log(x) * log(1 - x) - dilog(Real(1 - x));
  if (x < -half) {
    const Real l = log(1 - x);
    return -dilog(Real(x / (x - 1))) - l * l / 2;
  }
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real sum = 0, xn = x;
  for (int n = 1; n < 100000; ++n) {
    const Real term = xn / (Real(n) * n);
    sum += term;
    if (abs(term) <= eps * abs(sum)) break;
    xn *= x;
  }
  return sum;
}

}  // namespace seqfree
