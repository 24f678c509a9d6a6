#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "errors.hpp"

namespace seqfree {

// f_k is the decreasing solution of f^k (1 - f) = x^k (1 - x) on [0, 1].
// t -> t^k (1 - t) rises on [0, k/(k+1)] and falls after, so f_k(x) is the
// preimage on the opposite side of the hump from x.

namespace detail {

// Bisection on an increasing function g over [lo, hi] for g = target.
template <class Real, class G>
Real bisect_increasing(G&& g, Real lo, Real hi, const Real& target, const Real& tol) {
  for (int it = 0; it < 2000 && hi - lo > tol; ++it) {
    const Real mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    if (g(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace detail

/// log f_k(x), given x and 1 - x separately so either end stays accurate.
///
/// Solves in log coordinates: for x below the hump the unknown is
/// L = log(1 - f), for x above it s = log f. Both maps are monotone on their
/// branch, and their brackets come from bounding the other factor of the
/// product by its branch limits.
template <class Real>
Real log_fk(int k, const Real& x, const Real& one_minus_x, const Real& tol) {
  using std::exp;
  using std::log;
  using std::log1p;
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(x > 0) || !(one_minus_x > 0)) throw std::domain_error("f_k is solved for 0 < x < 1 only");
  if (k == 1) return log(one_minus_x);
  const Real hump = Real(k) / (k + 1);
  if (x == hump) return log(hump);
  const Real c = k * log(x) + log(one_minus_x);
  if (x < hump) {
    // f in (hump, 1); unknown L = log(1 - f), equation L + k log(1 - e^L) = c.
    auto g = [k](const Real& L) { return L + k * log1p(-exp(L)); };
    const Real lo = c;
    Real hi = c - k * log(hump);
    const Real cap = -log(Real(k + 1));
    if (hi > cap) hi = cap;
    const Real L = detail::bisect_increasing<Real>(g, lo, hi, c, tol);
    return log1p(-exp(L));
  }
  // f in (0, hump); unknown s = log f, equation k s + log(1 - e^s) = c.
  auto g = [k](const Real& s) { return k * s + log1p(-exp(s)); };
  const Real lo = c / k;
  Real hi = (c + log(Real(k + 1))) / k;
  const Real cap = log(hump);
  if (hi > cap) hi = cap;
  return detail::bisect_increasing<Real>(g, lo, hi, c, tol);
}

/// f_k(x) for 0 < x < 1. For k = 1 this is exactly 1 - x.
template <class Real = double>
Real fk_solve(int k, const Real& x, const Real& tol = Real(1e-15)) {
  using std::exp;
  if (!(x > 0 && x < 1)) throw std::domain_error("f_k is solved for 0 < x < 1 only");
  if (k == 1) return 1 - x;
  return exp(log_fk<Real>(k, x, Real(1 - x), tol));
}

struct QuadratureResult {
  double value;
  double error_estimate;
  std::size_t levels;
};

namespace detail {

template <class F>
QuadratureResult tanh_sinh_checked(F&& f, double a, double b, double tol, const char* what) {
  boost::math::quadrature::tanh_sinh<double> integrator(15);
  double err = 0, l1 = 0;
  std::size_t levels = 0;
  const double v = integrator.integrate(f, a, b, std::sqrt(std::numeric_limits<double>::epsilon()) *
                                                     1e-3,
                                        &err, &l1, &levels);
  if (!(err <= tol))
    throw convergence_failure(std::string(what) + ": error estimate " + std::to_string(err) +
                              " above tolerance " + std::to_string(tol) + " (estimate " +
                              std::to_string(v) + ")");
  return {v, err, levels};
}

// Root bracket width for f_k inside quadrature; in log coordinates this is a
// relative accuracy for f and for 1 - f.
inline constexpr double fk_log_tol = 1e-17;

}  // namespace detail

/// lambda_k = -int_0^1 log f_k(x) dx / x, which equals pi^2 / (3k(k+1)).
///
/// Split at the hump k/(k+1). The integrand behaves like x^{k-1} at 0 and has a
/// logarithmic singularity at 1; the right piece receives 1 - x directly from
/// the integrator.
inline QuadratureResult lambda_k_quadrature(int k, double tol = 1e-8) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const double hump = static_cast<double>(k) / (k + 1);
  auto left = [k](double x) { return -log_fk<double>(k, x, 1 - x, detail::fk_log_tol) / x; };
  auto right = [k](double x, double xc) {
    const double omx = xc > 0 ? xc : 1 - x;
    return -log_fk<double>(k, x, omx, detail::fk_log_tol) / x;
  };
  auto a = detail::tanh_sinh_checked(left, 0.0, hump, tol / 2, "lambda_k quadrature");
  auto b = detail::tanh_sinh_checked(right, hump, 1.0, tol / 2, "lambda_k quadrature");
  return {a.value + b.value, a.error_estimate + b.error_estimate, std::max(a.levels, b.levels)};
}

/// gamma_k = -int_0^{1/2} log f_k(x) dx / (x (1 - x)).
inline QuadratureResult gamma_k_quadrature(int k, double tol = 1e-8) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  auto f = [k](double x) {
    return -log_fk<double>(k, x, 1 - x, detail::fk_log_tol) / (x * (1 - x));
  };
  return detail::tanh_sinh_checked(f, 0.0, 0.5, tol, "gamma_k quadrature");
}

/// pi^2 / (3k(k+1)).
inline double lambda_closed_form(int k) {
  return boost::math::constants::pi_sqr<double>() / (3.0 * k * (k + 1));
}

}  // namespace seqfree
